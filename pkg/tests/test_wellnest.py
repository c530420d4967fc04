import pytest
from hypothesis import given, settings, strategies as st

from dyck2d.crossword import in_DC
from dyck2d.dyck1d import Pairing, enumerate_dyck, parse_word
from dyck2d.errors import ContainsNeutral, LengthMismatch, NotDyckBorder
from dyck2d.grid import empty_picture, parse_picture, render_picture
from dyck2d.lab import enumerate_dc
from dyck2d.wellnest import (
    Accretion,
    chinese_accretion,
    in_DB,
    in_DW,
    nesting_accretion,
)

from oracles import oracle_dw_set


def dyck_over(n, roles, kind):
    """Dyck words of length n restricted to an opening/closing role pair."""
    return [
        w
        for w in enumerate_dyck(n, Pairing(kind, 1))
        if all(s.role in roles for s in w)
    ]


border_pairs = st.integers(0, 2).flatmap(
    lambda hr: st.integers(0, 2).flatmap(
        lambda hc: st.tuples(
            st.sampled_from(dyck_over(2 * hr, "ab", "Row") or [()]),
            st.sampled_from(dyck_over(2 * hc, "ac", "Col") or [()]),
        )
    )
)


class TestNestingAccretion:
    def test_empty_core(self):
        p = nesting_accretion(Accretion(1, (), (), empty_picture()))
        assert render_picture(p) == "ab\ncd"

    def test_framed_block(self):
        core = parse_picture("ab\ncd")
        p = nesting_accretion(Accretion(1, parse_word("ab"), parse_word("ac"), core))
        assert render_picture(p) == "aabb\naabb\nccdd\nccdd"

    def test_border_images(self):
        core = parse_picture("abab\ncdcd")
        w_r = parse_word("aabb")
        w_c = parse_word("ac")
        p = nesting_accretion(Accretion(1, w_r, w_c, core))
        assert render_picture(p) == "aaabbb\naababb\nccdcdd\ncccddd"

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            nesting_accretion(Accretion(1, parse_word("ab"), (), empty_picture()))

    def test_bad_border_letters(self):
        core = parse_picture("ab\ncd")
        with pytest.raises(NotDyckBorder):
            nesting_accretion(Accretion(1, parse_word("cd"), parse_word("ac"), core))
        with pytest.raises(NotDyckBorder):
            nesting_accretion(Accretion(1, parse_word("ab"), parse_word("ab"), core))

    def test_non_dyck_border(self):
        core = parse_picture("ab\ncd")
        with pytest.raises(NotDyckBorder):
            nesting_accretion(Accretion(1, parse_word("ba"), parse_word("ac"), core))

    def test_uniform_index_switch(self):
        core = parse_picture("a1 b1\nc1 d1", k=2)
        acc = Accretion(2, parse_word("a1 b1", k=2), parse_word("a1 c1", k=2), core)
        framed = nesting_accretion(acc)  # mixed indices allowed by default
        assert framed.cell(1, 1).index == 2 and framed.cell(1, 2).index == 1
        with pytest.raises(NotDyckBorder):
            nesting_accretion(acc, mixed_border_indices=False)

    @settings(max_examples=60, deadline=None)
    @given(border_pairs)
    def test_accretions_are_well_nested_crosswords(self, borders):
        w_r, w_c = borders
        core = parse_picture("ab\ncd") if (w_r or w_c) else empty_picture()
        if len(w_r) != core.cols or len(w_c) != core.rows:
            return
        p = nesting_accretion(Accretion(1, w_r, w_c, core))
        assert in_DC(p)
        assert in_DW(p)


class TestInDW:
    def test_empty(self):
        assert in_DW(empty_picture())

    def test_minimal(self):
        assert in_DW(parse_picture("ab\ncd"))

    def test_fixture_flags(self, fx):
        assert in_DW(fx["fig1_left"])
        assert not in_DW(fx["p_N"])
        assert not in_DW(fx["fig2"])
        assert not in_DW(fx["example1"])
        assert not in_DW(fx["fig3_left"])

    def test_concatenations_are_well_nested(self):
        from dyck2d.grid import hcat, vcat

        block = parse_picture("ab\ncd")
        assert in_DW(hcat(block, block))
        assert in_DW(vcat(block, block, block))

    def test_odd_sizes_rejected(self):
        assert not in_DW(parse_picture("ab"))

    def test_matches_bottom_up_oracle(self):
        oracle = oracle_dw_set(4, 4)
        for rows, cols in ((2, 2), (2, 4), (4, 2), (4, 4)):
            for p in enumerate_dc(rows, cols):
                assert in_DW(p) == ((p.rows, p.cols, p.cells) in oracle), render_picture(p)


class TestChineseBoxes:
    def test_accretion_of_empty(self):
        assert render_picture(chinese_accretion(empty_picture())) == "ab\ncd"

    def test_accretion_frames_with_bullets(self):
        p = chinese_accretion(parse_picture("ab\ncd"))
        assert render_picture(p) == "a••b\n•ab•\n•cd•\nc••d"

    def test_neutral_rejected(self):
        with pytest.raises(ContainsNeutral):
            chinese_accretion(parse_picture("aNb\ncNd"))

    def test_fig1_mid_is_a_chinese_box(self, fx):
        assert in_DB(fx["fig1_mid"])

    def test_membership(self):
        from dyck2d.grid import hcat

        box = chinese_accretion(empty_picture())
        assert in_DB(box)
        assert in_DB(hcat(box, box))
        assert in_DB(chinese_accretion(hcat(box, box)))
        assert not in_DB(parse_picture("ba\ndc"))
        assert not in_DB(parse_picture("a•b\nc•d".replace("•", "*")))

    def test_empty(self):
        assert in_DB(empty_picture())
