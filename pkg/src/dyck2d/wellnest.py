"""Well-nested Dyck pictures and the Chinese-boxes comparison language."""

from __future__ import annotations

from dataclasses import dataclass

from .crossword import in_DC
from .dyck1d import Pairing, Word, is_dyck
from .errors import ContainsNeutral, LengthMismatch, NotDyckBorder
from .grid import (
    BULLET,
    BULLET_SYM,
    Picture,
    Symbol,
    empty_picture,
    hcat,
    homogeneous,
    picture_from_rows,
    simplot_partition,
    subpicture,
    sym,
    vcat,
    Domain,
)


def _h_r(s: Symbol) -> Symbol:
    """Bottom-border image of a top-border letter: a -> c, b -> d."""
    return sym({"a": "c", "b": "d"}[s.role], s.index)


def _h_c(s: Symbol) -> Symbol:
    """Right-border image of a left-border letter: a -> b, c -> d.

    Only this mapping keeps the side columns Dyck; the a -> c variant would
    duplicate the left border.
    """
    return sym({"a": "b", "c": "d"}[s.role], s.index)


@dataclass(frozen=True, slots=True)
class Accretion:
    """Frame recipe: corner index, border words, and the framed core."""

    index: int
    w_r: Word
    w_c: Word
    core: Picture


def _check_border(w: Word, roles: str, pr: Pairing, uniform_index: int | None) -> None:
    for s in w:
        if s.role not in roles:
            raise NotDyckBorder(f"border letter {s.role!r} not in {{{roles}}}")
        if uniform_index is not None and s.index != uniform_index:
            raise NotDyckBorder(f"border index {s.index} != {uniform_index}")
    if w and not is_dyck(w, pr):
        raise NotDyckBorder("border word is not Dyck over its pairs")


def nesting_accretion(acc: Accretion, mixed_border_indices: bool = True) -> Picture:
    """Frame the core with a corner quadruple and Dyck border words."""
    core = acc.core
    if len(acc.w_r) != core.cols or len(acc.w_c) != core.rows:
        raise LengthMismatch(
            f"|w_r|={len(acc.w_r)} |w_c|={len(acc.w_c)} vs core {core.rows}x{core.cols}"
        )
    k = max(core.k, acc.index)
    uniform = None if mixed_border_indices else acc.index
    _check_border(acc.w_r, "ab", Pairing("Row", k), uniform)
    _check_border(acc.w_c, "ac", Pairing("Col", k), uniform)
    top = [sym("a", acc.index), *acc.w_r, sym("b", acc.index)]
    bottom = [sym("c", acc.index), *(_h_r(s) for s in acc.w_r), sym("d", acc.index)]
    middle = [
        [acc.w_c[r], *core.row_word(r + 1), _h_c(acc.w_c[r])]
        for r in range(core.rows)
    ]
    return picture_from_rows([top, *middle, bottom], k)


def _frame_core(p: Picture, mixed_border_indices: bool) -> Picture | None:
    """The unique accretion core determined by p's frame, or None."""
    if p.rows < 2 or p.cols < 2:
        return None
    nw = p.cell(1, 1)
    if nw.role != "a":
        return None
    i = nw.index
    if (
        p.cell(1, p.cols) != sym("b", i)
        or p.cell(p.rows, 1) != sym("c", i)
        or p.cell(p.rows, p.cols) != sym("d", i)
    ):
        return None
    if (p.rows == 2) != (p.cols == 2):
        return None  # a (0, n) or (n, 0) core is not a picture
    w_r = p.row_word(1)[1:-1]
    w_c = tuple(p.cell(r, 1) for r in range(2, p.rows))
    try:
        _check_border(w_r, "ab", Pairing("Row", p.k), None if mixed_border_indices else i)
        _check_border(w_c, "ac", Pairing("Col", p.k), None if mixed_border_indices else i)
    except NotDyckBorder:
        return None
    if p.row_word(p.rows)[1:-1] != tuple(_h_r(s) for s in w_r):
        return None
    if tuple(p.cell(r, p.cols) for r in range(2, p.rows)) != tuple(_h_c(s) for s in w_c):
        return None
    if p.rows == 2:
        return empty_picture(p.k)
    return subpicture(p, Domain(2, 2, p.rows - 1, p.cols - 1))


_dw_cache: dict[tuple, bool] = {}


def in_DW(p: Picture, mixed_border_indices: bool = True) -> bool:
    """Least-fixpoint decision for the well-nested Dyck language.

    p is well-nested iff it is empty, or it is the nesting accretion of a
    well-nested core (the frame determines the border words uniquely), or it
    partitions into at least two well-nested subpictures.  Crossword
    membership is a cheap necessary condition used to prune the search.
    """
    if p.is_empty:
        return True
    key = (p.rows, p.cols, p.cells, mixed_border_indices)
    cached = _dw_cache.get(key)
    if cached is not None:
        return cached
    result = False
    if (
        p.rows >= 2
        and p.cols >= 2
        and p.rows % 2 == 0
        and p.cols % 2 == 0
        and all(s.is_corner for s in p.cells)
        and in_DC(p)
    ):
        core = _frame_core(p, mixed_border_indices)
        if core is not None and in_DW(core, mixed_border_indices):
            result = True
        else:
            member = lambda q: in_DW(q, mixed_border_indices)
            result = simplot_partition(p, member, min_domains=2) is not None
    _dw_cache[key] = result
    return result


def chinese_accretion(p: Picture) -> Picture:
    """Frame p with a corner quadruple and bullet sides."""
    if any(s.is_neutral for s in p.cells):
        raise ContainsNeutral("Chinese boxes use corners and bullets only")
    if p.is_empty:
        return picture_from_rows([[sym("a", 1), sym("b", 1)], [sym("c", 1), sym("d", 1)]])
    top = hcat(
        homogeneous(sym("a", 1), 1, 1),
        homogeneous(BULLET_SYM, 1, p.cols),
        homogeneous(sym("b", 1), 1, 1),
    )
    mid = hcat(homogeneous(BULLET_SYM, p.rows, 1), p, homogeneous(BULLET_SYM, p.rows, 1))
    bottom = hcat(
        homogeneous(sym("c", 1), 1, 1),
        homogeneous(BULLET_SYM, 1, p.cols),
        homogeneous(sym("d", 1), 1, 1),
    )
    return vcat(top, mid, bottom)


_db_cache: dict[tuple, bool] = {}


def _db_frame_core(p: Picture) -> Picture | None:
    if p.rows < 2 or p.cols < 2:
        return None
    if (
        p.cell(1, 1) != sym("a", 1)
        or p.cell(1, p.cols) != sym("b", 1)
        or p.cell(p.rows, 1) != sym("c", 1)
        or p.cell(p.rows, p.cols) != sym("d", 1)
    ):
        return None
    if (p.rows == 2) != (p.cols == 2):
        return None
    border = [
        *p.row_word(1)[1:-1],
        *p.row_word(p.rows)[1:-1],
        *(p.cell(r, 1) for r in range(2, p.rows)),
        *(p.cell(r, p.cols) for r in range(2, p.rows)),
    ]
    if any(s != BULLET_SYM for s in border):
        return None
    if p.rows == 2:
        return empty_picture(p.k)
    return subpicture(p, Domain(2, 2, p.rows - 1, p.cols - 1))


def in_DB(p: Picture) -> bool:
    """Chinese-boxes membership: accretion plus plain concatenation closure."""
    if p.is_empty:
        return True
    key = (p.rows, p.cols, p.cells)
    cached = _db_cache.get(key)
    if cached is not None:
        return cached
    result = False
    core = _db_frame_core(p)
    if core is not None and in_DB(core):
        result = True
    if not result:
        for j in range(1, p.cols):
            if in_DB(subpicture(p, Domain(1, 1, p.rows, j))) and in_DB(
                subpicture(p, Domain(1, j + 1, p.rows, p.cols))
            ):
                result = True
                break
    if not result:
        for i in range(1, p.rows):
            if in_DB(subpicture(p, Domain(1, 1, i, p.cols))) and in_DB(
                subpicture(p, Domain(i + 1, 1, p.rows, p.cols))
            ):
                result = True
                break
    _db_cache[key] = result
    return result
