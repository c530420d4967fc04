"""1D Dyck machinery over the row and column alphabets.

The same four-letter alphabet carries two matching disciplines: rows pair
(a_i, b_i) and (c_i, d_i); columns pair (a_i, c_i) and (b_i, d_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import NeutralNotAllowed, NotDyck, OddLength
from .grid import N, Symbol, parse_picture, sym

Word = tuple[Symbol, ...]

_ROW_CLOSE = {"a": "b", "c": "d"}
_COL_CLOSE = {"a": "c", "b": "d"}


@dataclass(frozen=True, slots=True)
class Pairing:
    """Matching discipline: kind is "Row" or "Col", over indices 1..k."""

    kind: str
    k: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("Row", "Col"):
            raise ValueError(f"unknown pairing kind {self.kind!r}")

    @property
    def _close_map(self) -> dict[str, str]:
        return _ROW_CLOSE if self.kind == "Row" else _COL_CLOSE

    def is_open(self, s: Symbol) -> bool:
        return s.role in self._close_map

    def close_of(self, s: Symbol) -> Symbol:
        """The closing symbol matching an opening one."""
        return sym(self._close_map[s.role], s.index)

    def matches(self, open_: Symbol, close: Symbol) -> bool:
        return self.is_open(open_) and self.close_of(open_) == close


ROW = Pairing("Row", 1)
COL = Pairing("Col", 1)


def parse_word(text: str, k: int = 1) -> Word:
    """Parse a word with the same token syntax as picture rows."""
    p = parse_picture(text, k)
    if p.rows > 1:
        raise ValueError("a word is a single line")
    return p.cells


def word_text(w: Sequence[Symbol], k: int = 1) -> str:
    sep = " " if k > 1 else ""
    return sep.join(s.text(k) for s in w)


def is_dyck(w: Sequence[Symbol], pr: Pairing) -> bool:
    """Single left-to-right stack pass; neutral symbols are rejected."""
    stack: list[Symbol] = []
    for pos, s in enumerate(w, start=1):
        if s.is_neutral:
            raise NeutralNotAllowed(f"neutral at position {pos}")
        if pr.is_open(s):
            stack.append(s)
        elif stack and pr.matches(stack[-1], s):
            stack.pop()
        else:
            return False
    return not stack


def match_positions(w: Sequence[Symbol], pr: Pairing) -> list[tuple[int, int]]:
    """Matched 1-based index pairs (open < close), sorted by closing position."""
    stack: list[tuple[Symbol, int]] = []
    pairs: list[tuple[int, int]] = []
    for pos, s in enumerate(w, start=1):
        if s.is_neutral:
            raise NeutralNotAllowed(f"neutral at position {pos}")
        if pr.is_open(s):
            stack.append((s, pos))
        elif stack and pr.matches(stack[-1][0], s):
            pairs.append((stack.pop()[1], pos))
        else:
            raise NotDyck(word_text(w, pr.k))
    if stack:
        raise NotDyck(word_text(w, pr.k))
    return pairs


def neutralize_word(w: Sequence[Symbol], pr: Pairing) -> bool:
    """Whether w rewrites to all-neutral by the word neutralization rule.

    A redex is an opening symbol, an even-length run of neutrals, and the
    matching closing symbol; it rewrites to neutrals.  Redexes never overlap,
    so the fixpoint is order-independent.  Odd neutral runs cannot arise from
    neutral-free words and a lone neutral inside a redex would break the
    even-block shape, so odd runs are never bridged.
    """
    letters = list(w)
    n = len(letters)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < n:
            s = letters[i]
            if s.is_neutral or not pr.is_open(s):
                i += 1
                continue
            j = i + 1
            while j < n and letters[j].is_neutral:
                j += 1
            if j < n and (j - i - 1) % 2 == 0 and pr.matches(s, letters[j]):
                for t in range(i, j + 1):
                    letters[t] = N
                changed = True
                i = j + 1
            else:
                i += 1
    return all(s.is_neutral for s in letters)


def prime_factorize(w: Sequence[Symbol], pr: Pairing) -> list[Word]:
    """Unique decomposition into prime Dyck factors (splits at stack-empty points)."""
    if not is_dyck(w, pr):
        raise NotDyck(word_text(w, pr.k))
    factors: list[Word] = []
    depth = 0
    start = 0
    for pos, s in enumerate(w):
        depth += 1 if pr.is_open(s) else -1
        if depth == 0:
            factors.append(tuple(w[start : pos + 1]))
            start = pos + 1
    return factors


def _letters_sorted(pr: Pairing) -> list[Symbol]:
    roles = "abcd"
    return [sym(r, i) for r in roles for i in range(1, pr.k + 1)]


def enumerate_dyck(n: int, pr: Pairing) -> list[Word]:
    """All Dyck words of length n under pr, in lexicographic order.

    Lexicographic order is a < b < c < d with indices ascending inside each
    letter.  The count is Catalan(n/2) * (2k)^(n/2).
    """
    if n < 0 or n % 2:
        raise OddLength(f"no Dyck words of length {n}")
    alphabet = _letters_sorted(pr)
    out: list[Word] = []
    prefix: list[Symbol] = []

    def extend(stack: list[Symbol]) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        remaining = n - len(prefix)
        for s in alphabet:
            if pr.is_open(s):
                if len(stack) + 1 > remaining - 1:
                    continue
                prefix.append(s)
                stack.append(s)
                extend(stack)
                stack.pop()
                prefix.pop()
            elif stack and pr.matches(stack[-1], s):
                top = stack.pop()
                prefix.append(s)
                extend(stack)
                prefix.pop()
                stack.append(top)

    extend([])
    return out
