"""Neutralization rewriting: DN membership and the precedence relation."""

from __future__ import annotations

import graphlib
import json
from dataclasses import dataclass

from .crossword import Circuit, is_quaternate, picture_circuits
from .errors import NotQuaternate, StaleRedex, ThreeCornerAnomaly
from .grid import Domain, N, Picture, sym

Pos = tuple[int, int]


@dataclass(frozen=True, slots=True)
class Redex:
    """A rectangle with corner quadruple i and all-neutral interior."""

    domain: Domain
    index: int


@dataclass(frozen=True, slots=True)
class Decision:
    member: bool
    trace: tuple[Redex, ...]

    def trace_json(self) -> str:
        return json.dumps(
            [
                {"domain": list(r.domain.as_tuple()), "index": r.index, "step_number": n}
                for n, r in enumerate(self.trace, start=1)
            ]
        )


def _matches_redex(p: Picture, d: Domain, index: int) -> bool:
    if d.bottom > p.rows or d.right > p.cols or d.rows < 2 or d.cols < 2:
        return False
    corners = {
        (d.top, d.left): "a",
        (d.top, d.right): "b",
        (d.bottom, d.left): "c",
        (d.bottom, d.right): "d",
    }
    for (i, j), role in corners.items():
        if p.cell(i, j) != sym(role, index):
            return False
    for i in range(d.top, d.bottom + 1):
        for j in range(d.left, d.right + 1):
            if (i, j) not in corners and not p.cell(i, j).is_neutral:
                return False
    return True


def find_redexes(p: Picture) -> list[Redex]:
    """All rewritable rectangles, sorted by (left, top, right, bottom).

    Column-major order matches the sequence of the worked 4x6 reduction:
    its first step is the inner rectangle at (2,2), not the one at (1,4).
    """
    out = []
    for top in range(1, p.rows):
        for left in range(1, p.cols):
            nw = p.cell(top, left)
            if nw.role != "a":
                continue
            for bottom in range(top + 1, p.rows + 1):
                if p.cell(bottom, left).role == "c" and p.cell(bottom, left).index == nw.index:
                    for right in range(left + 1, p.cols + 1):
                        d = Domain(top, left, bottom, right)
                        if _matches_redex(p, d, nw.index):
                            out.append(Redex(d, nw.index))
    out.sort(key=lambda r: (r.domain.left, r.domain.top, r.domain.right, r.domain.bottom))
    return out


def apply_step(p: Picture, r: Redex) -> Picture:
    """Overwrite the redex rectangle with neutral cells."""
    if not _matches_redex(p, r.domain, r.index):
        raise StaleRedex(f"{r.domain.as_tuple()} no longer matches")
    cells = list(p.cells)
    for i in range(r.domain.top, r.domain.bottom + 1):
        for j in range(r.domain.left, r.domain.right + 1):
            cells[(i - 1) * p.cols + (j - 1)] = N
    return Picture(p.rows, p.cols, p.k, tuple(cells))


def _greedy(p: Picture) -> Decision:
    trace = []
    while True:
        redexes = find_redexes(p)
        if not redexes:
            break
        r = redexes[0]
        p = apply_step(p, r)
        trace.append(r)
    return Decision(all(s.is_neutral for s in p.cells), tuple(trace))


def _exhaustive(p: Picture) -> Decision:
    dead: set[tuple] = set()

    def search(q: Picture) -> tuple[Redex, ...] | None:
        if all(s.is_neutral for s in q.cells):
            return ()
        if q.cells in dead:
            return None
        for r in find_redexes(q):
            rest = search(apply_step(q, r))
            if rest is not None:
                return (r,) + rest
        dead.add(q.cells)
        return None

    trace = search(p)
    return Decision(trace is not None, trace or ())


def in_DN(p: Picture, strategy: str = "greedy") -> Decision:
    """Decide neutralizability.

    greedy applies the first redex in (left, top, right, bottom) order until
    fixpoint; exhaustive backtracks over all redex orders with memoization on
    dead states and serves as the completeness oracle.  The paper-claimed
    order independence (the two always agree) is exercised by the test suite
    rather than re-checked on every call.
    """
    if strategy == "greedy":
        return _greedy(p)
    if strategy == "exhaustive":
        return _exhaustive(p)
    raise ValueError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True, slots=True)
class PrecedenceGraph:
    """Rectangles of a quaternate picture with neutralization-priority edges."""

    rectangles: tuple[Circuit, ...]
    priority_edges: frozenset[tuple[Pos, Pos]]

    def precedence(self) -> frozenset[tuple[Pos, Pos]]:
        """Transitive closure of the priority relation."""
        succ: dict[Pos, set[Pos]] = {r.northwest: set() for r in self.rectangles}
        for a, b in self.priority_edges:
            succ[a].add(b)
        closed = set(self.priority_edges)
        changed = True
        while changed:
            changed = False
            for a, b in list(closed):
                for c in succ[b]:
                    if (a, c) not in closed:
                        closed.add((a, c))
                        succ[a].add(c)
                        changed = True
        return frozenset(closed)

    def is_acyclic(self) -> bool:
        graph: dict[Pos, set[Pos]] = {r.northwest: set() for r in self.rectangles}
        for a, b in self.priority_edges:
            graph[b].add(a)
        try:
            list(graphlib.TopologicalSorter(graph).static_order())
            return True
        except graphlib.CycleError:
            return False

    def to_dot(self) -> str:
        lines = ["digraph precedence {"]
        for r in self.rectangles:
            i, j = r.northwest
            lines.append(f'  "{i},{j}";')
        for (a, b) in sorted(self.priority_edges):
            lines.append(f'  "{a[0]},{a[1]}" -> "{b[0]},{b[1]}";')
        lines.append("}")
        return "\n".join(lines)


def _bounding_box(r: Circuit) -> tuple[int, int, int, int]:
    rows = [i for i, _ in r.nodes]
    cols = [j for _, j in r.nodes]
    return min(rows), min(cols), max(rows), max(cols)


def priority_graph(p: Picture) -> PrecedenceGraph:
    """Priority edges by corner-in-box counting over the rectangles of p.

    Rectangle alpha has priority over beta (edge alpha -> beta, alpha must be
    neutralized first) when 1, 2 or 4 of alpha's corners lie inside beta's
    bounding box or on its sides; a count of 3 is impossible and asserted.
    """
    if not is_quaternate(p):
        raise NotQuaternate("precedence is defined for quaternate pictures")
    rects = tuple(picture_circuits(p))
    edges = set()
    boxes = {r.northwest: _bounding_box(r) for r in rects}
    for alpha in rects:
        for beta in rects:
            if alpha is beta:
                continue
            top, left, bottom, right = boxes[beta.northwest]
            inside = sum(
                1
                for (i, j) in alpha.nodes
                if top <= i <= bottom and left <= j <= right
            )
            if inside == 3:
                raise ThreeCornerAnomaly(
                    f"{alpha.northwest} has 3 corners inside {beta.northwest}"
                )
            if inside in (1, 2, 4):
                edges.add((alpha.northwest, beta.northwest))
    return PrecedenceGraph(rects, frozenset(edges))


def in_DN_quaternate(p: Picture) -> bool:
    """Neutralizable iff the precedence relation is acyclic."""
    return priority_graph(p).is_acyclic()
