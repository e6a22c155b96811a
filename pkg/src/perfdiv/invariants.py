"""Exact clique number, stability number, chromatic number and friends."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import Graph, GraphError, bits, check_cap, complement, lowest, popcount, to_set


@dataclass(frozen=True)
class Coloring:
    """A proper coloring; ``assignment[v]`` is the color of vertex ``v``."""

    assignment: tuple[int, ...]
    k: int

    def classes(self) -> list[frozenset[int]]:
        return [frozenset(v for v, c in enumerate(self.assignment) if c == i) for i in range(self.k)]

    def is_proper_for(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        if any(not 0 <= c < self.k for c in self.assignment):
            return False
        return all(self.assignment[u] != self.assignment[v] for u, v in g.edges())


# -- cliques -----------------------------------------------------------------

def max_clique_mask(g: Graph, within: int | None = None) -> int:
    """Lexicographically least maximum clique inside ``within`` (a bitmask)."""
    rows = g.rows
    cand0 = g.vertex_mask if within is None else within
    best = 0
    best_size = 0

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        if size > best_size:
            best, best_size = clique, size
        while cand:
            if size + popcount(cand) <= best_size:
                return
            v = lowest(cand)
            cand &= cand - 1
            expand(clique | 1 << v, size + 1, cand & rows[v])

    expand(0, 0, cand0)
    return best


def omega(g: Graph) -> tuple[int, frozenset[int]]:
    """Clique number with its lexicographically least witness; 0 for the empty graph."""
    w = max_clique_mask(g)
    assert g.is_clique_mask(w)
    return popcount(w), to_set(w)


def alpha(g: Graph) -> tuple[int, frozenset[int]]:
    return omega(complement(g))


def all_cliques_iter(g: Graph) -> Iterator[frozenset[int]]:
    """Every clique, the empty one first, in lexicographic order of sorted vertex tuples."""
    rows = g.rows

    def walk(clique: int, cand: int) -> Iterator[int]:
        yield clique
        while cand:
            v = lowest(cand)
            cand &= cand - 1
            yield from walk(clique | 1 << v, cand & rows[v])

    for c in walk(0, g.vertex_mask):
        yield to_set(c)


def maximal_clique_masks(g: Graph, within: int | None = None) -> list[int]:
    rows = g.rows
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # Tomita pivot: the vertex of P|X covering the most of P.
        u = max(bits(p | x), key=lambda w: popcount(p & rows[w]))
        for v in bits(p & ~rows[u]):
            bk(r | 1 << v, p & rows[v], x & rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.vertex_mask if within is None else within, 0)
    return out


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Every inclusion-maximal clique exactly once, sorted by vertex tuple."""
    if g.n == 0:
        return [frozenset()]
    found = sorted(tuple(bits(m)) for m in maximal_clique_masks(g))
    return [frozenset(c) for c in found]


def maximum_cliques(g: Graph) -> list[frozenset[int]]:
    cliques = maximal_cliques(g)
    top = max(len(c) for c in cliques)
    return [c for c in cliques if len(c) == top]


# -- coloring ----------------------------------------------------------------

def _color_search(g: Graph, k: int) -> list[int] | None:
    n, rows = g.n, g.rows
    colors = [-1] * n
    # class_masks[c] = vertices currently holding color c
    class_masks = [0] * max(k, 1)

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        nb = rows[v]
        for c in range(min(used + 1, k)):
            if class_masks[c] & nb:
                continue
            colors[v] = c
            class_masks[c] |= 1 << v
            if place(v + 1, max(used, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
        colors[v] = -1
        return False

    if n == 0:
        return []
    if k <= 0:
        return None
    return colors if place(0, 0) else None


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """Lexicographically least proper ``k``-coloring in ascending vertex order, or ``None``.

    Colors are tried in increasing order with the usual "at most one new color
    per step" symmetry cut, which never discards the lexicographically least
    solution.
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    found = _color_search(g, k)
    if found is None:
        return None
    col = Coloring(tuple(found), k)
    assert col.is_proper_for(g)
    return col


def chi(g: Graph, cap: int | None = None) -> tuple[int, Coloring]:
    check_cap(g, cap, "chromatic number")
    if g.n == 0:
        return 0, Coloring((), 0)
    k = omega(g)[0]
    while True:
        col = is_k_colorable(g, k)
        if col is not None:
            return k, col
        k += 1


def bipartition(g: Graph, within: int | None = None) -> tuple[int, int] | None:
    """Two-color ``G[within]`` by BFS; returns the two color-class masks or ``None``."""
    rows = g.rows
    left = g.vertex_mask if within is None else within
    side0 = side1 = 0
    while left:
        start = lowest(left)
        frontier, parity = 1 << start, 0
        seen = frontier
        while frontier:
            if parity == 0:
                side0 |= frontier
            else:
                side1 |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= left
            if nxt & (side1 if parity else side0) or nxt & frontier:
                return None
            nxt &= ~seen
            seen |= nxt
            frontier, parity = nxt, parity ^ 1
        left &= ~seen
    if g.has_edge_within(side0) or g.has_edge_within(side1):
        return None
    return side0, side1


# -- connectivity ------------------------------------------------------------

def component_masks(g: Graph, within: int | None = None) -> list[int]:
    rows = g.rows
    left = g.vertex_mask if within is None else within
    out = []
    while left:
        comp = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & left & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components ordered by their least vertex."""
    return [to_set(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1
