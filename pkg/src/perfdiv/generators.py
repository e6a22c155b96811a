"""Graph corpora: exhaustive small graphs up to isomorphism and seeded random graphs."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterator

from .core import Graph, GraphError, add_vertex, bits, from_rows, relabel
from .decomposition import CutsetSplit

ENUMERATION_LIMIT = 7


def adjacency_code(g: Graph, order: tuple[int, ...] | list[int]) -> int:
    """Upper-triangle adjacency bits of ``g`` relabelled by ``order``, graph6 bit order, MSB first."""
    code = 0
    for j in range(1, len(order)):
        row = g.rows[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_code_bruteforce(g: Graph) -> int:
    """Minimum adjacency code over all ``n!`` vertex orders (test oracle)."""
    return min(adjacency_code(g, p) for p in permutations(range(g.n)))


def canonical_order(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum adjacency code over all vertex orders, with an order achieving it.

    Equal to :func:`canonical_code_bruteforce` but searched depth-first: the
    code is read column by column, so at each position only the candidates
    with the smallest next column can stay optimal, branches whose prefix
    already exceeds the best are cut, and of two twin vertices (same
    neighbourhood apart from each other) only one is tried.
    """
    n, rows = g.n, g.rows
    if n <= 1:
        return 0, tuple(range(n))
    twin_rep = list(range(n))
    for u in range(n):
        for v in range(u):
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                twin_rep[u] = twin_rep[v]
                break

    best_code: list[int] = [-1]
    best_order: list[tuple[int, ...]] = [()]
    total_bits = n * (n - 1) // 2

    def search(order: list[int], used: int, prefix: int, nbits: int) -> None:
        depth = len(order)
        if depth == n:
            if best_code[0] < 0 or prefix < best_code[0]:
                best_code[0], best_order[0] = prefix, tuple(order)
            return
        if best_code[0] >= 0 and prefix > best_code[0] >> (total_bits - nbits):
            return
        cols = {}
        for v in range(n):
            if used >> v & 1:
                continue
            row = rows[v]
            col = 0
            for u in order:
                col = col << 1 | (row >> u & 1)
            cols[v] = col
        low = min(cols.values())
        tried_reps = set()
        for v, col in cols.items():
            if col != low:
                continue
            rep = twin_rep[v]
            # twins that are both still unplaced are interchangeable
            if rep in tried_reps:
                continue
            tried_reps.add(rep)
            order.append(v)
            search(order, used | 1 << v, prefix << depth | col, nbits + depth)
            order.pop()

    search([], 0, 0, 0)
    return best_code[0], best_order[0]


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_order(g)[1])


def _augment(graphs: list[Graph], keep: Callable[[Graph], bool] | None,
             nbhd_ok: Callable[[Graph, int], bool] | None) -> list[Graph]:
    seen: dict[int, Graph] = {}
    for g in graphs:
        for nb in range(1 << g.n):
            if nbhd_ok is not None and not nbhd_ok(g, nb):
                continue
            h = add_vertex(g, bits(nb))
            if keep is not None and not keep(h):
                continue
            code, order = canonical_order(h)
            if code not in seen:
                seen[code] = relabel(h, order)
    return [seen[c] for c in sorted(seen)]


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (from_rows(()),)
    return tuple(_augment(list(_all_graphs(n - 1)), None, None))


def enumerate_small(n: int) -> Iterator[Graph]:
    """All graphs on ``n <= 7`` vertices up to isomorphism, in canonical form.

    Built by adding one vertex in every possible way to each graph on
    ``n - 1`` vertices and keeping one representative per canonical code.
    Ordered by canonical code.
    """
    if not 0 <= n <= ENUMERATION_LIMIT:
        raise GraphError(f"exhaustive enumeration is limited to n <= {ENUMERATION_LIMIT}; "
                         "supply larger corpora as graph6 files")
    yield from _all_graphs(n)


def enumerate_up_to(n: int) -> Iterator[Graph]:
    for k in range(n + 1):
        yield from enumerate_small(k)


@lru_cache(maxsize=None)
def _triangle_free(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (from_rows(()),)
    # a new vertex keeps the graph triangle-free iff its neighbourhood is stable
    return tuple(_augment(list(_triangle_free(n - 1)), None,
                          lambda g, nb: g.is_stable_mask(nb)))


def enumerate_triangle_free(n: int) -> Iterator[Graph]:
    """Triangle-free graphs on ``n <= 9`` vertices up to isomorphism.

    Triangle-freeness is hereditary, so augmenting only triangle-free graphs
    by stable neighbourhoods reaches every member.
    """
    if not 0 <= n <= 9:
        raise GraphError("triangle-free enumeration is limited to n <= 9")
    yield from _triangle_free(n)


def random_graph(n: int, p: float, seed: int) -> Graph:
    if not 0 <= p <= 1:
        raise GraphError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return from_rows(rows, f"G({n},{p},{seed})")


def random_glued(n1: int, n2: int, csize: int, p: float, seed: int) -> tuple[Graph, CutsetSplit]:
    """Two random pieces sharing a clique, with no edges between the pieces.

    Vertices ``0..csize-1`` form the clique C, the next ``n1`` are V1 and the
    last ``n2`` are V2. Every other pair inside ``C | V1`` or ``C | V2`` is an
    edge with probability ``p``.
    """
    if csize < 1:
        raise GraphError("the shared clique needs at least one vertex")
    if n1 < 1 or n2 < 1:
        raise GraphError("both sides of the cutset must be nonempty")
    if not 0 <= p <= 1:
        raise GraphError("edge probability must lie in [0, 1]")
    n = csize + n1 + n2
    rng = random.Random(seed)
    c = list(range(csize))
    v1 = list(range(csize, csize + n1))
    v2 = list(range(csize + n1, n))
    rows = [0] * n

    def link(u: int, v: int) -> None:
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    for i in c:
        for j in c:
            if i < j:
                link(i, j)
    for side in (v1, v2):
        piece = c + side
        for j in range(len(piece)):
            for i in range(j):
                if piece[i] < csize and piece[j] < csize:
                    continue
                if rng.random() < p:
                    link(piece[i], piece[j])
    g = from_rows(rows, f"glued({n1},{n2},{csize},{p},{seed})")
    split = CutsetSplit(frozenset(c), frozenset(v1), frozenset(v2), g).validate()
    return g, split
