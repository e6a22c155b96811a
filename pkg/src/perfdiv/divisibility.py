"""Good partitions, perfect divisibility, k-divisibility and minimality.

A *good partition* of ``G`` is a split ``(A, B)`` of its vertices where
``G[A]`` is perfect and ``omega(G[B]) < omega(G)``. All searches run on the
subset lattice of one ambient graph with per-call memo tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Literal

from .core import (
    Graph,
    GraphError,
    bits,
    check_cap,
    induced_mask,
    popcount,
    to_mask,
    to_set,
)
from .invariants import max_clique_mask
from .perfection import SubsetLattice, is_perfect

GOOD_PARTITION_CAP = 22


class PreconditionError(GraphError):
    """An operation's documented precondition does not hold for its input."""


class TheoremViolation(AssertionError):
    """A construction that is proved to succeed produced an invalid result."""


def _omega_of(g: Graph, mask: int) -> int:
    return popcount(max_clique_mask(g, mask))


def _perfect_of(g: Graph, mask: int) -> bool:
    return is_perfect(induced_mask(g, mask)[0], cap=g.n).perfect


@dataclass(frozen=True)
class GoodPartition:
    """``(a, b)`` splitting the induced subgraph ``ambient[a | b]``.

    Vertex sets always use the ambient graph's numbering, so a partition of a
    piece such as ``G[C | V1]`` can be stated directly inside ``G``. For a
    partition of the whole graph, ``a | b`` is every vertex.
    """

    a: frozenset[int]
    b: frozenset[int]
    ambient: Graph

    @property
    def domain(self) -> frozenset[int]:
        return self.a | self.b

    def problems(self) -> list[str]:
        """Reasons the partition is not good; empty when it is.

        Recomputes perfection and clique numbers from scratch (hole search and
        branch-and-bound), independent of the lattice tables used to find it.
        """
        g = self.ambient
        out = []
        if self.a & self.b:
            out.append("sides overlap")
        if any(not 0 <= v < g.n for v in self.domain):
            out.append("vertex outside the graph")
            return out
        dom = to_mask(self.domain)
        if not dom:
            out.append("empty graph has no good partition")
            return out
        if not _perfect_of(g, to_mask(self.a)):
            out.append("A does not induce a perfect graph")
        if _omega_of(g, to_mask(self.b)) >= _omega_of(g, dom):
            out.append("B contains a largest clique")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def validate(self) -> "GoodPartition":
        bad = self.problems()
        if bad:
            raise PreconditionError("invalid good partition: " + "; ".join(bad))
        return self


@dataclass(frozen=True)
class KPartition:
    parts: tuple[frozenset[int], ...]
    ambient: Graph

    def problems(self) -> list[str]:
        g = self.ambient
        out = []
        seen: set[int] = set()
        for p in self.parts:
            if seen & p:
                out.append("parts overlap")
            seen |= p
        if seen != set(range(g.n)):
            out.append("parts do not cover the vertex set")
        top = _omega_of(g, g.vertex_mask)
        for i, p in enumerate(self.parts):
            if _omega_of(g, to_mask(p)) >= top:
                out.append(f"part {i} contains a largest clique")
        return out

    def is_valid(self) -> bool:
        return not self.problems()


@dataclass(frozen=True)
class DivisibilityVerdict:
    holds: bool
    failing_subgraph: frozenset[int] | None = None
    subgraphs_checked: int = 0

    def __bool__(self) -> bool:
        return self.holds


# -- mask-level searches -----------------------------------------------------

def _good_b_masks(lat: SubsetLattice, s: int) -> Iterator[int]:
    """B-sides of good partitions of ``G[s]``: by size, then lexicographically."""
    if lat.perfect(s):
        yield 0
    w = lat.omega(s)
    verts = list(bits(s))
    for k in range(1, len(verts) + 1):
        for combo in combinations(verts, k):
            b = 0
            for v in combo:
                b |= 1 << v
            if lat.omega(b) < w and lat.perfect(s & ~b):
                yield b


def _first_good_b(lat: SubsetLattice, s: int) -> int | None:
    return next(_good_b_masks(lat, s), None)


def _has_good_partition(lat: SubsetLattice, s: int, memo: dict[int, bool]) -> bool:
    got = memo.get(s)
    if got is None:
        got = _first_good_b(lat, s) is not None
        memo[s] = got
    return got


def _masks_by_size(full: int, sizes: Iterable[int]) -> Iterator[int]:
    verts = list(bits(full))
    for k in sizes:
        for combo in combinations(verts, k):
            m = 0
            for v in combo:
                m |= 1 << v
            yield m


def _k_split(lat: SubsetLattice, r: int, k: int, w: int,
             memo: dict[tuple[int, int, int], tuple[int, ...] | None]) -> tuple[int, ...] | None:
    """Split ``r`` into at most ``k`` parts, each with clique number below ``w``."""
    if r == 0:
        return ()
    if k == 0:
        return None
    key = (r, k, w)
    if key in memo:
        return memo[key]
    found: tuple[int, ...] | None = None
    if lat.omega(r) < w:
        found = (r,)
    elif k > 1:
        # the part holding the lowest vertex; labels are interchangeable
        low = r & -r
        rest = r ^ low
        sub = rest
        while True:
            t = sub | low
            if lat.omega(t) < w:
                tail = _k_split(lat, r ^ t, k - 1, w, memo)
                if tail is not None:
                    found = (t,) + tail
                    break
            if sub == 0:
                break
            sub = (sub - 1) & rest
    memo[key] = found
    return found


# -- public operations -------------------------------------------------------

def good_partitions(g: Graph) -> Iterator[GoodPartition]:
    """Every good partition of ``g`` in search order (smallest B first)."""
    if g.n == 0:
        raise PreconditionError("the empty graph has no good partition")
    check_cap(g, GOOD_PARTITION_CAP, "good partition enumeration")
    lat = SubsetLattice(g)
    full = g.vertex_mask
    seen = set()
    for b in _good_b_masks(lat, full):
        if b in seen:
            continue
        seen.add(b)
        yield GoodPartition(to_set(full & ~b), to_set(b), g)


def find_good_partition(g: Graph, cap: int = GOOD_PARTITION_CAP) -> GoodPartition | None:
    """First good partition in smallest-B order; ``(V, {})`` when ``g`` is perfect."""
    if g.n == 0:
        raise PreconditionError("the empty graph has no good partition (omega would need to be < 0)")
    check_cap(g, cap, "good partition search")
    lat = SubsetLattice(g)
    b = _first_good_b(lat, g.vertex_mask)
    if b is None:
        return None
    gp = GoodPartition(to_set(g.vertex_mask & ~b), to_set(b), g)
    if not gp.is_valid():
        raise TheoremViolation(f"search returned an invalid partition: {gp.problems()}")
    return gp


def find_good_partition_of(g: Graph, vertices: Iterable[int]) -> GoodPartition | None:
    """Good partition of ``G[vertices]`` expressed in ``g``'s numbering."""
    h, old = induced_mask(g, to_mask(vertices))
    gp = find_good_partition(h)
    if gp is None:
        return None
    return GoodPartition(frozenset(old[v] for v in gp.a), frozenset(old[v] for v in gp.b), g)


def is_perfectly_divisible(g: Graph, cap: int | None = None) -> DivisibilityVerdict:
    """Check that every induced subgraph with an edge has a good partition.

    Subgraphs are visited by increasing size, so a reported failure is a
    smallest failing induced subgraph.
    """
    check_cap(g, cap, "perfect divisibility")
    if g.n == 0 or is_perfect(g, cap=g.n).perfect:
        return DivisibilityVerdict(True)
    lat = SubsetLattice(g)
    checked = 0
    for s in _masks_by_size(g.vertex_mask, range(2, g.n + 1)):
        if not g.has_edge_within(s):
            continue
        checked += 1
        if _first_good_b(lat, s) is None:
            return DivisibilityVerdict(False, to_set(s), checked)
    return DivisibilityVerdict(True, None, checked)


def find_k_partition(g: Graph, k: int, cap: int | None = None) -> KPartition | None:
    """Split ``V(g)`` into ``k`` parts (some possibly empty), none holding a largest clique."""
    if k < 1:
        raise GraphError("k must be at least 1")
    check_cap(g, cap, "k-partition search")
    if g.n == 0:
        return None
    lat = SubsetLattice(g)
    parts = _k_split(lat, g.vertex_mask, k, lat.omega(g.vertex_mask), {})
    if parts is None:
        return None
    padded = tuple(to_set(p) for p in parts) + (frozenset(),) * (k - len(parts))
    kp = KPartition(padded, g)
    if not kp.is_valid():
        raise TheoremViolation(f"search returned an invalid k-partition: {kp.problems()}")
    return kp


def is_k_divisible(g: Graph, k: int, cap: int | None = None) -> DivisibilityVerdict:
    """Every induced subgraph with an edge splits into ``k`` parts missing its largest cliques."""
    if k < 1:
        raise GraphError("k must be at least 1")
    check_cap(g, cap, f"{k}-divisibility")
    lat = SubsetLattice(g)
    memo: dict = {}
    checked = 0
    for s in _masks_by_size(g.vertex_mask, range(2, g.n + 1)):
        if not g.has_edge_within(s):
            continue
        checked += 1
        if _k_split(lat, s, k, lat.omega(s), memo) is None:
            return DivisibilityVerdict(False, to_set(s), checked)
    return DivisibilityVerdict(True, None, checked)


def is_mnpd(g: Graph, cap: int | None = None) -> bool:
    """Minimally non-perfectly divisible.

    Equivalent to: ``g`` itself has no good partition while every proper
    induced subgraph with an edge has one. (Each proper induced subgraph is
    then perfectly divisible, and ``g`` is not.)
    """
    check_cap(g, cap, "MNPD test")
    if g.n < 2:
        return False
    if is_perfect(g, cap=g.n).perfect:
        return False
    lat = SubsetLattice(g)
    full = g.vertex_mask
    if _first_good_b(lat, full) is not None:
        return False
    for s in _masks_by_size(full, range(g.n - 1, 1, -1)):
        if g.has_edge_within(s) and _first_good_b(lat, s) is None:
            return False
    return True


def is_mnpd_literal(g: Graph) -> bool:
    """MNPD straight from the definition (slow; for cross-checking)."""
    if is_perfectly_divisible(g).holds:
        return False
    return all(
        is_perfectly_divisible(induced_mask(g, s)[0]).holds
        for s in range(g.vertex_mask)
    )


def is_minimally_non_k_divisible(g: Graph, k: int, cap: int | None = None) -> bool:
    check_cap(g, cap, "minimal non-k-divisibility")
    if g.n < 2 or not g.has_edge_within(g.vertex_mask):
        return False
    lat = SubsetLattice(g)
    memo: dict = {}
    full = g.vertex_mask
    if _k_split(lat, full, k, lat.omega(full), memo) is not None:
        return False
    for s in _masks_by_size(full, range(g.n - 1, 1, -1)):
        if g.has_edge_within(s) and _k_split(lat, s, k, lat.omega(s), memo) is None:
            return False
    return True


def is_minimally_non_2_divisible(g: Graph, cap: int | None = None) -> bool:
    return is_minimally_non_k_divisible(g, 2, cap)


def extend_partition_around_vertex(
    g: Graph, x: int, gp: GoodPartition, mode: Literal["nonclique", "simplicial"]
) -> GoodPartition:
    """Lift a good partition of ``g - x`` to one of ``g``.

    ``nonclique``: ``x`` lies in no largest clique, so it joins B.
    ``simplicial``: the neighbourhood of ``x`` is a clique, so it joins A.
    """
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} not in graph")
    rest = frozenset(range(g.n)) - {x}
    if gp.ambient != g or gp.domain != rest:
        raise PreconditionError("partition must cover exactly V(g) - x, in g's numbering")
    bad = gp.problems()
    if bad:
        raise PreconditionError("input partition is not good for g - x: " + "; ".join(bad))
    if mode == "nonclique":
        if popcount(max_clique_mask(g, g.rows[x])) + 1 >= _omega_of(g, g.vertex_mask):
            raise PreconditionError(f"vertex {x} lies in a largest clique")
        out = GoodPartition(gp.a, gp.b | {x}, g)
    elif mode == "simplicial":
        if not g.is_clique_mask(g.rows[x]):
            raise PreconditionError(f"vertex {x} is not simplicial")
        out = GoodPartition(gp.a | {x}, gp.b, g)
    else:
        raise GraphError(f"unknown mode {mode!r}")
    bad = out.problems()
    if bad:
        raise TheoremViolation(f"extended partition is not good: {bad}")
    return out
