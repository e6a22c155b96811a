"""Induced-subgraph detection: fixed patterns, holes and odd antiholes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .core import Graph, GraphError, bits, complement

Parity = Literal["odd", "even", "any"]


@dataclass(frozen=True)
class Embedding:
    """Induced embedding: pattern vertex ``i`` sits on host vertex ``map[i]``."""

    map: tuple[int, ...]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def verify(self, host: Graph, pattern: Graph) -> bool:
        if len(self.map) != pattern.n or len(set(self.map)) != pattern.n:
            return False
        return all(
            pattern.adjacent(i, j) == host.adjacent(self.map[i], self.map[j])
            for i in range(pattern.n)
            for j in range(i + 1, pattern.n)
        )


@dataclass(frozen=True)
class HoleCertificate:
    """A chordless cycle listed in cyclic order.

    For antihole certificates ``complemented`` is true and the cycle order is
    the hole order in the complement.
    """

    cycle: tuple[int, ...]
    complemented: bool = False

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def parity(self) -> str:
        return "odd" if len(self.cycle) % 2 else "even"

    @property
    def kind(self) -> str:
        return "antihole" if self.complemented else "hole"

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def verify(self, g: Graph) -> bool:
        k = len(self.cycle)
        if k < 4 or len(set(self.cycle)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                edge = g.adjacent(self.cycle[i], self.cycle[j])
                if self.complemented:
                    edge = not edge
                if edge != consecutive:
                    return False
        return True


def find_induced(g: Graph, h: Graph) -> Embedding | None:
    """First induced copy of ``h`` in ``g``.

    Pattern vertices are matched in descending-degree order; host candidates
    are tried in ascending index order, so the answer is deterministic.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return Embedding(())
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    mapping = [-1] * h.n
    full = g.vertex_mask
    grows, hrows = g.rows, h.rows

    def extend(depth: int, used: int) -> bool:
        if depth == h.n:
            return True
        p = order[depth]
        cand = full & ~used
        for q in order[:depth]:
            hv = mapping[q]
            if hrows[p] >> q & 1:
                cand &= grows[hv]
            else:
                cand &= ~grows[hv]
        for v in bits(cand):
            mapping[p] = v
            if extend(depth + 1, used | 1 << v):
                return True
        mapping[p] = -1
        return False

    if not extend(0, 0):
        return None
    emb = Embedding(tuple(mapping))
    assert emb.verify(g, h)
    return emb


def is_l_free(g: Graph, patterns: Iterable[Graph]) -> tuple[bool, tuple[Graph, Embedding] | None]:
    """``(True, None)`` if no pattern embeds, else ``(False, (pattern, embedding))``."""
    for h in patterns:
        emb = find_induced(g, h)
        if emb is not None:
            return False, (h, emb)
    return True, None


def _parity_ok(length: int, parity: Parity) -> bool:
    if parity == "any":
        return True
    return (length % 2 == 1) == (parity == "odd")


def _holes_of_length(g: Graph, length: int, within: int) -> Iterator[tuple[int, ...]]:
    """Chordless cycles of exactly ``length`` vertices inside ``within``.

    Each cycle is produced once: anchored at its least vertex, with the second
    vertex smaller than the last.
    """
    rows = g.rows

    def grow(path: list[int], interior_nb: int, cand_pool: int) -> Iterator[tuple[int, ...]]:
        # interior_nb: union of closed neighbourhoods of path[1:-1]
        anchor, last = path[0], path[-1]
        remaining = length - len(path)
        nxt = rows[last] & cand_pool & ~interior_nb
        if remaining == 1:
            nxt &= rows[anchor]
            for w in bits(nxt):
                if path[1] < w:
                    yield tuple(path) + (w,)
            return
        nxt &= ~rows[anchor]
        grown = interior_nb | rows[last] | 1 << last
        for w in bits(nxt):
            path.append(w)
            yield from grow(path, grown, cand_pool & ~(1 << w))
            path.pop()

    for anchor in bits(within):
        higher = within & ~((1 << (anchor + 1)) - 1)
        for second in bits(rows[anchor] & higher):
            yield from grow([anchor, second], 1 << anchor, higher & ~(1 << second))


def iter_holes(g: Graph, parity: Parity = "any", min_len: int = 4,
               within: int | None = None) -> Iterator[tuple[int, ...]]:
    """All holes by increasing length, then by anchor and lexicographic path."""
    if min_len < 4:
        raise GraphError("holes have at least four vertices")
    scope = g.vertex_mask if within is None else within
    size = bin(scope).count("1")
    for length in range(min_len, size + 1):
        if _parity_ok(length, parity):
            yield from _holes_of_length(g, length, scope)


def find_hole(g: Graph, parity: Parity = "any", min_len: int = 4) -> HoleCertificate | None:
    """Shortest hole of the requested parity with at least ``min_len`` vertices."""
    for cyc in iter_holes(g, parity, min_len):
        cert = HoleCertificate(cyc)
        assert cert.verify(g)
        return cert
    return None


def find_odd_antihole(g: Graph, min_len: int = 5) -> HoleCertificate | None:
    """Shortest odd antihole; the certificate lists the hole order of the complement."""
    found = find_hole(complement(g), "odd", max(min_len, 5))
    if found is None:
        return None
    cert = HoleCertificate(found.cycle, complemented=True)
    assert cert.verify(g)
    return cert


def holes_by_subset_scan(g: Graph, parity: Parity = "any", min_len: int = 4) -> list[frozenset[int]]:
    """Oracle: every vertex subset that induces a hole, by brute force over all subsets."""
    if g.n > 12:
        raise GraphError("subset scan is limited to 12 vertices")
    rows = g.rows
    found = []
    for mask in range(1, 1 << g.n):
        k = bin(mask).count("1")
        if k < min_len or not _parity_ok(k, parity):
            continue
        if any(bin(rows[v] & mask).count("1") != 2 for v in bits(mask)):
            continue
        # 2-regular: a hole iff connected
        seen = frontier = mask & -mask
        while frontier:
            nb = 0
            for v in bits(frontier):
                nb |= rows[v]
            frontier = nb & mask & ~seen
            seen |= frontier
        if seen == mask:
            found.append(frozenset(bits(mask)))
    return found


def induces_odd_hole_mask(g: Graph, mask: int) -> bool:
    """True if ``G[mask]`` is itself an odd hole (odd length >= 5)."""
    k = bin(mask).count("1")
    if k < 5 or k % 2 == 0:
        return False
    rows = g.rows
    if any(bin(rows[v] & mask).count("1") != 2 for v in bits(mask)):
        return False
    seen = frontier = mask & -mask
    while frontier:
        nb = 0
        for v in bits(frontier):
            nb |= rows[v]
        frontier = nb & mask & ~seen
        seen |= frontier
    return seen == mask


def induces_odd_antihole_mask(g: Graph, mask: int) -> bool:
    """True if ``G[mask]`` is the complement of an odd hole of length >= 5."""
    k = bin(mask).count("1")
    if k < 5 or k % 2 == 0:
        return False
    rows = g.rows
    # complement-degree must be 2 everywhere: degree k - 3 inside mask
    if any(bin(rows[v] & mask).count("1") != k - 3 for v in bits(mask)):
        return False
    seen = frontier = mask & -mask
    while frontier:
        nb = 0
        for v in bits(frontier):
            nb |= ~rows[v] & ~(1 << v)
        frontier = nb & mask & ~seen
        seen |= frontier
    return seen == mask

