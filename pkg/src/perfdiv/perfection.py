"""Perfection with certificates, and a chi = omega brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, GraphError, bits, check_cap, induced_mask, lowest
from .invariants import max_clique_mask
from .patterns import (
    HoleCertificate,
    find_hole,
    find_odd_antihole,
    induces_odd_antihole_mask,
    induces_odd_hole_mask,
)


@dataclass(frozen=True)
class PerfectionVerdict:
    perfect: bool
    witness: HoleCertificate | None = None

    def __bool__(self) -> bool:
        return self.perfect


def is_perfect(g: Graph, cap: int | None = None) -> PerfectionVerdict:
    """Decide perfection by searching for an odd hole, then an odd antihole.

    The witness is the shortest odd hole if one exists, otherwise the shortest
    odd antihole (length 5 is reported as a hole since C5 is its own complement).
    """
    check_cap(g, cap, "perfection test")
    hole = find_hole(g, "odd", 5)
    if hole is not None:
        return PerfectionVerdict(False, hole)
    anti = find_odd_antihole(g, 7)
    if anti is not None:
        return PerfectionVerdict(False, anti)
    return PerfectionVerdict(True)


ORACLE_LIMIT = 10


def subset_tables(g: Graph) -> tuple[list[int], list[int]]:
    """Clique number and chromatic number of every induced subgraph, indexed by mask.

    Chromatic numbers come from the classic subset recursion: the color class
    of the lowest vertex is some stable set containing it.
    """
    n, rows = g.n, g.rows
    size = 1 << n
    om = [0] * size
    stable = [False] * size
    stable[0] = True
    for m in range(1, size):
        v = lowest(m)
        rest = m & (m - 1)
        om[m] = max(om[rest], 1 + om[rest & rows[v]])
        stable[m] = stable[rest] and not rows[v] & rest
    ch = [0] * size
    for m in range(1, size):
        v_bit = m & -m
        rest = m ^ v_bit
        best = n + 1
        sub = rest
        # every stable class T containing the lowest vertex, as v_bit | sub
        while True:
            t = sub | v_bit
            if stable[t]:
                c = ch[m ^ t] + 1
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        ch[m] = best
    return om, ch


def is_perfect_oracle(g: Graph) -> bool:
    """Perfection straight from the definition: chi(H) == omega(H) for every induced H.

    The defining condition is read per induced subgraph (chi and omega of H,
    not of G). Exponential in ``n``; limited to 10 vertices.
    """
    if g.n > ORACLE_LIMIT:
        raise GraphError(f"oracle limited to {ORACLE_LIMIT} vertices")
    om, ch = subset_tables(g)
    return om == ch


class SubsetLattice:
    """Memoized per-mask clique numbers and perfection for one ambient graph.

    Perfection of a mask is computed hereditarily: ``G[S]`` is perfect iff every
    ``G[S - v]`` is perfect and ``G[S]`` is not itself an odd hole or odd
    antihole (the minimal imperfect graphs).
    """

    HEREDITARY_LIMIT = 12

    def __init__(self, g: Graph):
        self.g = g
        self.rows = g.rows
        self._omega: dict[int, int] = {0: 0}
        self._perfect: dict[int, bool] = {}

    def omega(self, mask: int) -> int:
        memo = self._omega
        got = memo.get(mask)
        if got is not None:
            return got
        if bin(mask).count("1") > 16:
            val = bin(max_clique_mask(self.g, mask)).count("1")
        else:
            v = lowest(mask)
            rest = mask & (mask - 1)
            val = max(self.omega(rest), 1 + self.omega(rest & self.rows[v]))
        memo[mask] = val
        return val

    def perfect(self, mask: int) -> bool:
        memo = self._perfect
        got = memo.get(mask)
        if got is not None:
            return got
        size = bin(mask).count("1")
        if size < 5:
            val = True
        elif size > self.HEREDITARY_LIMIT:
            # recursion would touch 2**size masks; search for a certificate instead
            val = is_perfect(induced_mask(self.g, mask)[0], cap=size).perfect
        else:
            val = all(self.perfect(mask & ~(1 << v)) for v in bits(mask))
            if val:
                val = not (induces_odd_hole_mask(self.g, mask)
                           or induces_odd_antihole_mask(self.g, mask))
        memo[mask] = val
        return val
