"""Triangle-free graphs: perfectly divisible exactly when 3-colorable.

Both directions are constructive. A 3-coloring gives the good partition
(colors 0 and 1, color 2); a good partition gives a 3-coloring because its
A-side is perfect and triangle-free, hence bipartite, and its B-side is stable.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import Graph, bits, to_mask
from .divisibility import GoodPartition, PreconditionError, TheoremViolation, is_perfectly_divisible
from .invariants import Coloring, bipartition, is_k_colorable, max_clique_mask


def _require_triangle_free(g: Graph) -> None:
    if bin(max_clique_mask(g)).count("1") >= 3:
        raise PreconditionError("graph contains a triangle")


def _require_edge(g: Graph) -> None:
    if not g.edge_count:
        raise PreconditionError("graph has no edge")


def coloring_to_good_partition(g: Graph, col: Coloring) -> GoodPartition:
    _require_triangle_free(g)
    _require_edge(g)
    if col.k > 3 or not col.is_proper_for(g):
        raise PreconditionError("not a proper coloring with at most 3 colors")
    a = frozenset(v for v, c in enumerate(col.assignment) if c in (0, 1))
    gp = GoodPartition(a, frozenset(range(g.n)) - a, g)
    bad = gp.problems()
    if bad:
        raise TheoremViolation(f"coloring did not yield a good partition: {bad}")
    return gp


def good_partition_to_coloring(g: Graph, gp: GoodPartition) -> Coloring:
    _require_triangle_free(g)
    _require_edge(g)
    if gp.ambient != g or gp.domain != frozenset(range(g.n)):
        raise PreconditionError("partition does not cover the graph")
    bad = gp.problems()
    if bad:
        raise PreconditionError("not a good partition: " + "; ".join(bad))
    sides = bipartition(g, to_mask(gp.a))
    if sides is None:
        raise TheoremViolation("perfect triangle-free side is not bipartite")
    colors = [2] * g.n
    for c, side in enumerate(sides):
        for v in bits(side):
            colors[v] = c
    col = Coloring(tuple(colors), 3)
    if not col.is_proper_for(g):
        raise TheoremViolation("B-side of a good partition is not stable")
    return col


class Equivalence(NamedTuple):
    pd: bool
    threecol: bool
    agree: bool


def pd_equals_3colorable(g: Graph, cap: int | None = None) -> Equivalence:
    """Decide both sides separately; they must agree on every triangle-free graph."""
    _require_triangle_free(g)
    pd = is_perfectly_divisible(g, cap).holds
    threecol = is_k_colorable(g, 3) is not None
    return Equivalence(pd, threecol, pd == threecol)
