"""Simplicial vertices, clique cutsets and composition across a clique cutset.

The two compositions here take good partitions of the pieces
``G1 = G[C | V1]`` and ``G2 = G[C | V2]`` of a graph split by a clique cutset
``C`` and assemble a partition of ``G``:

* :func:`combine_good_partitions` uses ``A = A1 | A2`` and
  ``B = (B1 - A2) | (B2 - A1)``. B never holds a largest clique, but ``G[A]``
  can be imperfect; when it is, :func:`extract_p5_witness` turns the odd
  hole/antihole into an induced P5, so the failure cannot happen in P5-free
  graphs.
* :func:`one_side_perfect_partition` handles a perfect ``G1`` with
  ``A = A2 | V1`` and ``B = B2``, which is always good.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    Graph,
    GraphError,
    bits,
    complement,
    induced_mask,
    path,
    popcount,
    to_mask,
    to_set,
)
from .divisibility import GoodPartition, PreconditionError, TheoremViolation
from .invariants import all_cliques_iter, bipartition, component_masks, max_clique_mask, maximum_cliques
from .patterns import Embedding, HoleCertificate
from .perfection import is_perfect


def find_simplicial(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.is_clique_mask(g.rows[v])]


def find_bisimplicial(g: Graph) -> list[int]:
    """Vertices whose neighbourhood is covered by two cliques."""
    comp = complement(g)
    return [v for v in range(g.n) if bipartition(comp, g.rows[v]) is not None]


# -- clique cutsets ----------------------------------------------------------

def is_cutset_mask(g: Graph, c: int) -> bool:
    return len(component_masks(g, g.vertex_mask & ~c)) >= 2


@dataclass(frozen=True)
class CutsetSplit:
    c: frozenset[int]
    v1: frozenset[int]
    v2: frozenset[int]
    ambient: Graph

    @property
    def side1(self) -> frozenset[int]:
        """Vertex set of ``G1 = G[C | V1]``."""
        return self.c | self.v1

    @property
    def side2(self) -> frozenset[int]:
        return self.c | self.v2

    def problems(self) -> list[str]:
        g = self.ambient
        out = []
        c, v1, v2 = to_mask(self.c), to_mask(self.v1), to_mask(self.v2)
        if c & v1 or c & v2 or v1 & v2 or c | v1 | v2 != g.vertex_mask:
            out.append("C, V1, V2 do not partition the vertex set")
        if not v1 or not v2:
            out.append("a side is empty")
        if not g.is_clique_mask(c):
            out.append("C is not a clique")
        if any(g.rows[v] & v2 for v in bits(v1)):
            out.append("an edge joins V1 and V2")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def validate(self) -> "CutsetSplit":
        bad = self.problems()
        if bad:
            raise PreconditionError("invalid cutset split: " + "; ".join(bad))
        return self


def split_for(g: Graph, c: frozenset[int] | set[int]) -> CutsetSplit:
    """Split around a given cutset: V1 is the component holding the least remaining vertex."""
    cm = to_mask(c)
    comps = component_masks(g, g.vertex_mask & ~cm)
    if len(comps) < 2:
        raise PreconditionError("removing C does not disconnect the graph")
    v1 = comps[0]
    v2 = g.vertex_mask & ~cm & ~v1
    return CutsetSplit(frozenset(c), to_set(v1), to_set(v2), g)


def find_clique_cutset(g: Graph) -> CutsetSplit | None:
    """Smallest clique cutset, lexicographically first among those of that size.

    A disconnected graph yields the empty clique.
    """
    if g.n < 2:
        return None
    for c in sorted(all_cliques_iter(g), key=lambda s: (len(s), sorted(s))):
        if is_cutset_mask(g, to_mask(c)):
            return split_for(g, c).validate()
    return None


def _is_minimal_cutset(g: Graph, c: int) -> tuple[bool, int]:
    members = list(bits(c))
    for k in range(len(members)):
        for sub in combinations(members, k):
            m = to_mask(sub)
            if is_cutset_mask(g, m):
                return False, m
    return True, c


def minimize_cutset(g: Graph, c: frozenset[int] | set[int]) -> frozenset[int]:
    """Inclusion-minimal cutset inside ``c``.

    Drops vertices greedily in ascending order, then confirms that no proper
    subset separates; since removing vertices can also merge components, a
    proper separating subset found there restarts the loop.
    """
    cur = to_mask(c)
    if cur & ~g.vertex_mask:
        raise GraphError("cutset is not contained in the graph")
    if not is_cutset_mask(g, cur):
        raise PreconditionError("the given set is not a cutset")
    while True:
        changed = True
        while changed:
            changed = False
            for v in bits(cur):
                if is_cutset_mask(g, cur & ~(1 << v)):
                    cur &= ~(1 << v)
                    changed = True
        minimal, smaller = _is_minimal_cutset(g, cur)
        if minimal:
            return to_set(cur)
        cur = smaller


# -- composition -------------------------------------------------------------

@dataclass(frozen=True)
class CombinationReport:
    a: frozenset[int]
    b: frozenset[int]
    omega_ok: bool
    a_perfect: bool
    witness: HoleCertificate | None
    cliques_met: bool
    """Every largest clique of G lies in one piece and meets A."""


def _check_side(split: CutsetSplit, gp: GoodPartition, side: frozenset[int], name: str) -> None:
    if gp.ambient != split.ambient:
        raise PreconditionError(f"{name} is not expressed in the ambient graph's numbering")
    if gp.domain != side:
        raise PreconditionError(f"{name} does not partition its piece of the split")
    bad = gp.problems()
    if bad:
        raise PreconditionError(f"{name} is not a good partition: " + "; ".join(bad))


def _lift_certificate(cert: HoleCertificate, old: tuple[int, ...]) -> HoleCertificate:
    return HoleCertificate(tuple(old[v] for v in cert.cycle), cert.complemented)


def combine_good_partitions(g: Graph, split: CutsetSplit, gp1: GoodPartition,
                            gp2: GoodPartition) -> CombinationReport:
    """Glue good partitions of the two pieces into ``(A1 | A2, (B1 - A2) | (B2 - A1))``."""
    split.validate()
    if split.ambient != g:
        raise PreconditionError("split belongs to a different graph")
    _check_side(split, gp1, split.side1, "gp1")
    _check_side(split, gp2, split.side2, "gp2")
    a = gp1.a | gp2.a
    b = (gp1.b - gp2.a) | (gp2.b - gp1.a)
    assert a | b == frozenset(range(g.n)) and not a & b
    top = popcount(max_clique_mask(g))
    omega_ok = popcount(max_clique_mask(g, to_mask(b))) < top
    cliques_met = all(
        (k <= split.side1 or k <= split.side2) and bool(k & a)
        for k in maximum_cliques(g)
    )
    h, old = induced_mask(g, to_mask(a))
    verdict = is_perfect(h, cap=g.n)
    witness = None if verdict.perfect else _lift_certificate(verdict.witness, old)
    return CombinationReport(a, b, omega_ok, verdict.perfect, witness, cliques_met)


def one_side_perfect_partition(g: Graph, split: CutsetSplit, gp2: GoodPartition) -> GoodPartition:
    """Good partition ``(A2 | V1, B2)`` of ``g`` when ``G[C | V1]`` is perfect."""
    split.validate()
    if split.ambient != g:
        raise PreconditionError("split belongs to a different graph")
    if not is_perfect(induced_mask(g, to_mask(split.side1))[0], cap=g.n).perfect:
        raise PreconditionError("G[C | V1] is not perfect")
    _check_side(split, gp2, split.side2, "gp2")
    out = GoodPartition(gp2.a | split.v1, gp2.b, g)
    bad = out.problems()
    if bad:
        raise TheoremViolation(f"one-side-perfect composition failed: {bad}")
    return out


def extract_p5_witness(g: Graph, split: CutsetSplit,
                       report: CombinationReport) -> tuple[int, int, int, int, int]:
    """Five vertices inducing P5, built from an imperfect combination.

    Hole case: a hole vertex ``a`` in C, the next three hole vertices
    ``h3, h2, h1`` (all outside C) and a neighbour ``a'`` of ``a`` on the far
    side give the path ``h1 h2 h3 a a'``. Antihole case: in the complement
    the cycle runs ``h1 h2 c h3`` with only ``c`` in C; with a far-side
    neighbour ``c'`` of ``c`` the path is ``h2 h3 h1 c c'``. The cutset must
    be inclusion-minimal so the far-side neighbour exists.
    """
    split.validate()
    if report.a_perfect or report.witness is None:
        raise PreconditionError("the combination is perfect; there is nothing to extract")
    cert = report.witness
    if not cert.verify(g):
        raise PreconditionError("witness does not verify in the ambient graph")
    hv = cert.vertices
    in1, in2 = bool(hv & split.v1), bool(hv & split.v2)
    if in1 and in2:
        raise PreconditionError("witness crosses the cutset; the side partitions were invalid")
    on_c = hv & split.c
    if not on_c:
        raise PreconditionError("witness avoids C, so one side's A was not perfect")
    far = to_mask(split.v2 if in1 else split.v1) if (in1 or in2) else None
    cm = to_mask(split.c)
    p5 = path(5)

    def far_neighbors(x: int) -> list[int]:
        if far is None:
            # witness inside C entirely is impossible for a hole of length >= 5
            return list(bits(g.rows[x] & ~cm))
        return list(bits(g.rows[x] & far))

    for x in sorted(on_c):
        if not far_neighbors(x):
            raise PreconditionError(f"cutset vertex {x} has no neighbour on the far side; minimize the cutset first")

    cyc, k = cert.cycle, len(cert.cycle)
    for x in sorted(on_c):
        i = cyc.index(x)
        for s in (1, -1):
            if cert.complemented:
                # complement cycle: h1 - h2 - x - h3
                h2, h1, h3 = cyc[(i + s) % k], cyc[(i + 2 * s) % k], cyc[(i - s) % k]
            else:
                # hole: x - h3 - h2 - h1
                h3, h2, h1 = cyc[(i + s) % k], cyc[(i + 2 * s) % k], cyc[(i + 3 * s) % k]
            if {h1, h2, h3} & split.c:
                continue
            for xp in far_neighbors(x):
                cand = (h2, h3, h1, x, xp) if cert.complemented else (h1, h2, h3, x, xp)
                if Embedding(cand).verify(g, p5):
                    return cand
    raise TheoremViolation(f"no induced P5 could be assembled from witness {cyc}")
