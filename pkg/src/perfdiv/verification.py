"""The acceptance battery: each check rebuilds a known construction or
runs an exhaustive/seeded cross-validation and reports pass/fail.

Output is deterministic (no timings), so two runs print identical bytes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import core
from .conjectures import recheck, registry, scan
from .core import (
    Graph,
    complement,
    cycle,
    figure1_names,
    figure1_set,
    induced_mask,
    named,
    parse_graph6,
    to_mask,
    write_graph6,
)
from .decomposition import (
    combine_good_partitions,
    extract_p5_witness,
    minimize_cutset,
    one_side_perfect_partition,
    split_for,
)
from .divisibility import (
    GoodPartition,
    extend_partition_around_vertex,
    find_good_partition,
    good_partitions,
    is_k_divisible,
    is_minimally_non_2_divisible,
    is_perfectly_divisible,
)
from .generators import enumerate_triangle_free, enumerate_up_to, random_glued, random_graph
from .hardness import pd_equals_3colorable
from .invariants import bipartition, chi, is_k_colorable, max_clique_mask, maximal_clique_masks
from .patterns import find_hole, find_induced
from .perfection import is_perfect, is_perfect_oracle


@dataclass
class CheckResult:
    key: str
    title: str
    anchor: str
    passed: bool = True
    details: list[str] = field(default_factory=list)

    def note(self, msg: str) -> None:
        self.details.append(msg)

    def require(self, cond: bool, msg: str) -> None:
        if not cond:
            self.passed = False
            self.details.append("FAIL: " + msg)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.key} {self.title}"


def _omega(g: Graph, mask: int | None = None) -> int:
    return bin(max_clique_mask(g, mask)).count("1")


def small_corpus() -> list[Graph]:
    """All graphs on at most 7 vertices (1253 of them)."""
    return list(enumerate_up_to(7))


def extended_corpus() -> list[Graph]:
    """Small corpus, the triangle-free graphs on 8 vertices, and the named graphs."""
    extra = [named(k) for k in ("figure1", "grotzsch", "petersen", "bull", "fork", "banner", "dart")]
    return small_corpus() + list(enumerate_triangle_free(8)) + extra


# -- 1 -----------------------------------------------------------------------

def check_figure1(quick: bool = False) -> CheckResult:
    r = CheckResult("1", "ten-vertex counterexample (figure1)",
                    "a perfectly divisible graph that is not 2-divisible and has a clique cutset")
    g = named("figure1")
    r.require(g.n == 10 and g.edge_count == 13, f"figure1 has n={g.n}, m={g.edge_count}")
    c = figure1_set("EF")
    split = split_for(g, c)
    r.require(g.is_clique(c), "{E,F} is not a clique")
    r.require(minimize_cutset(g, c) == c, "{E,F} is not an inclusion-minimal cutset")
    r.require({split.v1, split.v2} == {figure1_set("ABCD"), figure1_set("GHIJ")},
              f"sides are {figure1_names(split.v1)} / {figure1_names(split.v2)}")
    gp1 = GoodPartition(figure1_set("EABCD"), figure1_set("F"), g)
    gp2 = GoodPartition(figure1_set("FJIHG"), figure1_set("E"), g)
    r.require(gp1.is_valid(), f"(A1,B1) not good: {gp1.problems()}")
    r.require(gp2.is_valid(), f"(A2,B2) not good: {gp2.problems()}")
    if not r.passed:
        return r
    rep = combine_good_partitions(g, split, gp1, gp2)
    r.require(rep.b == frozenset(), f"B = {figure1_names(rep.b)}")
    r.require(rep.omega_ok, "omega(G[B]) >= omega(G)")
    r.require(not rep.a_perfect, "G[A1 | A2] came out perfect")
    w = rep.witness
    r.require(w is not None and w.kind == "hole" and w.length == 5 and w.verify(g),
              "witness is not a verified odd hole of length 5")
    if w is not None:
        r.note("odd hole in G[A1 | A2]: " + "-".join(core.FIGURE1_NAMES[v] for v in w.cycle))
        p5 = extract_p5_witness(g, split, rep)
        ok = find_induced(induced_mask(g, to_mask(p5))[0], core.path(5)) is not None
        r.require(ok, "extracted vertices do not induce P5")
        r.note("extracted induced P5: " + "-".join(core.FIGURE1_NAMES[v] for v in p5))
    return r


# -- 2 -----------------------------------------------------------------------

def _random_sample(n: int, count: int, base_seed: int) -> list[Graph]:
    out = []
    for i in range(count):
        seed = base_seed + i
        p = random.Random(seed).uniform(0.15, 0.85)
        out.append(random_graph(n, round(p, 3), seed))
    return out


def check_spgt(quick: bool = False) -> CheckResult:
    r = CheckResult("2", "perfection: odd hole/antihole search vs chi = omega oracle",
                    "perfect iff no odd hole and no odd antihole")
    count = 100 if quick else 1000
    corpus = small_corpus() + _random_sample(8, count, 80_000) + _random_sample(9, count, 90_000)
    disagree = []
    imperfect = 0
    for g in corpus:
        a = is_perfect(g).perfect
        b = is_perfect_oracle(g)
        imperfect += not b
        if a != b:
            disagree.append(write_graph6(g))
    r.require(not disagree, f"{len(disagree)} disagreements, first {disagree[:3]}")
    r.note(f"{len(corpus)} graphs compared ({imperfect} imperfect), {len(disagree)} disagreements")
    return r


# -- 3 -----------------------------------------------------------------------

def check_triangle_free(quick: bool = False) -> CheckResult:
    r = CheckResult("3", "triangle-free: perfectly divisible iff 3-colorable",
                    "reduction from 3-coloring of triangle-free graphs")
    top = 7 if quick else 8
    total = disagree = non3 = 0
    for n in range(top + 1):
        for g in enumerate_triangle_free(n):
            eq = pd_equals_3colorable(g)
            total += 1
            non3 += not eq.threecol
            if not eq.agree:
                disagree += 1
                r.note(f"disagreement on {write_graph6(g)}: {eq}")
    r.require(disagree == 0, f"{disagree} disagreements")
    r.note(f"{total} triangle-free graphs on <= {top} vertices, {non3} not 3-colorable, "
           f"{disagree} disagreements")
    gr = named("grotzsch")
    k, _ = chi(gr)
    r.require(k == 4, f"chi(grotzsch) = {k}")
    r.require(find_good_partition(gr) is None, "grotzsch has a good partition")
    r.require(not is_perfectly_divisible(gr).holds, "grotzsch reported perfectly divisible")
    pe = named("petersen")
    k, _ = chi(pe)
    r.require(k == 3, f"chi(petersen) = {k}")
    r.require(is_perfectly_divisible(pe).holds, "petersen reported not perfectly divisible")
    r.note("grotzsch: chi 4, no good partition; petersen: chi 3, perfectly divisible")
    return r


# -- 4 -----------------------------------------------------------------------

def _random_side_partitions(g: Graph, split, rng: random.Random) -> list[GoodPartition]:
    out = []
    for side in (split.side1, split.side2):
        h, old = induced_mask(g, to_mask(side))
        gp = rng.choice(list(good_partitions(h)))
        out.append(GoodPartition(frozenset(old[v] for v in gp.a),
                                 frozenset(old[v] for v in gp.b), g))
    return out


def check_composition(quick: bool = False) -> CheckResult:
    """Combination bounds on every glued instance; the P5 argument after minimizing C.

    The P5-free guarantee applies to minimal cutsets: the glued
    clique is first shrunk to an inclusion-minimal cutset, the graph re-split
    around it, and fresh good partitions of the new pieces combined. Imperfect
    combinations over non-minimal cutsets of P5-free graphs are counted
    separately; they show why the minimality step is needed.
    """
    r = CheckResult("4", "compositions across a clique cutset",
                    "clique cutsets in P5-free MNPD graphs; one-side-perfect composition")
    count = 1000 if quick else 10_000
    p5 = named("p5")
    stats = dict(instances=0, p5_free=0, g1_perfect=0, imperfect_minimal=0, p5_extracted=0,
                 imperfect_p5_free_nonminimal=0)
    violations: list[str] = []
    for seed in range(count):
        rng = random.Random(seed)
        n1, n2, cs = rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 3)
        p = rng.choice((0.3, 0.5, 0.7))
        g, split = random_glued(n1, n2, cs, p, seed)
        g6 = write_graph6(g)
        sides = _random_side_partitions(g, split, rng)
        rep = combine_good_partitions(g, split, *sides)
        stats["instances"] += 1
        if not (rep.omega_ok and rep.cliques_met):
            violations.append(f"omega bound failed on {g6}")
        if is_perfect(induced_mask(g, to_mask(split.side1))[0]).perfect:
            stats["g1_perfect"] += 1
            out = one_side_perfect_partition(g, split, sides[1])
            if not out.is_valid():
                violations.append(f"one-side-perfect partition invalid on {g6}")

        is_p5_free = find_induced(g, p5) is None
        msplit = split_for(g, minimize_cutset(g, split.c))
        mrep = combine_good_partitions(g, msplit, *_random_side_partitions(g, msplit, rng))
        if not mrep.omega_ok:
            violations.append(f"omega bound failed on minimized split of {g6}")
        if is_p5_free:
            stats["p5_free"] += 1
            if not mrep.a_perfect:
                violations.append(f"P5-free but G[A] imperfect on {g6}")
            if not rep.a_perfect and msplit.c != split.c:
                stats["imperfect_p5_free_nonminimal"] += 1
        if not mrep.a_perfect:
            stats["imperfect_minimal"] += 1
            tup = extract_p5_witness(g, msplit, mrep)
            if find_induced(induced_mask(g, to_mask(tup))[0], p5) is None:
                violations.append(f"extracted non-P5 on {g6}")
            else:
                stats["p5_extracted"] += 1
    r.require(not violations, f"{len(violations)} violations: {violations[:3]}")
    r.require(stats["p5_free"] > 0 and stats["g1_perfect"] > 0, "a sub-sample is empty")
    r.note(", ".join(f"{k} {v}" for k, v in stats.items()))
    return r


# -- 5 -----------------------------------------------------------------------

def check_extensions(quick: bool = False) -> CheckResult:
    r = CheckResult("5", "lifting a good partition over a new vertex",
                    "lemmas on largest cliques and simplicial vertices")
    count = 200 if quick else 1000
    done = {"simplicial": 0, "nonclique": 0}
    for seed in range(count):
        rng = random.Random(10_000 + seed)
        mode = "simplicial" if seed % 2 == 0 else "nonclique"
        while True:
            n = rng.randint(3, 8)
            h = random_graph(n, round(rng.uniform(0.2, 0.8), 3), rng.randrange(1 << 30))
            if h.edge_count:
                break
        gp_h = rng.choice(list(good_partitions(h)))
        w = _omega(h)
        if mode == "simplicial":
            cliques = maximal_clique_masks(h)
            k = [v for v in core.bits(rng.choice(cliques))]
            nb = [v for v in k if rng.random() < 0.7]
        else:
            if w < 2:
                continue
            nb = [v for v in range(n) if rng.random() < 0.5]
            while _omega(h, to_mask(nb)) > w - 2:
                nb.remove(rng.choice(nb))
        g = core.add_vertex(h, nb)
        gp = GoodPartition(gp_h.a, gp_h.b, g)
        out = extend_partition_around_vertex(g, n, gp, mode)
        if mode == "simplicial":
            r.require(is_perfect(induced_mask(g, to_mask(out.a))[0]).perfect,
                      f"A-side imperfect on {write_graph6(g)}")
        else:
            r.require(_omega(g, to_mask(out.b)) < _omega(g),
                      f"B-side holds a largest clique on {write_graph6(g)}")
        done[mode] += 1
    r.note(f"simplicial cases {done['simplicial']}, nonclique cases {done['nonclique']}")
    return r


# -- 6 -----------------------------------------------------------------------

def check_scans(quick: bool = False) -> CheckResult:
    r = CheckResult("6", "registry scans over all graphs on <= 7 vertices",
                    "registered theorems and open statements")
    corpus = small_corpus() if not quick else list(enumerate_up_to(6))
    for spec in registry():
        rep = scan(corpus, spec)
        hits = len(rep.counterexamples)
        if spec.status == "theorem":
            r.require(hits == 0, f"{spec.id} violated on {hits} graphs")
        else:
            r.require(rep.exit_code == (3 if hits else 0), f"{spec.id} discovery not surfaced")
            if hits:
                r.note(f"DISCOVERY {spec.id}: {hits} counterexamples (exit code 3)")
        r.require(recheck(rep), f"{spec.id} counterexamples do not re-validate")
        r.note(f"{spec.id} {spec.status:10s} scanned {rep.scanned} hypothesis {rep.hypothesis_held} "
               f"counterexamples {hits}")
    return r


# -- 7 -----------------------------------------------------------------------

def check_bounds(quick: bool = False) -> CheckResult:
    r = CheckResult("7", "chromatic bounds for divisible graphs",
                    "chi <= omega^2 for PD graphs, chi <= k^(omega-1) for k-divisible graphs")
    corpus = small_corpus() if quick else extended_corpus()
    pd_count = div_count = 0
    for g in corpus:
        k, _ = chi(g)
        w = _omega(g)
        if is_perfectly_divisible(g).holds:
            pd_count += 1
            r.require(k <= w * w, f"chi {k} > omega^2 on {write_graph6(g)}")
        if is_k_divisible(g, 2).holds:
            div_count += 1
            r.require(k <= 2 ** (w - 1) if w >= 1 else k == 0,
                      f"chi {k} > 2^(omega-1) on {write_graph6(g)}")
    r.note(f"{len(corpus)} graphs: {pd_count} perfectly divisible, {div_count} 2-divisible")
    return r


# -- 8 -----------------------------------------------------------------------

def check_two_divisible(quick: bool = False) -> CheckResult:
    r = CheckResult("8", "2-divisibility spot values", "odd holes versus 2-divisibility")
    for k in (5, 7):
        r.require(is_minimally_non_2_divisible(cycle(k)), f"C{k} not minimally non-2-divisible")
    bip = forward = 0
    for g in small_corpus():
        two = is_k_divisible(g, 2).holds
        if bipartition(g) is not None:
            bip += 1
            r.require(two, f"bipartite {write_graph6(g)} not 2-divisible")
        if two:
            forward += 1
            r.require(find_hole(g, "odd", 5) is None, f"2-divisible {write_graph6(g)} has an odd hole")
    r.note(f"C5 and C7 minimally non-2-divisible; {bip} bipartite graphs 2-divisible; "
           f"{forward} 2-divisible graphs odd-hole-free")
    return r


# -- 9 -----------------------------------------------------------------------

def check_io(quick: bool = False) -> CheckResult:
    r = CheckResult("9", "graph6 round trip and scan determinism", "artifact I/O")
    corpus = extended_corpus()
    bad = 0
    for g in corpus:
        line = write_graph6(g)
        h = parse_graph6(line)
        if h != g or write_graph6(h) != line:
            bad += 1
    r.require(bad == 0, f"{bad} graph6 round-trip failures")
    sample = list(enumerate_up_to(6))
    one = scan(sample, "C4.1", jobs=1).to_json(timing=False)
    two = scan(sample, "C4.1", jobs=2).to_json(timing=False)
    r.require(one == two, "scan output depends on --jobs")
    r.note(f"{len(corpus)} graphs round-tripped; scan report identical for jobs=1 and jobs=2")
    return r


CHECKS: dict[str, Callable[[bool], CheckResult]] = {
    "1": check_figure1,
    "2": check_spgt,
    "3": check_triangle_free,
    "4": check_composition,
    "5": check_extensions,
    "6": check_scans,
    "7": check_bounds,
    "8": check_two_divisible,
    "9": check_io,
}


def run_all(quick: bool = False, only: set[str] | None = None) -> list[CheckResult]:
    return [fn(quick) for key, fn in CHECKS.items() if only is None or key in only]
