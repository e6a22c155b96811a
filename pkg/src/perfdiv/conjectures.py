"""Registry of hypothesis => conclusion statements and a corpus scanner.

Each statement is a conjunction of hypothesis predicates and one conclusion
predicate (or, for biconditionals, two sides that must agree). A
*counterexample* satisfies the hypothesis and violates the conclusion.
Statements with ``status == "theorem"`` must never produce one; a hit on a
``"conjecture"`` entry is a discovery.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Literal

from .core import (
    CapExceeded,
    Graph,
    GraphError,
    bits,
    complement,
    exponential_cap,
    named,
    parse_graph6,
    to_mask,
    write_graph6,
)
from .decomposition import find_bisimplicial, find_clique_cutset, find_simplicial
from .divisibility import (
    is_k_divisible,
    is_minimally_non_2_divisible,
    is_mnpd,
    is_perfectly_divisible,
)
from .invariants import max_clique_mask, maximum_cliques
from .patterns import find_hole, find_induced

Evidence = dict
PredicateResult = tuple[bool, Evidence]


@dataclass(frozen=True)
class Predicate:
    name: str
    cost: int
    fn: Callable[[Graph], PredicateResult]

    def __call__(self, g: Graph) -> PredicateResult:
        return self.fn(g)


def _free_of(key: str) -> Callable[[Graph], PredicateResult]:
    def check(g: Graph) -> PredicateResult:
        emb = find_induced(g, named(key))
        if emb is None:
            return True, {}
        return False, {f"induced_{key}": list(emb.map)}
    return check


def _hole_free(parity: str) -> Callable[[Graph], PredicateResult]:
    def check(g: Graph) -> PredicateResult:
        hole = find_hole(g, parity, 5 if parity == "odd" else 4)
        if hole is None:
            return True, {}
        return False, {f"{parity}_hole": list(hole.cycle)}
    return check


def _triangle_free(g: Graph) -> PredicateResult:
    k = max_clique_mask(g)
    if bin(k).count("1") < 3:
        return True, {}
    return False, {"triangle": list(bits(k))[:3]}


def _alpha_le_3(g: Graph) -> PredicateResult:
    stable = max_clique_mask(complement(g))
    size = bin(stable).count("1")
    return size <= 3, {"alpha": size, "stable_set": list(bits(stable))}


def _has_clique_cutset(g: Graph) -> PredicateResult:
    split = find_clique_cutset(g)
    if split is None:
        return False, {}
    return True, {"clique_cutset": sorted(split.c), "v1": sorted(split.v1), "v2": sorted(split.v2)}


def _pd(g: Graph) -> PredicateResult:
    v = is_perfectly_divisible(g, cap=g.n)
    return v.holds, ({} if v.holds else {"no_good_partition": sorted(v.failing_subgraph)})


def _k_div(k: int) -> Callable[[Graph], PredicateResult]:
    def check(g: Graph) -> PredicateResult:
        v = is_k_divisible(g, k, cap=g.n)
        return v.holds, ({} if v.holds else {f"not_{k}_divisible_at": sorted(v.failing_subgraph)})
    return check


def _mnpd(g: Graph) -> PredicateResult:
    return is_mnpd(g, cap=g.n), {}


def _min_non_2(g: Graph) -> PredicateResult:
    return is_minimally_non_2_divisible(g, cap=g.n), {}


def _all_in_max_clique(g: Graph) -> PredicateResult:
    covered = 0
    for k in maximum_cliques(g):
        covered |= to_mask(k)
    missing = [v for v in range(g.n) if not covered >> v & 1]
    return not missing, ({"outside_largest_cliques": missing} if missing else {})


def _no_simplicial(g: Graph) -> PredicateResult:
    s = find_simplicial(g)
    return not s, ({"simplicial": s} if s else {})


def _no_bisimplicial(g: Graph) -> PredicateResult:
    s = find_bisimplicial(g)
    return not s, ({"bisimplicial": s} if s else {})


def _never(g: Graph) -> PredicateResult:
    return False, {}


def _always(g: Graph) -> PredicateResult:
    return True, {}


# Cost ranks: pattern and invariant checks before divisibility, MNPD last.
PREDICATES: dict[str, Predicate] = {p.name: p for p in [
    Predicate("always", 0, _always),
    Predicate("never", 0, _never),
    Predicate("triangle_free", 1, _triangle_free),
    Predicate("alpha_le_3", 1, _alpha_le_3),
    Predicate("no_simplicial_vertex", 1, _no_simplicial),
    Predicate("p5_free", 2, _free_of("p5")),
    Predicate("c5_free", 2, _free_of("c5")),
    Predicate("k23_free", 2, _free_of("k23")),
    Predicate("fourK1_free", 2, _free_of("fourK1")),
    Predicate("every_vertex_in_largest_clique", 2, _all_in_max_clique),
    Predicate("no_bisimplicial_vertex", 2, _no_bisimplicial),
    Predicate("odd_hole_free", 3, _hole_free("odd")),
    Predicate("even_hole_free", 3, _hole_free("even")),
    Predicate("has_clique_cutset", 3, _has_clique_cutset),
    Predicate("perfectly_divisible", 8, _pd),
    Predicate("two_divisible", 8, _k_div(2)),
    Predicate("three_divisible", 9, _k_div(3)),
    Predicate("minimally_non_2_divisible", 10, _min_non_2),
    Predicate("mnpd", 10, _mnpd),
]}


@dataclass(frozen=True)
class ConjectureSpec:
    id: str
    statement: str
    hypothesis: tuple[str, ...]
    conclusion: str
    status: Literal["theorem", "conjecture"]
    kind: Literal["implies", "iff"] = "implies"


_REGISTRY = (
    ConjectureSpec("C1.2", "No MNPD graph has a clique cutset",
                   ("mnpd", "has_clique_cutset"), "never", "conjecture"),
    ConjectureSpec("T1.3", "(P5, C5, K2,3)-free graphs are perfectly divisible",
                   ("p5_free", "c5_free", "k23_free"), "perfectly_divisible", "theorem"),
    ConjectureSpec("T1.4", "No P5-free MNPD graph has a clique cutset",
                   ("p5_free", "mnpd", "has_clique_cutset"), "never", "theorem"),
    ConjectureSpec("T1.5", "No 4K1-free MNPD graph has a clique cutset",
                   ("fourK1_free", "mnpd", "has_clique_cutset"), "never", "theorem"),
    ConjectureSpec("L2.1", "Every vertex of an MNPD graph lies in a largest clique",
                   ("mnpd",), "every_vertex_in_largest_clique", "theorem"),
    ConjectureSpec("L2.2", "MNPD graphs have no simplicial vertex",
                   ("mnpd",), "no_simplicial_vertex", "theorem"),
    ConjectureSpec("C4.1", "Odd-hole-free graphs are perfectly divisible",
                   ("odd_hole_free",), "perfectly_divisible", "conjecture"),
    ConjectureSpec("C4.2", "P5-free graphs are perfectly divisible",
                   ("p5_free",), "perfectly_divisible", "conjecture"),
    ConjectureSpec("C4.3", "Graphs with stability number at most 3 are perfectly divisible",
                   ("alpha_le_3",), "perfectly_divisible", "conjecture"),
    ConjectureSpec("C4.4", "Even-hole-free graphs are perfectly divisible",
                   ("even_hole_free",), "perfectly_divisible", "conjecture"),
    ConjectureSpec("C4.5", "MNPD graphs have no bisimplicial vertex",
                   ("mnpd",), "no_bisimplicial_vertex", "conjecture"),
    ConjectureSpec("C4.6", "A graph is 2-divisible exactly when it is odd-hole-free",
                   ("two_divisible",), "odd_hole_free", "conjecture", kind="iff"),
    ConjectureSpec("C4.7", "No minimally non-2-divisible graph has a clique cutset",
                   ("minimally_non_2_divisible", "has_clique_cutset"), "never", "conjecture"),
    ConjectureSpec("C4.8", "Even-hole-free graphs are 3-divisible",
                   ("even_hole_free",), "three_divisible", "conjecture"),
)


def registry() -> list[ConjectureSpec]:
    return list(_REGISTRY)


def get_spec(spec_id: str) -> ConjectureSpec:
    for s in _REGISTRY:
        if s.id == spec_id:
            return s
    raise KeyError(f"unknown statement id {spec_id!r}")


@dataclass(frozen=True)
class Outcome:
    hypothesis: bool
    counterexample: bool
    certificates: Evidence


def evaluate(spec: ConjectureSpec, g: Graph) -> Outcome:
    """Evaluate one statement on one graph, cheapest predicates first."""
    evidence: Evidence = {}
    if spec.kind == "iff":
        left, ev_l = PREDICATES[spec.hypothesis[0]](g)
        right, ev_r = PREDICATES[spec.conclusion](g)
        if left == right:
            return Outcome(True, False, {})
        evidence.update(ev_l)
        evidence.update(ev_r)
        evidence["direction"] = (f"{spec.hypothesis[0]} and not {spec.conclusion}" if left
                                 else f"{spec.conclusion} and not {spec.hypothesis[0]}")
        return Outcome(True, True, evidence)
    for name in sorted(spec.hypothesis, key=lambda nm: PREDICATES[nm].cost):
        ok, ev = PREDICATES[name](g)
        if not ok:
            return Outcome(False, False, {})
        evidence.update(ev)
    holds, ev = PREDICATES[spec.conclusion](g)
    if holds:
        return Outcome(True, False, {})
    evidence.update(ev)
    return Outcome(True, True, evidence)


# -- scanning ----------------------------------------------------------------

@dataclass
class ScanReport:
    conjecture_id: str
    status: str
    scanned: int = 0
    skipped: int = 0
    hypothesis_held: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)
    duration_ms: int = 0
    params: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        """0 clean, 1 theorem violated, 3 conjecture counterexample, 2 input errors only."""
        if self.counterexamples:
            return 1 if self.status == "theorem" else 3
        if self.errors:
            return 2
        return 0

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("duration_ms")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ScanReport":
        d = json.loads(text)
        d.setdefault("duration_ms", 0)
        return cls(**d)

    def render_text(self, timing: bool = True) -> str:
        lines = [
            f"{self.conjecture_id} [{self.status}]: scanned {self.scanned}, skipped {self.skipped}, "
            f"hypothesis held {self.hypothesis_held}, counterexamples {len(self.counterexamples)}",
        ]
        for ce in self.counterexamples:
            lines.append(f"  {ce['graph6']}  {json.dumps(ce['certificates'], sort_keys=True)}")
        for err in self.errors:
            lines.append(f"  input error line {err['line']}: {err['message']}")
        if timing:
            lines.append(f"  duration {self.duration_ms} ms")
        return "\n".join(lines)


def _work(item: tuple[str, str, int]) -> tuple[str, str, Outcome | None]:
    spec_id, g6, cap = item
    g = parse_graph6(g6)
    if g.n > cap:
        return g6, "skipped", None
    try:
        return g6, "ok", evaluate(get_spec(spec_id), g)
    except CapExceeded:
        return g6, "skipped", None


def scan(corpus: Iterable[Graph | str], spec: ConjectureSpec | str, cap: int | None = None,
         jobs: int = 1, params: dict | None = None) -> ScanReport:
    """Evaluate ``spec`` over a corpus of graphs or graph6 lines.

    Unparseable lines are recorded and skipped over. The report is sorted by
    graph6 string, so it does not depend on ``jobs``.
    """
    if isinstance(spec, str):
        spec = get_spec(spec)
    limit = exponential_cap() if cap is None else cap
    started = time.perf_counter()
    report = ScanReport(spec.id, spec.status, params=dict(params or {}, cap=limit))
    items = []
    for lineno, entry in enumerate(corpus, 1):
        if isinstance(entry, Graph):
            items.append((spec.id, write_graph6(entry), limit))
            continue
        line = entry.strip()
        if not line:
            continue
        try:
            parse_graph6(line)
        except GraphError as exc:
            report.errors.append({"line": lineno, "text": line, "message": str(exc)})
            continue
        items.append((spec.id, line, limit))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_work, items, chunksize=16))
    else:
        results = [_work(it) for it in items]
    for g6, state, outcome in results:
        if state == "skipped":
            report.skipped += 1
            continue
        report.scanned += 1
        if outcome.hypothesis:
            report.hypothesis_held += 1
        if outcome.counterexample:
            report.counterexamples.append({"graph6": g6, "certificates": outcome.certificates})
    report.counterexamples.sort(key=lambda ce: ce["graph6"])
    report.duration_ms = int((time.perf_counter() - started) * 1000)
    return report


def recheck(report: ScanReport) -> bool:
    """Re-derive every listed counterexample from its graph6 line alone."""
    spec = get_spec(report.conjecture_id)
    for ce in report.counterexamples:
        if not evaluate(spec, parse_graph6(ce["graph6"])).counterexample:
            return False
    return True
