"""Immutable simple graphs on at most 62 vertices with bitset adjacency.

Vertex sets are plain ``frozenset`` objects at the public surface; internally
everything runs on Python ints used as bitmasks (bit ``v`` set means vertex
``v`` is a member).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 62
DEFAULT_CAP = 16
CAP_ENV_VAR = "PERFDIV_MAX_N"


class GraphError(ValueError):
    """Invalid graph construction or malformed input."""


class CapExceeded(GraphError):
    """An exponential search was refused because the graph is too large."""


def exponential_cap() -> int:
    """Vertex cap for exponential searches (overridable via ``PERFDIV_MAX_N``)."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None


def check_cap(g: "Graph", cap: int | None = None, what: str = "search") -> None:
    limit = exponential_cap() if cap is None else cap
    if g.n > limit:
        raise CapExceeded(f"{what} refused: {g.n} vertices exceeds cap {limit}")


# -- bitmask helpers ---------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# -- the graph type ----------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood bitmask of ``v``. Construct through
    :func:`graph_from_edges` or :func:`from_rows`; both validate symmetry and
    irreflexivity.
    """

    n: int
    rows: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return to_set(self.rows[v])

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def has_edge_within(self, mask: int) -> bool:
        return any(self.rows[v] & mask for v in bits(mask))

    def is_clique_mask(self, mask: int) -> bool:
        return all((self.rows[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_stable_mask(self, mask: int) -> bool:
        return not self.has_edge_within(mask)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        return self.is_clique_mask(to_mask(vertices))

    def with_label(self, label: str | None) -> "Graph":
        return Graph(self.n, self.rows, label)

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.edge_count}>"


def from_rows(rows: Iterable[int], label: str | None = None) -> Graph:
    rows = tuple(rows)
    return Graph(len(rows), rows, label)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), label)


def induced_mask(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``mask``; second value maps new index -> old vertex."""
    if mask & ~g.vertex_mask:
        raise GraphError("vertex set is not contained in the graph")
    old = tuple(bits(mask))
    pos = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        r = 0
        for u in bits(g.rows[v] & mask):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph(len(old), tuple(rows)), old


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[s]`` and the order-preserving map from its vertices to ``g``'s."""
    s = list(s)
    if any(not 0 <= v < g.n for v in s):
        raise GraphError("vertex set is not contained in the graph")
    return induced_mask(g, to_mask(s))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)), None)


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Graph whose vertex ``i`` is ``g``'s vertex ``perm[i]``."""
    perm = list(perm)
    pos = {v: i for i, v in enumerate(perm)}
    rows = []
    for v in perm:
        r = 0
        for u in bits(g.rows[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph(g.n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return from_rows(rows)


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Append vertex ``g.n`` adjacent to ``neighbors``."""
    nb = to_mask(neighbors)
    rows = [r | (1 << g.n if nb >> v & 1 else 0) for v, r in enumerate(g.rows)]
    rows.append(nb)
    return from_rows(rows)


# -- graph6 ------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def write_graph6(g: Graph) -> str:
    """Short-form graph6 encoding (no header, no trailing newline)."""
    out = [chr(g.n + 63)]
    acc, nbits = 0, 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise GraphError("empty graph6 line")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"invalid graph6 character {ch!r}")
    n = ord(line[0]) - 63
    if n > MAX_VERTICES:
        raise GraphError("graph6 long form (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[1:]
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    stream = 0
    for ch in body:
        stream = stream << 6 | (ord(ch) - 63)
    pad = need * 6 - nbits
    if stream & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 line")
    stream >>= pad
    rows = [0] * n
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if stream >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | GraphError]]:
    """Yield ``(line_number, line, graph_or_error)`` for non-blank lines."""
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, line, parse_graph6(line)
        except GraphError as exc:
            yield lineno, line, exc


# -- named graphs ------------------------------------------------------------

FIGURE1_NAMES = "ABCDEFGHIJ"


def figure1_vertex(name: str) -> int:
    """Vertex index of a letter in the figure1 graph (A..J map to 0..9)."""
    return FIGURE1_NAMES.index(name)


def figure1_set(names: str) -> frozenset[int]:
    return frozenset(figure1_vertex(c) for c in names)


def figure1_names(vertices: Iterable[int]) -> str:
    return "".join(FIGURE1_NAMES[v] for v in sorted(vertices))


def complete(k: int) -> Graph:
    return graph_from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)], f"K{k}")


def path(k: int) -> Graph:
    return graph_from_edges(k, [(i, i + 1) for i in range(k - 1)], f"P{k}")


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(k, [(i, (i + 1) % k) for i in range(k)], f"C{k}")


def empty(k: int) -> Graph:
    return graph_from_edges(k, [], f"{k}K1")


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def _figure1() -> Graph:
    pairs = "AB BC CD EA EF FA FD EG EJ FJ GH HI IJ".split()
    return graph_from_edges(10, [(figure1_vertex(p[0]), figure1_vertex(p[1])) for p in pairs], "figure1")


def _grotzsch() -> Graph:
    # Mycielskian of C5: outer cycle 0..4, shadows 5..9 (5+i copies i), apex 10.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges += [(5 + i, (i + 1) % 5), (5 + i, (i - 1) % 5), (5 + i, 10)]
    return graph_from_edges(11, edges, "grotzsch")


def _petersen() -> Graph:
    # Outer 5-cycle 0..4, spokes i -> 5+i, inner pentagram 5+i -> 5+(i+2)%5.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, edges, "petersen")


# Vertex numbering for the small patterns:
#   bull:   triangle 0-1-2, horns 3-0 and 4-1
#   fork:   a=0, b=1, c=2, d1=3, d2=4 with edges ab, bc, cd1, cd2
#   banner: 4-cycle 0-1-2-3 plus pendant 4 on vertex 0
#   dart:   center 0 joined to 1..4, plus edges 1-2 and 2-3
_FIXED = {
    "p5": lambda: path(5).with_label("p5"),
    "c5": lambda: cycle(5).with_label("c5"),
    "k23": lambda: complete_bipartite(2, 3).with_label("k23"),
    "fourK1": lambda: empty(4).with_label("fourK1"),
    "bull": lambda: graph_from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)], "bull"),
    "fork": lambda: graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)], "fork"),
    "banner": lambda: graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)], "banner"),
    "dart": lambda: graph_from_edges(
        5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (0, 4)], "dart"),
    "figure1": _figure1,
    "grotzsch": _grotzsch,
    "petersen": _petersen,
}

_PARAMETRIC = {"complete": complete, "path": path, "cycle": cycle}

CATALOG_KEYS = tuple(_FIXED) + tuple(f"{k}(k)" for k in _PARAMETRIC)


def named(key: str) -> Graph:
    """Look up a catalog graph: a fixed key or ``complete(k)``/``path(k)``/``cycle(k)``."""
    key = key.strip()
    if key in _FIXED:
        return _FIXED[key]()
    if key.endswith(")") and "(" in key:
        fam, arg = key[:-1].split("(", 1)
        if fam in _PARAMETRIC:
            try:
                k = int(arg)
            except ValueError:
                raise GraphError(f"bad parameter in catalog key {key!r}") from None
            return _PARAMETRIC[fam](k).with_label(key)
    raise GraphError(f"unknown catalog key {key!r}")
