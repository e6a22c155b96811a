import networkx as nx
import pytest
from hypothesis import given

from perfdiv.core import (
    CapExceeded,
    Graph,
    GraphError,
    check_cap,
    complement,
    cycle,
    figure1_names,
    figure1_set,
    graph_from_edges,
    induced,
    named,
    parse_graph6,
    read_graph6_lines,
    relabel,
    write_graph6,
)

from strategies import graphs


def test_figure1_shape():
    g = named("figure1")
    assert (g.n, g.edge_count) == (10, 13)
    assert write_graph6(g) == "IhaWOC@BG"
    assert figure1_names(figure1_set("EF")) == "EF"


@pytest.mark.parametrize("key,n,m", [
    ("grotzsch", 11, 20), ("petersen", 10, 15), ("p5", 5, 4), ("c5", 5, 5),
    ("k23", 5, 6), ("fourK1", 4, 0), ("bull", 5, 5), ("cycle(7)", 7, 7),
    ("complete(4)", 4, 6),
])
def test_catalog_sizes(key, n, m):
    g = named(key)
    assert (g.n, g.edge_count) == (n, m)


def test_unknown_name():
    with pytest.raises(GraphError):
        named("nonesuch")


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ref = nx.to_graph6_bytes(nxg, header=False).decode().strip()
    assert write_graph6(g) == ref


@pytest.mark.parametrize("bad", ["", "A\x7f", "C~~", "B@", "BA"])
def test_graph6_rejects(bad):
    with pytest.raises(GraphError):
        parse_graph6(bad)


def test_graph6_header_and_lines():
    assert parse_graph6(">>graph6<<Dhc") == cycle(5)
    rows = list(read_graph6_lines(["Dhc", "", "  C~ ", "??"]))
    assert [(no, line) for no, line, _ in rows] == [(1, "Dhc"), (3, "C~"), (4, "??")]
    assert rows[1][2] == named("complete(4)")
    assert isinstance(rows[2][2], GraphError)


def test_invalid_graphs():
    with pytest.raises(GraphError):
        graph_from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        graph_from_edges(3, [(0, 5)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_cap(monkeypatch):
    monkeypatch.setenv("PERFDIV_MAX_N", "5")
    with pytest.raises(CapExceeded):
        check_cap(cycle(6))
    check_cap(cycle(5))


@given(graphs(max_n=9))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


@given(graphs(min_n=1, max_n=9))
def test_induced_composes(g):
    outer = list(range(0, g.n, 1))[: g.n - g.n // 3]
    inner = outer[::2]
    h, old = induced(g, outer)
    assert list(old) == outer
    # positions of ``inner`` inside ``outer``
    assert induced(h, [outer.index(v) for v in inner])[0] == induced(g, inner)[0]


def test_relabel_reverses_path():
    p = named("p5")
    assert relabel(p, [4, 3, 2, 1, 0]) == p
