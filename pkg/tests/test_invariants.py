import networkx as nx
import pytest
from hypothesis import given

from perfdiv.core import complement, figure1_set, induced, named
from perfdiv.invariants import (
    alpha,
    bipartition,
    chi,
    components,
    is_k_colorable,
    maximal_cliques,
    maximum_cliques,
    omega,
)

from strategies import graphs


@pytest.mark.parametrize("key,w,a,x", [
    ("figure1", 3, 4, 3), ("grotzsch", 2, 5, 4), ("petersen", 2, 4, 3),
    ("c5", 2, 2, 3), ("cycle(7)", 2, 3, 3), ("complete(5)", 5, 1, 5), ("fourK1", 1, 4, 1),
])
def test_known_values(key, w, a, x):
    g = named(key)
    assert omega(g)[0] == w
    assert alpha(g)[0] == a
    k, col = chi(g)
    assert k == x and col.is_proper_for(g)


def test_figure1_omega_witness():
    assert omega(named("figure1"))[1] == figure1_set("AEF")


@given(graphs(max_n=9))
def test_alpha_is_omega_of_complement(g):
    assert alpha(g)[0] == omega(complement(g))[0]


@given(graphs(max_n=8))
def test_chromatic_sandwich(g):
    w, clique = omega(g)
    assert g.is_clique(clique)
    k, col = chi(g)
    assert w <= k <= g.n
    assert col.is_proper_for(g)
    if k > 0:
        assert is_k_colorable(g, k - 1) is None


@given(graphs(max_n=9))
def test_maximal_cliques_match_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ref = sorted(sorted(c) for c in nx.find_cliques(nxg)) if g.n else [[]]
    assert sorted(sorted(c) for c in maximal_cliques(g)) == ref
    top = max(len(c) for c in ref)
    assert all(len(c) == top for c in maximum_cliques(g))


def test_figure1_components_without_ef():
    g = named("figure1")
    rest = sorted(set(range(10)) - figure1_set("EF"))
    h, _ = induced(g, rest)
    parts = sorted(frozenset(rest[v] for v in c) for c in components(h))
    assert sorted(parts, key=min) == [figure1_set("ABCD"), figure1_set("GHIJ")]


@given(graphs(max_n=9))
def test_bipartition_is_two_coloring(g):
    sides = bipartition(g)
    assert (sides is not None) == (is_k_colorable(g, 2) is not None)
    if sides:
        s0, s1 = sides
        assert g.is_stable_mask(s0) and g.is_stable_mask(s1)
