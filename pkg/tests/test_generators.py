import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from perfdiv.core import GraphError, graph_from_edges, relabel
from perfdiv.generators import (
    canonical_code_bruteforce,
    canonical_form,
    canonical_order,
    enumerate_small,
    enumerate_triangle_free,
    random_glued,
    random_graph,
)
from perfdiv.invariants import max_clique_mask

from strategies import graphs


@pytest.mark.parametrize("n,count", list(enumerate([1, 1, 2, 4, 11, 34, 156, 1044])))
def test_counts(n, count):
    assert len(list(enumerate_small(n))) == count


@pytest.mark.parametrize("n,count", list(enumerate([1, 1, 2, 3, 7, 14, 38, 107, 410])))
def test_triangle_free_counts(n, count):
    found = list(enumerate_triangle_free(n))
    assert len(found) == count
    assert all(bin(max_clique_mask(g)).count("1") < 3 for g in found)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_enumeration_against_brute_force():
    # every labelled graph on 5 vertices is isomorphic to exactly one listed graph
    listed = [_nx(g) for g in enumerate_small(5)]
    pairs = list(itertools.combinations(range(5), 2))
    for bits_ in range(0, 1 << len(pairs), 37):
        g = graph_from_edges(5, [e for i, e in enumerate(pairs) if bits_ >> i & 1])
        assert sum(nx.is_isomorphic(_nx(g), h) for h in listed) == 1


@given(graphs(max_n=7))
def test_canonical_code_is_exact(g):
    code, order = canonical_order(g)
    assert code == canonical_code_bruteforce(g)
    assert sorted(order) == list(range(g.n))


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_enumeration_limits():
    with pytest.raises(GraphError):
        list(enumerate_small(8))
    with pytest.raises(GraphError):
        list(enumerate_triangle_free(10))


def test_random_graph_is_seeded():
    assert random_graph(9, 0.4, 3) == random_graph(9, 0.4, 3)
    assert random_graph(6, 1.0, 0).edge_count == 15
    with pytest.raises(GraphError):
        random_graph(5, 1.5, 0)


def test_random_glued_layout():
    g, split = random_glued(3, 4, 2, 0.5, 11)
    assert split.c == frozenset({0, 1})
    assert split.v1 == frozenset({2, 3, 4}) and split.v2 == frozenset({5, 6, 7, 8})
    assert split.is_valid()


@pytest.mark.parametrize("args", [(0, 2, 1, 0.5, 0), (2, 0, 1, 0.5, 0), (2, 2, 0, 0.5, 0), (2, 2, 1, -0.1, 0)])
def test_random_glued_errors(args):
    with pytest.raises(GraphError):
        random_glued(*args)
