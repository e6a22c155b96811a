import pytest
from hypothesis import given

from perfdiv.core import complement, cycle, figure1_set, graph_from_edges, induced, named
from perfdiv.divisibility import (
    GoodPartition,
    PreconditionError,
    extend_partition_around_vertex,
    find_good_partition,
    find_good_partition_of,
    find_k_partition,
    good_partitions,
    is_k_divisible,
    is_minimally_non_2_divisible,
    is_mnpd,
    is_mnpd_literal,
    is_perfectly_divisible,
)
from perfdiv.generators import enumerate_up_to
from perfdiv.invariants import alpha, chi, omega
from perfdiv.perfection import is_perfect

from strategies import graphs


def test_c5_good_partition():
    gp = find_good_partition(named("c5"))
    assert (gp.a, gp.b) == (frozenset({1, 2, 3, 4}), frozenset({0}))
    assert gp.is_valid()


def test_perfect_graph_fast_path():
    gp = find_good_partition(cycle(6))
    assert gp.a == frozenset(range(6)) and gp.b == frozenset()


def test_grotzsch():
    g = named("grotzsch")
    assert find_good_partition(g) is None
    v = is_perfectly_divisible(g)
    assert not v.holds and v.failing_subgraph == frozenset(range(11))
    assert is_mnpd(g)


def test_petersen_is_pd():
    assert is_perfectly_divisible(named("petersen")).holds


def test_figure1_divisibility():
    g = named("figure1")
    assert is_perfectly_divisible(g).holds
    v = is_k_divisible(g, 2)
    assert not v.holds and v.failing_subgraph == figure1_set("ABCDF")


def test_k_divisibility_of_odd_cycles():
    assert not is_k_divisible(cycle(5), 2).holds
    part = find_k_partition(cycle(5), 3)
    assert part is not None and part.is_valid()
    assert is_minimally_non_2_divisible(cycle(5))
    assert is_minimally_non_2_divisible(cycle(7))
    assert not is_minimally_non_2_divisible(named("figure1"))


def test_edgeless_is_vacuously_divisible():
    assert is_k_divisible(named("fourK1"), 1).holds
    assert is_k_divisible(named("fourK1"), 2).holds


def test_forged_partition_is_rejected():
    g = cycle(5)
    gp = GoodPartition(frozenset(range(5)), frozenset(), g)
    assert not gp.is_valid()
    with pytest.raises(PreconditionError):
        gp.validate()


@given(graphs(min_n=1, max_n=7))
def test_every_listed_partition_is_good(g):
    for gp in good_partitions(g):
        assert gp.problems() == []


@given(graphs(max_n=7))
def test_low_stability_number_implies_pd(g):
    if alpha(g)[0] <= 2:
        assert is_perfectly_divisible(g).holds


@given(graphs(max_n=7))
def test_pd_chromatic_bound(g):
    if is_perfectly_divisible(g).holds:
        w = omega(g)[0]
        assert chi(g)[0] <= max(w * w, w)


@given(graphs(max_n=7))
def test_perfect_implies_everything(g):
    if is_perfect(g).perfect:
        assert is_perfectly_divisible(g).holds
        assert is_k_divisible(g, 2).holds


def test_failing_subgraph_is_minimal_witness():
    g = named("figure1")
    v = is_k_divisible(g, 2)
    h, _ = induced(g, sorted(v.failing_subgraph))
    assert find_k_partition(h, 2) is None


def test_mnpd_agrees_with_literal_definition():
    for g in enumerate_up_to(7):
        if g.n >= 5:
            assert is_mnpd(g) == is_mnpd_literal(g)


def test_good_partition_of_piece():
    g = named("figure1")
    piece = figure1_set("EFGHIJ")
    gp = find_good_partition_of(g, piece)
    assert gp.domain == piece and gp.is_valid()


def test_extend_simplicial():
    # pendant vertex 5 on a 5-cycle
    g = graph_from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
    gp = find_good_partition_of(g, range(5))
    out = extend_partition_around_vertex(g, 5, gp, "simplicial")
    assert 5 in out.a and out.is_valid()


def test_extend_nonclique():
    # vertex 5 hangs off the triangle 0-4-6, so it lies in no largest clique
    g = graph_from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (4, 6), (0, 6)])
    gp = find_good_partition_of(g, [0, 1, 2, 3, 4, 6])
    out = extend_partition_around_vertex(g, 5, gp, "nonclique")
    assert 5 in out.b and out.is_valid()


def test_extend_preconditions():
    g = complement(cycle(5))
    gp = find_good_partition_of(g, range(4))
    with pytest.raises(PreconditionError):
        extend_partition_around_vertex(g, 4, gp, "simplicial")
    with pytest.raises(PreconditionError):
        extend_partition_around_vertex(g, 4, gp, "nonclique")
    with pytest.raises(PreconditionError):
        extend_partition_around_vertex(g, 3, gp, "simplicial")
