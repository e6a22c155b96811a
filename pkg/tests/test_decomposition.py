import pytest

from perfdiv.core import (
    FIGURE1_NAMES,
    complement,
    cycle,
    disjoint_union,
    figure1_names,
    figure1_set,
    graph_from_edges,
    induced,
    named,
    parse_graph6,
    path,
)
from perfdiv.decomposition import (
    CutsetSplit,
    combine_good_partitions,
    extract_p5_witness,
    find_bisimplicial,
    find_clique_cutset,
    find_simplicial,
    minimize_cutset,
    one_side_perfect_partition,
    split_for,
)
from perfdiv.divisibility import GoodPartition, PreconditionError, find_good_partition_of
from perfdiv.generators import random_glued
from perfdiv.patterns import find_induced


@pytest.fixture
def figure1():
    return named("figure1")


@pytest.fixture
def figure1_combination(figure1):
    split = split_for(figure1, figure1_set("EF"))
    gp1 = GoodPartition(figure1_set("EABCD"), figure1_set("F"), figure1)
    gp2 = GoodPartition(figure1_set("FGHIJ"), figure1_set("E"), figure1)
    return split, combine_good_partitions(figure1, split, gp1, gp2)


def test_simplicial_and_bisimplicial(figure1):
    assert find_simplicial(figure1) == []
    assert figure1_names(find_bisimplicial(figure1)) == "ABCDGHIJ"
    assert find_simplicial(path(3)) == [0, 2]


def test_first_clique_cutset_of_figure1(figure1):
    split = find_clique_cutset(figure1)
    assert split.c == figure1_set("AF")
    assert {split.v1, split.v2} == {figure1_set("BCD"), figure1_set("EGHIJ")}


def test_ef_split(figure1):
    split = split_for(figure1, figure1_set("EF"))
    assert split.v1 == figure1_set("ABCD") and split.v2 == figure1_set("GHIJ")
    assert minimize_cutset(figure1, split.c) == split.c


@pytest.mark.parametrize("edges,n,cut", [
    ([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)], 5, {2}),
    ([(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)], 4, {1, 2}),
])
def test_triangles_sharing_a_clique(edges, n, cut):
    g = graph_from_edges(n, edges)
    assert find_clique_cutset(g).c == frozenset(cut)


def test_no_cutset():
    assert find_clique_cutset(cycle(5)) is None
    assert find_clique_cutset(named("complete(4)")) is None


def test_disconnected_graph_has_empty_cutset():
    g = disjoint_union(cycle(5), path(2))
    assert find_clique_cutset(g).c == frozenset()


def test_minimize_cutset():
    # {0, 1} separates 2 from 3, but {0} alone already does
    g = graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 3)])
    assert minimize_cutset(g, {0, 1}) == frozenset({0})
    with pytest.raises(PreconditionError):
        split_for(g, {1})


def test_invalid_split_detected(figure1):
    bad = CutsetSplit(figure1_set("E"), figure1_set("ABCDF"), figure1_set("GHIJ"), figure1)
    assert not bad.is_valid()


def test_figure1_combination(figure1, figure1_combination):
    split, rep = figure1_combination
    assert rep.b == frozenset() and rep.omega_ok and rep.cliques_met
    assert not rep.a_perfect
    assert rep.witness.kind == "hole" and rep.witness.vertices == figure1_set("ABCDF")
    p5 = extract_p5_witness(figure1, split, rep)
    assert "".join(FIGURE1_NAMES[v] for v in p5) == "CBAFJ"
    assert find_induced(induced(figure1, p5)[0], path(5)) is not None


def test_one_side_perfect_needs_perfect_side(figure1, figure1_combination):
    split, _ = figure1_combination
    gp2 = GoodPartition(figure1_set("FGHIJ"), figure1_set("E"), figure1)
    with pytest.raises(PreconditionError):
        one_side_perfect_partition(figure1, split, gp2)


def test_one_side_perfect():
    g, split = random_glued(2, 5, 1, 0.5, 7)
    side2 = find_good_partition_of(g, split.side2)
    out = one_side_perfect_partition(g, split, side2)
    assert out.is_valid() and split.v1 <= out.a


def test_combination_rejects_wrong_piece(figure1, figure1_combination):
    split, _ = figure1_combination
    gp = GoodPartition(figure1_set("EABCD"), figure1_set("F"), figure1)
    with pytest.raises(PreconditionError):
        combine_good_partitions(figure1, split, gp, gp)


def test_antihole_witness_gives_p5():
    # complement of C7 on 0..6, plus vertex 7 hanging off vertex 0
    anti = complement(cycle(7))
    g = graph_from_edges(8, list(anti.edges()) + [(0, 7)])
    split = split_for(g, {0})
    assert split.v1 == frozenset(range(1, 7))
    gp1 = GoodPartition(frozenset(range(1, 7)), frozenset({0}), g)
    gp2 = GoodPartition(frozenset({0, 7}), frozenset(), g)
    rep = combine_good_partitions(g, split, gp1, gp2)
    assert not rep.a_perfect and rep.witness.kind == "antihole"
    p5 = extract_p5_witness(g, split, rep)
    assert p5[3:] == (0, 7)
    assert find_induced(induced(g, p5)[0], path(5)) is not None


def test_non_minimal_cutset_regression():
    # C5 plus an isolated vertex: P5-free, yet {0} is a non-minimal cutset
    g = parse_graph6("E@iO")
    assert find_induced(g, path(5)) is None
    split = split_for(g, {0})
    gp1 = GoodPartition(frozenset({0, 1}), frozenset(), g)
    gp2 = GoodPartition(frozenset({2, 3, 4, 5}), frozenset({0}), g)
    rep = combine_good_partitions(g, split, gp1, gp2)
    assert not rep.a_perfect
    with pytest.raises(PreconditionError):
        extract_p5_witness(g, split, rep)
    assert minimize_cutset(g, {0}) == frozenset()


def test_perfect_combination_has_nothing_to_extract():
    g, split = random_glued(2, 2, 1, 0.0, 1)
    gp1 = find_good_partition_of(g, split.side1)
    gp2 = find_good_partition_of(g, split.side2)
    rep = combine_good_partitions(g, split, gp1, gp2)
    assert rep.a_perfect
    with pytest.raises(PreconditionError):
        extract_p5_witness(g, split, rep)
