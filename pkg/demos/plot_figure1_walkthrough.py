"""
A divisible graph whose halves do not glue
==========================================

The ``figure1`` graph on letters A..J is perfectly divisible, is not
2-divisible, and has a clique cutset {E, F}. Gluing good partitions of the
two sides leaves an imperfect A-side, and the odd hole it contains leads to
an induced P5.
"""

from perfdiv import (
    GoodPartition,
    combine_good_partitions,
    extract_p5_witness,
    is_k_divisible,
    is_perfectly_divisible,
    named,
    omega,
    split_for,
)
from perfdiv.core import FIGURE1_NAMES, figure1_names, figure1_set

g = named("figure1")
print("n =", g.n, " m =", g.edge_count, " omega =", omega(g)[0])

# Divisibility. The 2-divisibility failure comes with the smallest bad subgraph.
print("perfectly divisible:", is_perfectly_divisible(g).holds)
two = is_k_divisible(g, 2)
print("2-divisible:", two.holds, " fails on", figure1_names(two.failing_subgraph))

###############################################################################
# Split around {E, F} and take one good partition of each side.
split = split_for(g, figure1_set("EF"))
print("sides:", figure1_names(split.v1), "/", figure1_names(split.v2))

gp1 = GoodPartition(figure1_set("EABCD"), figure1_set("F"), g)
gp2 = GoodPartition(figure1_set("FGHIJ"), figure1_set("E"), g)
print("side partitions good:", gp1.is_valid(), gp2.is_valid())

###############################################################################
# Glue them. B comes out empty, so the clique bound is fine, but A is the
# whole graph and it is not perfect.
rep = combine_good_partitions(g, split, gp1, gp2)
print("B =", figure1_names(rep.b) or "{}", " omega ok:", rep.omega_ok, " A perfect:", rep.a_perfect)
print("odd hole in A:", "-".join(FIGURE1_NAMES[v] for v in rep.witness.cycle))

p5 = extract_p5_witness(g, split, rep)
print("induced P5:", "-".join(FIGURE1_NAMES[v] for v in p5))
