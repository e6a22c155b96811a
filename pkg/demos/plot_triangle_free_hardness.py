"""
Triangle-free graphs: divisibility is 3-coloring
================================================

On a triangle-free graph a good partition and a proper 3-coloring carry the
same information, so deciding perfect divisibility is as hard as
3-coloring. We convert in both directions and check the equivalence on
every triangle-free graph with at most eight vertices.
"""

from collections import Counter

from perfdiv import (
    chi,
    coloring_to_good_partition,
    find_good_partition,
    good_partition_to_coloring,
    is_k_colorable,
    named,
    pd_equals_3colorable,
)
from perfdiv.generators import enumerate_triangle_free

# Petersen: 3-colorable, so a coloring becomes a good partition and back.
pet = named("petersen")
col = is_k_colorable(pet, 3)
gp = coloring_to_good_partition(pet, col)
print("Petersen A =", sorted(gp.a), " B =", sorted(gp.b))
print("recovered coloring:", good_partition_to_coloring(pet, gp).assignment)

###############################################################################
# Grötzsch: chromatic number 4, hence no good partition at all.
gro = named("grotzsch")
print("Grötzsch chi =", chi(gro)[0], " good partition:", find_good_partition(gro))

###############################################################################
# The equivalence over the whole small corpus.
tally = Counter()
for n in range(9):
    for g in enumerate_triangle_free(n):
        if g.edge_count:
            eq = pd_equals_3colorable(g)
            tally["agree" if eq.agree else "disagree"] += 1
            tally["not 3-colorable"] += not eq.threecol
print(dict(tally))
