"""
Good partitions across a clique cutset
======================================

Glue two random pieces along a shared clique, find good partitions of each
piece and combine them. The B-side always keeps a smaller clique number.
The A-side can lose perfection, but only when the graph contains an induced
P5 once the cutset is made minimal.
"""

import random

from perfdiv import (
    combine_good_partitions,
    extract_p5_witness,
    find_induced,
    minimize_cutset,
    random_glued,
    split_for,
    write_graph6,
)
from perfdiv.core import path
from perfdiv.divisibility import find_good_partition_of

p5 = path(5)
shown = 0
imperfect = 0
for seed in range(2000):
    rng = random.Random(seed)
    g, split = random_glued(rng.randint(2, 5), rng.randint(2, 5), rng.randint(1, 3), 0.5, seed)
    split = split_for(g, minimize_cutset(g, split.c))
    gp1 = find_good_partition_of(g, split.side1)
    gp2 = find_good_partition_of(g, split.side2)
    if gp1 is None or gp2 is None:
        continue
    rep = combine_good_partitions(g, split, gp1, gp2)
    assert rep.omega_ok
    if rep.a_perfect:
        continue
    imperfect += 1
    assert find_induced(g, p5) is not None
    if shown < 3:
        shown += 1
        print(write_graph6(g), "hole", rep.witness.cycle, "-> P5", extract_p5_witness(g, split, rep))

print(imperfect, "imperfect combinations, each with an induced P5")
