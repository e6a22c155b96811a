"""
Scanning the statement registry
===============================

Every registered statement is a hypothesis and a conclusion over graphs. A
scan evaluates it on a corpus and lists graphs that satisfy the hypothesis
but break the conclusion. On a theorem that would be a bug. On an open
statement it would be a discovery.
"""

from perfdiv import is_mnpd, named, registry, scan
from perfdiv.generators import enumerate_up_to

corpus = list(enumerate_up_to(7))
print(len(corpus), "graphs on at most 7 vertices")

for spec in registry():
    rep = scan(corpus, spec)
    print(f"{spec.id:5} {spec.status:10} hypothesis held {rep.hypothesis_held:5}  "
          f"counterexamples {len(rep.counterexamples)}  {spec.statement}")

###############################################################################
# Nothing here is minimally non-perfectly-divisible, so the statements about
# such graphs hold vacuously at this size. The Grötzsch graph is one, on
# eleven vertices.
print("Grötzsch is MNPD:", is_mnpd(named("grotzsch")))
