"""Exact algorithms for perfect divisibility of small graphs.

A graph is perfectly divisible when every induced subgraph ``H`` splits its
vertices into ``A`` and ``B`` with ``H[A]`` perfect and ``H[B]`` of smaller
clique number than ``H``. Everything here is exact and returns
checkable certificates; exponential routines refuse graphs above a vertex cap.
"""

from .core import (
    CapExceeded,
    Graph,
    GraphError,
    complement,
    graph_from_edges,
    induced,
    named,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)
from .decomposition import (
    CombinationReport,
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
from .divisibility import (
    DivisibilityVerdict,
    GoodPartition,
    KPartition,
    PreconditionError,
    TheoremViolation,
    extend_partition_around_vertex,
    find_good_partition,
    find_k_partition,
    good_partitions,
    is_k_divisible,
    is_minimally_non_k_divisible,
    is_mnpd,
    is_perfectly_divisible,
)
from .generators import canonical_form, enumerate_small, random_glued, random_graph
from .hardness import coloring_to_good_partition, good_partition_to_coloring, pd_equals_3colorable
from .invariants import Coloring, alpha, chi, is_k_colorable, maximal_cliques, maximum_cliques, omega
from .patterns import Embedding, HoleCertificate, find_hole, find_induced, find_odd_antihole, is_l_free
from .perfection import PerfectionVerdict, is_perfect
from .conjectures import ConjectureSpec, ScanReport, evaluate, get_spec, registry, scan

__version__ = "0.1.0"
