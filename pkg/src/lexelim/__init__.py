"""LexBFS-based elimination orderings, structural recognisers and clique/colouring algorithms."""

from ._kernels import BACKEND
from .algorithms import (
    CliqueResult, Coloring, SpecialVertex, VertexKind, color_chordal, color_universally_signable,
    enumerate_maximal_cliques_3wf, find_simplicial_or_degree2, greedy_color, max_clique_bruteforce,
    max_clique_c2, max_clique_c3, max_clique_c4, max_clique_c6, max_clique_chordal, max_clique_ehf,
    maximal_cliques_bruteforce,
)
from .configurations import (
    ClassId, ConfigKind, ConfigurationWitness, classes_of, classify_configuration,
    configuration_inventory, contains_configuration, forbidden_witness, in_class, wheel_sectors,
)
from .decomposability import (
    HOLES, LONG_HOLES, P3, P3_P3BAR, P3BAR, S2, S3, S3_P3, S3_P3_P3BAR, S3_P3BAR,
    DecomposabilityCounterexample, PatternFamily, Shape, decomposability_counterexample,
    find_pattern, is_family_free, is_locally_decomposable, neighborhood_structure,
)
from .elimination import (
    EliminationCertificate, class_family, elimination_ordering, elimination_violation,
    is_elimination_ordering, perfect_elimination_ordering,
)
from .errors import *  # noqa: F401,F403
from .generators import ConfigParams, gen_chordal, gen_configuration, gen_random, sample_class
from .graph import (
    Graph, WeightedGraph, build_graph, complement, complete_bipartite, complete_graph,
    components, cycle_graph, empty_graph, induced_subgraph, is_clique, is_connected, is_stable,
    path_graph, petersen_graph,
)
from .holes import chordless_cycles, find_hole, is_chordal, is_hole
from .lexbfs import (
    MoplexWitness, VertexOrdering, all_lexbfs_orderings, connecting_path, is_lexbfs_ordering,
    last_vertex_moplex_witness, lexbfs, lexbfs_violation,
)

__version__ = "0.1.0"
