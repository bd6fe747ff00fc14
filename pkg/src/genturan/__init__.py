"""Generalized Turán numbers at desk scale.

Graph families, exact subgraph counting, isomorph-free exhaustive search for
ex(n, H, F), certified finite-n bounds for K_{2,t}-free hosts, Berge
hypergraph tools and the linear/quadratic classification for cycles.
"""

from .berge import (
    BERGE_C2,
    BergeExtremalRecord,
    BergeWitness,
    berge_sandwich_check,
    cliques_to_hypergraph,
    contains_berge,
    exact_berge_extremal,
    hypergraph_to_graph,
)
from .canon import canonical_form, canonical_labeling, is_isomorphic
from .classifier import LinearityVerdict, c_of, classify_linearity, forest_properties, is_fkr_forest
from .constructions import (
    FamilySpec,
    all_r_graphs,
    banana,
    blowup,
    c_double_star,
    c_star,
    furedi_graph,
    q_graph,
    r_graph,
    turan_graph,
)
from .core import CopyCount, automorphism_count, count_copies, is_free, max_codegree
from .counting import (
    BoundReport,
    asymptotic_predictor,
    certified_c4_bound,
    certified_cycle_bound,
    certified_path_bound,
    count_cliques,
    count_cycles,
    count_paths,
    greedy_lower_certificates,
    turan_clique_count,
)
from .errors import GenTuranError, LimitExceededError, PreconditionError
from .extremal import (
    ExtremalRecord,
    RandomConstructionParams,
    exact_extremal,
    exponent_lower,
    heuristic_lower,
    kk_clique_bound,
    kk_shadow_bound,
    kk_solve,
    random_deletion_lower,
    subtraction_bound,
)
from .graph import Graph, Hypergraph, complete_bipartite, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from .io import from_graph6, to_dot, to_graph6

__version__ = "0.1.0"
