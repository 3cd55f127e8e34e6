"""Exact search and verification toolkit for Ore-type spanning-structure results on small graphs."""
from .certs import BroomCert, Cycle, JellyfishCert, OctopusCert, PathMetrics, SpiderCert
from .errors import CapExceeded, GraphParseError, InvariantViolation
from .extremal import FamilySpec, gen_broom, gen_complete_bipartite, gen_F, gen_H, gen_jellyfish, gen_named
from .extremal import gen_octopus, gen_spider, gen_two_cliques
from .graph import (
    INFINITE,
    ConditionCheck,
    DegreeProfile,
    Graph,
    VertexClass,
    check_conditions,
    connectivity,
    degree_profile,
    from_graph6,
    is_k_connected,
    parse_graph,
    sigma2,
    to_dot,
    to_edge_list,
    to_graph6,
)
from .hopping import (
    HoppingPath,
    HoppingState,
    compute_xy,
    is_good_path,
    is_hopping_path,
    longest_good_path,
    reduce_hopping_path,
    swap_cycle,
    swap_set,
    verify_hopping_lemma,
)
from .lemmas import LemmaConfig, check_lemma21, check_lemma22
from .search import (
    contains_complete_bipartite,
    find_spanning_broom,
    find_spanning_jellyfish,
    find_spanning_octopus,
    find_spanning_spider,
    is_hamiltonian,
    is_hamiltonian_connected,
    l_maximal_cycle,
    longest_cycle,
    path_metrics,
)
from .validate import is_valid

__version__ = "0.1.0"
