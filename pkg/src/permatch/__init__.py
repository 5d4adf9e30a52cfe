"""Graphs whose automorphism groups act richly on a perfect matching.

The package builds the classical families (odd graphs, folded hypercubes,
joins, matching joins, Paley-type incidence graphs, ...), computes
automorphism groups and canonical forms, decides whether a group acts on a
matching as the full symmetric group or 2-transitively, lifts graphs and
matchings through voltage covers, certifies near-polygonal cycle systems,
and checks the small catalogs exhaustively.
"""

from .autiso import (
    CanonicalForm,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_graph6,
)
from .classify import (
    Catalog,
    CatalogEntry,
    classification_report,
    classify_perfect_matchings,
    enumerate_connected,
    matching_catalog,
    perfect_matchings,
    verify_catalog_membership,
)
from .graphs import (
    Graph,
    Matching,
    SrgParams,
    complement,
    complete,
    complete_bipartite,
    composition,
    cycle,
    degree_sequence,
    distance,
    empty_graph,
    folded_hypercube,
    graph6_decode,
    graph6_encode,
    hypercube,
    induced_subgraph,
    is_connected,
    join,
    matching_join,
    odd_graph,
    odd_graph_action,
    odd_graph_vertex,
    paley_incidence,
    paley_incidence_cliques,
    path_graph,
    petersen,
    srg_parameters,
    subdivide_all,
    subdivide_matching_twice,
    subdivide_non_matching,
)
from .matchings import (
    MODE_PERMUTABLE,
    MODE_TWO_TRANSITIVE,
    MatchingReport,
    check_group_action,
    degree_bound_check,
    find_matching,
    induced_edge_action,
    is_2arc_transitive,
    is_2transitive_matching,
    is_arc_transitive,
    is_locally_primitive,
    is_locally_symmetric,
    is_permutable,
    matching_report,
    matching_stabilizer,
    normalize_mode,
    validate_matching,
)
from .perms import (
    BlockSystem,
    Perm,
    PermGroup,
    find_elements,
    induced_action,
    is_2transitive,
    is_primitive,
    is_symmetric_action,
    is_transitive,
    minimal_block,
    subgroup_search,
)
from .polygonal import (
    CycleSystem,
    QuotientResult,
    near_polygonal_certificate,
    orbit_partition,
    quotient_by_partition,
    verify_cycle_system,
)
from .voltage import (
    CoverGraph,
    VoltageAssignment,
    VoltageMatrix,
    covering_transformations,
    cycle_system_matching,
    derived_cover,
    induced_voltage_map,
    lift_automorphism,
    lift_group,
    lift_matching_in_tree,
    spanning_tree,
    standard_assignment,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
