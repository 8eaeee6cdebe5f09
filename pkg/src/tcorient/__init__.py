"""Orientation toolkit for undirected phylogenetic networks."""

from .constrained_orient import (
    DegreeCutWitness,
    Infeasible,
    InvalidConstraints,
    OrientationConstraints,
    check_degree_sum,
    constraints_from_reticulations,
    find_degree_cut,
    orient,
    verify_degree_cut,
    verify_orientation,
)
from .families import AugmentationCertificate, augmented_ladder, jellyfish, ladder
from .netio import ParseError, parse_network, report_to_json, serialize_network, to_dot
from .phylo_graph import (
    DirectedNetwork,
    NetworkStats,
    RootedGraph,
    UndirectedNetwork,
    ValidationError,
    attach_leaf,
    circuit_rank,
    contract_root,
    insert_root,
    leaf_distances,
    network_stats,
    validate_directed,
    validate_undirected,
)
from .tc_conditions import (
    ConditionReport,
    check_edge_bound,
    check_leaf_distance,
    condition_report,
    find_cherries,
    find_reticulated_cherries,
    is_tree_child,
)
from .tc_solver import (
    AugmentationNotFound,
    SizeGuardExceeded,
    SolverReport,
    brute_force_tree_child,
    enumerate_tree_child_orientations,
    minimum_leaf_augmentation,
    orient_with_predicate,
    tree_child_orient,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
