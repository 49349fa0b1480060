"""Exact analysis toolkit for vertex-edge domination in graphs."""

from .constructions import (
    CnfFormatError,
    CnfInstance,
    SatReductionMap,
    expand_backbone,
    is_wvd_path,
    parse_dimacs_cnf,
    path_graph,
    sat_decide_via_graph,
    sat_to_graph,
    unit_cut_decompose,
    unit_cut_extend,
)
from .domination import (
    DominationReport,
    InstanceTooLargeError,
    domination_chain_check,
    enumerate_minimal_ve_dominating_sets,
    is_minimal_ve_dominating,
    is_ve_dominating,
    oracle_report,
    private_edges,
    ve_dominated_edges,
)
from .freetrees import enumerate_free_trees, trees_isomorphic
from .graph import (
    Graph,
    GraphFormatError,
    connected_components,
    good_pendant_edges,
    induced_delete,
    is_tree,
    parse_edge_list,
    serialize_edge_list,
)
from .harness import ValidationReport, cross_validate, lemma_suite
from .recognizer import (
    RecognitionResult,
    UnitPartition,
    build_certificate,
    find_forbidden_configuration,
    recognize,
    unit_partition,
    verify_certificate,
)
from .reduction import ReductionMap, is_reduced, neighborhood_classes, reduce_graph

__all__ = [
    "CnfFormatError",
    "CnfInstance",
    "DominationReport",
    "Graph",
    "GraphFormatError",
    "InstanceTooLargeError",
    "RecognitionResult",
    "ReductionMap",
    "SatReductionMap",
    "UnitPartition",
    "ValidationReport",
    "build_certificate",
    "connected_components",
    "cross_validate",
    "domination_chain_check",
    "enumerate_free_trees",
    "enumerate_minimal_ve_dominating_sets",
    "expand_backbone",
    "find_forbidden_configuration",
    "good_pendant_edges",
    "induced_delete",
    "is_minimal_ve_dominating",
    "is_reduced",
    "is_tree",
    "is_ve_dominating",
    "is_wvd_path",
    "lemma_suite",
    "neighborhood_classes",
    "oracle_report",
    "parse_dimacs_cnf",
    "parse_edge_list",
    "path_graph",
    "private_edges",
    "recognize",
    "reduce_graph",
    "sat_decide_via_graph",
    "sat_to_graph",
    "serialize_edge_list",
    "trees_isomorphic",
    "unit_cut_decompose",
    "unit_cut_extend",
    "unit_partition",
    "ve_dominated_edges",
    "verify_certificate",
]
