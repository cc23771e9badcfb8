"""Antimagic edge labelings of generalized edge corona graphs.

Build coronas over pan and spider bases, label them constructively, check
the constructions' hypotheses, and certify results with an independent
verifier and a brute-force oracle.
"""

from .conditions import Condition, ConditionReport, check_conditions
from .corona import (
    BaseEdgeRole,
    Block,
    CoronaInstance,
    CrossEdgeRole,
    InternalEdgeRole,
    PanType1,
    SpiderType2,
    build_type1,
    build_type2,
    normalize_attachments,
)
from .graphs import (
    DegreeProfile,
    Graph,
    degree_profile,
    incident_edges,
    is_connected,
    make_graph,
    preset_graph,
)
from .labeling import (
    ChainCheck,
    Labeling,
    LabelingRun,
    LabelState,
    RankedBlock,
    label_block,
    label_type1,
    label_type2,
    rank_by_partial_sums,
    run_type1,
    run_type2,
    universal_vertex_labeling,
)
from .verify import (
    SearchOutcome,
    Status,
    SumReport,
    brute_force_search,
    partial_vertex_sum,
    random_search,
    vertex_sums,
)

__all__ = [
    "BaseEdgeRole",
    "Block",
    "ChainCheck",
    "Condition",
    "ConditionReport",
    "CoronaInstance",
    "CrossEdgeRole",
    "DegreeProfile",
    "Graph",
    "InternalEdgeRole",
    "LabelState",
    "Labeling",
    "LabelingRun",
    "PanType1",
    "RankedBlock",
    "SearchOutcome",
    "SpiderType2",
    "Status",
    "SumReport",
    "brute_force_search",
    "build_type1",
    "build_type2",
    "check_conditions",
    "degree_profile",
    "incident_edges",
    "is_connected",
    "label_block",
    "label_type1",
    "label_type2",
    "make_graph",
    "normalize_attachments",
    "partial_vertex_sum",
    "preset_graph",
    "random_search",
    "rank_by_partial_sums",
    "run_type1",
    "run_type2",
    "universal_vertex_labeling",
    "vertex_sums",
]
