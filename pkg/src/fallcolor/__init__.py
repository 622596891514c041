"""Exact fall, b-, Grundy, partial Grundy and achromatic coloring parameters."""

from .colorings import Coloring, ColoringClass, classify, colorful_vertices, grundy_vertices, is_proper
from .graph import (
    Family,
    FamilySpec,
    Graph,
    add_pendants,
    cartesian_product,
    degree_stats,
    from_edge_list,
    generate,
    join,
)
from .expressions import parse_expression
from .report import ParameterReport, parameter_report
from .search import SearchLimits, SearchTimeout
from .solvers import (
    Status,
    achromatic_number,
    b_chromatic_number,
    chromatic_number,
    fall_spectrum,
    find_fall_coloring,
    grundy_number,
    partial_grundy_number,
)
from .theorems import compose_join_fall, restrict_fall, theorem3_verify, verify_join_additivity
from .verification import verify_paper

__all__ = [
    "Coloring",
    "ColoringClass",
    "Family",
    "FamilySpec",
    "Graph",
    "ParameterReport",
    "SearchLimits",
    "SearchTimeout",
    "Status",
    "achromatic_number",
    "add_pendants",
    "b_chromatic_number",
    "cartesian_product",
    "chromatic_number",
    "classify",
    "compose_join_fall",
    "colorful_vertices",
    "degree_stats",
    "fall_spectrum",
    "find_fall_coloring",
    "from_edge_list",
    "generate",
    "grundy_number",
    "grundy_vertices",
    "is_proper",
    "join",
    "parameter_report",
    "parse_expression",
    "partial_grundy_number",
    "restrict_fall",
    "theorem3_verify",
    "verify_join_additivity",
    "verify_paper",
]
