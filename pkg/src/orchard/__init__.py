"""Orchard crossing numbers of rectilinear graph drawings, computed exactly."""
from .bounds import (BoundReport, certified_lower_bound, cycle_lower_term, double_cover_bound,
                     formula_value, overcount_corrected_bound)
from .constructions import (central_star, construct, convex_blocks, ladder_two_color,
                            prism_two_color, small_case)
from .crossings import (CircularOrder, Drawing, convex_crossings, edge_crossings,
                        point_cycle_contribution, total_crossings, total_crossings_naive)
from .exact_geom import (Point, is_general_position, orientation, point,
                         rational_circle_point, strictly_separates)
from .graphs import Family, FamilySpec, Graph, generate, validate_double_cover
from .search import AnnealParams, SearchResult, anneal, convex_exhaustive, estimate_ocn

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "certified_lower_bound",
    "cycle_lower_term",
    "double_cover_bound",
    "formula_value",
    "overcount_corrected_bound",
    "central_star",
    "construct",
    "convex_blocks",
    "ladder_two_color",
    "prism_two_color",
    "small_case",
    "CircularOrder",
    "Drawing",
    "convex_crossings",
    "edge_crossings",
    "point_cycle_contribution",
    "total_crossings",
    "total_crossings_naive",
    "Point",
    "is_general_position",
    "orientation",
    "point",
    "rational_circle_point",
    "strictly_separates",
    "Family",
    "FamilySpec",
    "Graph",
    "generate",
    "validate_double_cover",
    "AnnealParams",
    "SearchResult",
    "anneal",
    "convex_exhaustive",
    "estimate_ocn",
]
