"""Drawing model, crossing counts and k-edge machinery."""

from twopage.drawing.counting import (
    crossings_direct,
    edge_crossing_counts,
    z_lower_bound,
    z_number,
)
from twopage.drawing.deletion import deleted_profile, invariant_leq_k_count, suffix_delete
from twopage.drawing.kedges import (
    crossings_via_kedges,
    crossings_via_leqleq,
    entry_k_values,
    k4_census,
    k_edge_profile,
    separations_via_kedges,
)
from twopage.drawing.model import Color, Drawing, parse_drawing, serialize_body, serialize_drawing
from twopage.drawing.schemas import K4Census, KEdgeProfile

__all__ = [
    "Color",
    "Drawing",
    "K4Census",
    "KEdgeProfile",
    "crossings_direct",
    "crossings_via_kedges",
    "crossings_via_leqleq",
    "deleted_profile",
    "edge_crossing_counts",
    "entry_k_values",
    "invariant_leq_k_count",
    "k4_census",
    "k_edge_profile",
    "parse_drawing",
    "separations_via_kedges",
    "serialize_body",
    "serialize_drawing",
    "suffix_delete",
    "z_lower_bound",
    "z_number",
]
