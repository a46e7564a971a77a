"""Optimal-drawing constructions and templates."""

from twopage.construct.generators import (
    FamilyMask,
    even_optimal,
    family_edges,
    family_mask_of,
    family_pairing,
    family_pairing_mask,
    odd_family,
    random_drawing,
)
from twopage.construct.template import (
    EntryState,
    Template,
    even_template,
    odd_template,
    structure_template,
)

__all__ = [
    "EntryState",
    "FamilyMask",
    "Template",
    "even_optimal",
    "even_template",
    "family_edges",
    "family_mask_of",
    "family_pairing",
    "family_pairing_mask",
    "odd_family",
    "odd_template",
    "random_drawing",
    "structure_template",
]
