"""Equivalence group, canonical keys and rendering."""

from twopage.transform.canonical import (
    are_equivalent,
    canonical_element,
    canonical_form,
    canonical_key,
    orbit,
    orbit_size,
    packed_key,
    stabilizer_size,
)
from twopage.transform.group import (
    GroupElement,
    all_elements,
    apply,
    compose,
    inverse,
    parse_element,
)
from twopage.transform.render import render

__all__ = [
    "GroupElement",
    "all_elements",
    "apply",
    "are_equivalent",
    "canonical_element",
    "canonical_form",
    "canonical_key",
    "compose",
    "inverse",
    "orbit",
    "orbit_size",
    "packed_key",
    "parse_element",
    "render",
    "stabilizer_size",
]
