"""
Conformance of a drawing to the structure template of crossing-optimal drawings.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from twopage.construct.template import structure_template
from twopage.core.exceptions import ParameterRangeError
from twopage.drawing.model import Color, Drawing
from twopage.transform.group import GroupElement, all_elements, apply


class StructureViolation(BaseModel):
    """A fixed template entry that the drawing colors differently."""

    model_config = ConfigDict(frozen=True)

    r: int
    c: int
    expected: Color

    def __str__(self) -> str:
        return f"({self.r},{self.c}) expected {self.expected.value}"


def check_structure(d: Drawing) -> list[StructureViolation]:
    """
    Compare d literally with the template for its parity.

    Args:
        d: Drawing with n >= 6

    Returns:
        Violations in row-major order; empty when d conforms
    """
    if d.n < 6:
        raise ParameterRangeError(f"structure checks need n >= 6, got {d.n}")
    template = structure_template(d.n)
    return [StructureViolation(r=r, c=c, expected=color) for r, c, color in template.violations(d)]


def conforming_element(d: Drawing) -> GroupElement | None:
    """First group element (in ``all_elements`` order) whose image of d conforms, if any."""
    if d.n < 6:
        raise ParameterRangeError(f"structure checks need n >= 6, got {d.n}")
    template = structure_template(d.n)
    for t in all_elements(d.n):
        if template.conforms(apply(d, t)):
            return t
    return None
