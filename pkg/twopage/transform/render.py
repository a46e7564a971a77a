"""ASCII diagrams of the 2-page matrix and of the strip diagram."""

from typing import Literal

from twopage.core.exceptions import ParameterRangeError
from twopage.drawing.model import Drawing

RenderMode = Literal["matrix", "strip"]


def render_matrix(d: Drawing) -> str:
    """
    Upper-triangular layout: row i starts under column i+1.

    Example for the all-Blue K4::

        B B B
          B B
            B
    """
    lines = []
    for i, row in enumerate(d.rows()):
        lines.append("  " * i + " ".join(row))
    return "\n".join(lines) + "\n"


def render_strip(d: Drawing) -> str:
    """
    Two periods of the strip diagram, sheared so that each row is one diagonal.

    Row l (1..n-1) lists, for start vertex s = 1..2n, the color of the edge
    joining s and s+l with labels taken mod n. Row 1 therefore holds the spine
    edges and (1, n); any n consecutive columns of the lower rows describe a
    drawing equivalent to d.
    """
    n = d.n
    lines = []
    for span in range(1, n):
        chars = []
        for start in range(2 * n):
            u = start % n + 1
            v = (start + span) % n + 1
            chars.append(d.color(u, v).value)
        lines.append("".join(chars))
    return "\n".join(lines) + "\n"


def render(d: Drawing, mode: RenderMode = "matrix") -> str:
    """Deterministic ASCII rendering in the requested mode."""
    if mode == "matrix":
        return render_matrix(d)
    if mode == "strip":
        return render_strip(d)
    raise ParameterRangeError(f"unknown render mode: {mode}")
