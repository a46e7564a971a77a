"""
Generators for 2-page drawings: the unique optimal drawing for even n, the
cyclic family of optimal drawings for odd n, and seeded random drawings.
"""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from twopage.construct.template import even_template
from twopage.core.exceptions import ParameterRangeError, TwoPageError
from twopage.drawing.model import MIN_VERTICES, Drawing, free_indices
from twopage.transform.group import GroupElement, apply


def even_optimal(n: int) -> Drawing:
    """
    The crossing-optimal drawing for even n >= 4, read off the even template.

    Raises:
        ParameterRangeError: n odd or below 4
    """
    return even_template(n).completion(0)


def _cyclic_class(r: int, c: int, n: int) -> int:
    """Representative s in 2..n+1 with s = r + c (mod n)."""
    return (r + c - 2) % n + 2


def _is_cycle_edge(r: int, c: int, n: int) -> bool:
    return c == r + 1 or (r == 1 and c == n)


def family_edges(n: int) -> list[tuple[int, int]]:
    """
    Edges off the cycle 1 2 ... n whose sum is (n+3)/2 mod n, by ascending r.

    Their colors are the free choices of the cyclic family.
    """
    if n % 2 == 0 or n < 5:
        raise ParameterRangeError(f"the cyclic family needs odd n >= 5, got {n}")
    target = (n + 3) // 2
    return [
        (r, c)
        for r in range(1, n + 1)
        for c in range(r + 1, n + 1)
        if not _is_cycle_edge(r, c, n) and _cyclic_class(r, c, n) == target
    ]


class FamilyMask(BaseModel):
    """One bit per family edge, True meaning Red, ordered by ascending r."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=5)
    bits: tuple[bool, ...]

    @model_validator(mode="after")
    def check_length(self) -> FamilyMask:
        if self.n % 2 == 0:
            raise ValueError(f"the cyclic family needs odd n, got {self.n}")
        expected = (self.n - 3) // 2
        if len(self.bits) != expected:
            raise ValueError(f"mask for n={self.n} needs {expected} bits, got {len(self.bits)}")
        return self

    @classmethod
    def parse(cls, n: int, text: str) -> FamilyMask:
        """
        Read a bit string such as ``"010"`` (also accepts B/R).

        Raises:
            ParameterRangeError: bad characters or wrong length
        """
        table = {"0": False, "1": True, "B": False, "R": True}
        if any(ch not in table for ch in text):
            raise ParameterRangeError(f"mask must consist of 0/1 or B/R, got {text!r}")
        try:
            return cls(n=n, bits=tuple(table[ch] for ch in text))
        except ValueError as exc:
            raise ParameterRangeError(str(exc)) from exc

    @classmethod
    def from_int(cls, n: int, value: int) -> FamilyMask:
        """Bit k of value is the k-th family edge."""
        length = (n - 3) // 2
        return cls(n=n, bits=tuple(bool(value >> k & 1) for k in range(length)))

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


def odd_family(n: int, mask: FamilyMask) -> Drawing:
    """
    Member of the cyclic family of optimal drawings for odd n.

    With s = r + c reduced into 2..n+1, an edge off the cycle 1 2 ... n is Blue
    for s <= (n+1)/2, Red for s >= (n+5)/2, and colored by the mask for
    s = (n+3)/2.

    Args:
        n: Odd, at least 5
        mask: Choice of color for each family edge

    Returns:
        Drawing with Z(n) crossings for every mask
    """
    if mask.n != n:
        raise ParameterRangeError(f"mask is for n={mask.n}, requested n={n}")
    edges = family_edges(n)
    choice = dict(zip(edges, mask.bits, strict=True))
    low = (n + 1) // 2
    red = np.zeros((n, n), dtype=bool)
    for r in range(1, n + 1):
        for c in range(r + 1, n + 1):
            if _is_cycle_edge(r, c, n):
                continue
            s = _cyclic_class(r, c, n)
            red[r - 1, c - 1] = choice[(r, c)] if s == low + 1 else s > low
    return Drawing(red)


def family_mask_of(d: Drawing) -> FamilyMask:
    """
    Read the mask back from a member of the cyclic family.

    Raises:
        TwoPageError: d is not a family member
    """
    n = d.n
    edges = family_edges(n)
    mask = FamilyMask(n=n, bits=tuple(d.red[r - 1, c - 1] for r, c in edges))
    if odd_family(n, mask) != d:
        raise TwoPageError(f"drawing is not a member of the cyclic family for n={n}")
    return mask


def family_pairing(n: int) -> GroupElement:
    """h o g o f^((n+1)/2); maps the family onto itself."""
    return GroupElement(n=n, a=1, b=1, i=(n + 1) // 2)


def family_pairing_mask(mask: FamilyMask) -> FamilyMask:
    """Mask of the image of ``odd_family(n, mask)`` under the family pairing."""
    image = apply(odd_family(mask.n, mask), family_pairing(mask.n))
    return family_mask_of(image)


def random_drawing(n: int, seed: int) -> Drawing:
    """
    Uniformly random colors on every non-convention entry.

    Args:
        n: At least 3
        seed: Seed of the numpy generator; equal seeds give equal drawings

    Returns:
        Random drawing
    """
    if n < MIN_VERTICES:
        raise ParameterRangeError(f"random drawings need n >= {MIN_VERTICES}, got {n}")
    if seed < 0:
        raise ParameterRangeError(f"seed must be non-negative, got {seed}")
    rng = np.random.default_rng(seed)
    rows, _ = free_indices(n)
    return Drawing.from_free_bits(n, rng.integers(0, 2, size=rows.size).astype(bool))
