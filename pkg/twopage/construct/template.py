"""
Partially colored 2-page matrices describing where crossing-optimal drawings
live up to equivalence.

Entries are addressed 1-based as (r, c) with r < c and t = r + c. Spine entries
(r, r+1) and (1, n) are always Blue. Even n leaves nothing free; odd n leaves
(5/2)(n-5) free entries, all other entries being fixed by anti-diagonal bands.
"""

from __future__ import annotations

from collections.abc import Iterator
from enum import IntEnum
from itertools import product

import numpy as np
from numpy.typing import NDArray

from twopage.core.exceptions import ParameterRangeError, TemplateConflictError
from twopage.core.logging import get_logger
from twopage.drawing.model import Color, Drawing, convention_mask, upper_indices

logger = get_logger(__name__)


class EntryState(IntEnum):
    """State of one template entry."""

    FIXED_BLUE = 0
    FIXED_RED = 1
    FREE = 2
    UNSET = 3


def _grid(n: int) -> tuple[NDArray[np.int64], NDArray[np.int64], NDArray[np.bool_]]:
    """1-based row and column grids plus the mask of entries open to rules."""
    r, c = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    open_ = (c > r) & ~convention_mask(n)
    return r, c, open_


def _assemble(n: int, rules: list[tuple[str, NDArray[np.bool_], EntryState]]) -> NDArray[np.int8]:
    """Apply rules to all non-convention entries, rejecting conflicts and gaps."""
    state = np.full((n, n), EntryState.UNSET, dtype=np.int8)
    state[convention_mask(n)] = EntryState.FIXED_BLUE
    _, _, open_ = _grid(n)

    for name, mask, value in rules:
        mask = mask & open_
        clash = mask & (state != EntryState.UNSET) & (state != value)
        if clash.any():
            r, c = (int(x) + 1 for x in np.argwhere(clash)[0])
            raise TemplateConflictError(f"rule {name!r} conflicts at ({r},{c}) for n={n}")
        state[mask] = value

    gaps = open_ & (state == EntryState.UNSET)
    if gaps.any():
        r, c = (int(x) + 1 for x in np.argwhere(gaps)[0])
        raise TemplateConflictError(f"entry ({r},{c}) is not covered for n={n}")
    return state


class Template:
    """
    Matrix of FixedBlue / FixedRed / Free states.

    Args:
        n: Number of vertices
        state: n x n matrix of ``EntryState`` values; strict upper triangle significant
    """

    def __init__(self, n: int, state: NDArray[np.int8]) -> None:
        rows, cols = upper_indices(n)
        values = state[rows, cols]
        if np.any(values == EntryState.UNSET):
            raise TemplateConflictError("template has uncovered entries")
        if np.any(state[convention_mask(n)] != EntryState.FIXED_BLUE):
            raise TemplateConflictError("convention entries must be FixedBlue")

        state = state.copy()
        state.setflags(write=False)
        self.n = n
        self.state = state

        free = values == EntryState.FREE
        self._free_rows = rows[free]
        self._free_cols = cols[free]
        self._base = np.zeros((n, n), dtype=bool)
        self._base[rows, cols] = values == EntryState.FIXED_RED

    def __repr__(self) -> str:
        return f"Template(n={self.n}, free={self.free_count})"

    def state_of(self, r: int, c: int) -> EntryState:
        return EntryState(int(self.state[r - 1, c - 1]))

    @property
    def free_count(self) -> int:
        return int(self._free_rows.size)

    def free_entries(self) -> list[tuple[int, int]]:
        """1-based free entries in row-major order; bit k of a completion mask colors entry k."""
        return [
            (i + 1, j + 1)
            for i, j in zip(self._free_rows.tolist(), self._free_cols.tolist(), strict=True)
        ]

    def free_positions(self) -> tuple[NDArray[np.intp], NDArray[np.intp]]:
        """0-based (rows, cols) of the free entries."""
        return self._free_rows, self._free_cols

    def base_matrix(self) -> NDArray[np.bool_]:
        """Color matrix with every free entry Blue."""
        return self._base.copy()

    def completion(self, mask: int = 0) -> Drawing:
        """
        Drawing with free entry k Red iff bit k of ``mask`` is set.

        Raises:
            ParameterRangeError: mask has bits beyond the free entries
        """
        if mask < 0 or mask >> self.free_count:
            raise ParameterRangeError(
                f"mask {mask} out of range for {self.free_count} free entries"
            )
        red = self._base.copy()
        bits = (mask >> np.arange(self.free_count)) & 1
        red[self._free_rows, self._free_cols] = bits.astype(bool)
        return Drawing(red)

    def completions(self) -> Iterator[Drawing]:
        """All 2^free completions in mask order."""
        for bits in product((False, True), repeat=self.free_count):
            red = self._base.copy()
            red[self._free_rows, self._free_cols] = bits[::-1]
            yield Drawing(red)

    def violations(self, d: Drawing) -> list[tuple[int, int, Color]]:
        """Fixed entries whose color in d differs; (r, c, expected color), row-major."""
        if d.n != self.n:
            raise ParameterRangeError(f"template is for n={self.n}, drawing has n={d.n}")
        rows, cols = upper_indices(self.n)
        values = self.state[rows, cols]
        actual = d.red[rows, cols]
        wrong = ((values == EntryState.FIXED_BLUE) & actual) | (
            (values == EntryState.FIXED_RED) & ~actual
        )
        return [
            (int(i) + 1, int(j) + 1, Color.from_red(bool(values[k] == EntryState.FIXED_RED)))
            for k, (i, j) in enumerate(zip(rows, cols, strict=True))
            if wrong[k]
        ]

    def conforms(self, d: Drawing) -> bool:
        return not self.violations(d)


def even_template(n: int) -> Template:
    """
    Fully fixed template for even n.

    With s = ((r+c-2) mod n) + 2, an entry is Blue for s <= n/2+1 and Red for
    s >= n/2+2. The Red band reaches up to the anti-diagonal r+c = n+1.
    """
    if n % 2 or n < 4:
        raise ParameterRangeError(f"even template needs even n >= 4, got {n}")
    r, c, _ = _grid(n)
    s = (r + c - 2) % n + 2
    half = n // 2
    state = _assemble(
        n,
        [
            ("blue band", s <= half + 1, EntryState.FIXED_BLUE),
            ("red band", s >= half + 2, EntryState.FIXED_RED),
        ],
    )
    return Template(n, state)


def odd_template(n: int) -> Template:
    """
    Template for odd n >= 7 with (5/2)(n-5) free entries.

    With m = fl(n/2), the matrix splits into the upper triangle (c <= m+1), the
    rectangle (r <= m+1 < c) and the lower triangle (r >= m+2). Away from the
    second diagonal each part is Blue then Red along increasing r+c, with two
    free anti-diagonals between the bands of each triangle and one partly free
    anti-diagonal r+c = n+2 in the rectangle. Entries (r, r+2) are free except
    (m, m+2), Red, and (m+1, m+3), Blue.

    Raises:
        ParameterRangeError: n even or below 7
        TemplateConflictError: rules overlap or leave gaps
    """
    if n % 2 == 0 or n < 7:
        raise ParameterRangeError(f"odd template needs odd n >= 7, got {n}")
    m = n // 2
    r, c, _ = _grid(n)
    t = r + c
    gap = c - r
    upper = c <= m + 1
    rect = (r <= m + 1) & (c > m + 1)
    lower = r >= m + 2
    far = gap >= 3

    rules = [
        ("upper blue", upper & far & (t <= m + 1), EntryState.FIXED_BLUE),
        ("upper free", upper & far & ((t == m + 2) | (t == m + 3)), EntryState.FREE),
        ("upper red", upper & far & (t >= m + 4), EntryState.FIXED_RED),
        ("rect red", rect & (t <= n + 1), EntryState.FIXED_RED),
        ("rect corner", (r == 2) & (c == n), EntryState.FIXED_BLUE),
        ("rect free", rect & (t == n + 2) & (r >= 3), EntryState.FREE),
        ("rect blue", rect & (t >= n + 3), EntryState.FIXED_BLUE),
        ("lower blue", lower & far & (t <= 3 * m + 2), EntryState.FIXED_BLUE),
        ("lower free", lower & far & ((t == 3 * m + 3) | (t == 3 * m + 4)), EntryState.FREE),
        ("lower red", lower & far & (t >= 3 * m + 5), EntryState.FIXED_RED),
        ("middle red", (r == m) & (c == m + 2), EntryState.FIXED_RED),
        ("middle blue", (r == m + 1) & (c == m + 3), EntryState.FIXED_BLUE),
        ("second diagonal", (gap == 2) & (r != m) & (r != m + 1), EntryState.FREE),
    ]
    template = Template(n, _assemble(n, rules))

    expected = 5 * (n - 5) // 2
    if template.free_count != expected:
        raise TemplateConflictError(
            f"odd template for n={n} has {template.free_count} free entries, expected {expected}"
        )
    logger.debug("Built odd template", extra={"n": n, "free": template.free_count})
    return template


def structure_template(n: int) -> Template:
    """Even or odd template by parity."""
    return even_template(n) if n % 2 == 0 else odd_template(n)
