"""
The 2-page matrix of a drawing and its .2pg text form.

Vertices are labelled 1..n along the spine. Internally a drawing is an n x n
boolean array over 0-based labels whose strict upper triangle holds True for a
Red (lower page) edge; everything on or below the diagonal is False.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from enum import Enum
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from twopage.core.exceptions import (
    ConventionViolationError,
    IllegalCharacterError,
    MalformedHeaderError,
    ParameterRangeError,
    RowLengthError,
)

MAGIC = "2pg"
FORMAT_VERSION = 1
MIN_VERTICES = 3

BoolMatrix = NDArray[np.bool_]


class Color(str, Enum):
    """Page of an edge. Blue is the upper page (or the spine)."""

    BLUE = "B"
    RED = "R"

    @classmethod
    def from_red(cls, red: bool) -> Color:
        return cls.RED if red else cls.BLUE


@lru_cache(maxsize=128)
def upper_indices(n: int) -> tuple[NDArray[np.intp], NDArray[np.intp]]:
    """Row-major 0-based index pairs (i, j), i < j; the .2pg serialization order."""
    rows, cols = np.triu_indices(n, k=1)
    rows.setflags(write=False)
    cols.setflags(write=False)
    return rows, cols


@lru_cache(maxsize=128)
def convention_mask(n: int) -> BoolMatrix:
    """True on the spine entries (i, i+1) and on (1, n)."""
    mask = np.zeros((n, n), dtype=bool)
    idx = np.arange(n - 1)
    mask[idx, idx + 1] = True
    mask[0, n - 1] = True
    mask.setflags(write=False)
    return mask


@lru_cache(maxsize=128)
def free_indices(n: int) -> tuple[NDArray[np.intp], NDArray[np.intp]]:
    """Row-major index pairs of the entries whose color is not fixed by convention."""
    rows, cols = upper_indices(n)
    keep = ~convention_mask(n)[rows, cols]
    return rows[keep], cols[keep]


class Drawing:
    """
    Immutable 2-page book drawing of K_n.

    Args:
        red: n x n boolean matrix; only the strict upper triangle is read
        validate: Reject Red spine entries and a Red (1, n) entry
    """

    __slots__ = ("_n", "_red", "_hash")

    def __init__(self, red: BoolMatrix, *, validate: bool = True) -> None:
        red = np.asarray(red, dtype=bool)
        if red.ndim != 2 or red.shape[0] != red.shape[1]:
            raise ParameterRangeError(f"color matrix must be square, got shape {red.shape}")
        n = red.shape[0]
        if n < MIN_VERTICES:
            raise ParameterRangeError(f"a drawing needs n >= {MIN_VERTICES}, got {n}")

        matrix = np.triu(red, k=1)
        if validate:
            bad = np.argwhere(matrix & convention_mask(n))
            if bad.size:
                i, j = (int(x) + 1 for x in bad[0])
                raise ConventionViolationError(f"entry ({i},{j}) must be B")

        matrix.setflags(write=False)
        self._n = n
        self._red = matrix
        self._hash: int | None = None

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def all_blue(cls, n: int) -> Drawing:
        """Every edge in the upper page (the convex drawing)."""
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def from_free_bits(cls, n: int, bits: Sequence[bool] | NDArray[np.bool_]) -> Drawing:
        """Build from one bit per non-convention entry, in row-major order (True = Red)."""
        rows, cols = free_indices(n)
        bits = np.asarray(bits, dtype=bool)
        if bits.shape != rows.shape:
            raise ParameterRangeError(f"expected {rows.size} free bits for n={n}, got {bits.size}")
        red = np.zeros((n, n), dtype=bool)
        red[rows, cols] = bits
        return cls(red)

    @classmethod
    def from_flat(cls, n: int, flat: NDArray[np.bool_], *, validate: bool = True) -> Drawing:
        """Build from all C(n, 2) entries in row-major order (True = Red)."""
        rows, cols = upper_indices(n)
        flat = np.asarray(flat, dtype=bool)
        if flat.shape != rows.shape:
            raise ParameterRangeError(f"expected {rows.size} entries for n={n}, got {flat.size}")
        red = np.zeros((n, n), dtype=bool)
        red[rows, cols] = flat
        return cls(red, validate=validate)

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> Drawing:
        """Build from the B/R row strings of the .2pg body."""
        n = len(rows) + 1
        red = np.zeros((n, n), dtype=bool)
        for i, row in enumerate(rows):
            if len(row) != n - 1 - i:
                raise RowLengthError(
                    f"row {i + 1} has length {len(row)}, expected {n - 1 - i}"
                )
            for offset, ch in enumerate(row):
                if ch == "R":
                    red[i, i + 1 + offset] = True
                elif ch != "B":
                    raise IllegalCharacterError(
                        f"row {i + 1}, column {i + 2 + offset}: illegal character {ch!r}"
                    )
        return cls(red)

    # ------------------------------------------------------------------
    # accessors
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def red(self) -> BoolMatrix:
        """Read-only 0-based color matrix (True = Red)."""
        return self._red

    def color(self, i: int, j: int) -> Color:
        """Color of edge ij for 1-based labels, in either order."""
        if i > j:
            i, j = j, i
        if not 1 <= i < j <= self._n:
            raise ParameterRangeError(f"no entry ({i},{j}) in a drawing on {self._n} vertices")
        return Color.from_red(bool(self._red[i - 1, j - 1]))

    def entries(self) -> Iterator[tuple[int, int, Color]]:
        """Yield (i, j, color) in row-major order with 1-based labels."""
        rows, cols = upper_indices(self._n)
        for i, j in zip(rows.tolist(), cols.tolist(), strict=True):
            yield i + 1, j + 1, Color.from_red(bool(self._red[i, j]))

    def flat(self) -> NDArray[np.bool_]:
        """Row-major vector of all C(n, 2) entries."""
        rows, cols = upper_indices(self._n)
        return self._red[rows, cols]

    def rows(self) -> list[str]:
        """The .2pg body rows."""
        return [
            "".join("R" if x else "B" for x in self._red[i, i + 1 :].tolist())
            for i in range(self._n - 1)
        ]

    def with_colors(self, updates: dict[tuple[int, int], Color]) -> Drawing:
        """Copy with some entries recolored (1-based labels)."""
        red = self._red.copy()
        for (i, j), color in updates.items():
            red[i - 1, j - 1] = color is Color.RED
        return Drawing(red)

    # ------------------------------------------------------------------
    # dunder
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Drawing):
            return NotImplemented
        return self._n == other._n and bool(np.array_equal(self._red, other._red))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, np.packbits(self.flat()).tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Drawing(n={self._n}, red_edges={int(self._red.sum())})"

    def __reduce__(self):
        return (Drawing, (np.array(self._red),))


def parse_drawing(text: str) -> Drawing:
    """
    Parse a .2pg document.

    Args:
        text: File content; a single trailing newline is accepted

    Returns:
        Validated drawing

    Raises:
        MalformedHeaderError: First line is not ``2pg 1 <n>`` with n >= 3
        RowLengthError: Wrong number of rows or a row of the wrong length
        IllegalCharacterError: A row holds something other than B or R
        ConventionViolationError: A spine entry or (1, n) is R
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedHeaderError("empty document")

    parts = lines[0].split(" ")
    if len(parts) != 3 or parts[0] != MAGIC or parts[1] != str(FORMAT_VERSION):
        raise MalformedHeaderError(f"expected '{MAGIC} {FORMAT_VERSION} <n>', got {lines[0]!r}")
    digits = parts[2]
    if not (digits.isascii() and digits.isdigit()) or (digits != "0" and digits.startswith("0")):
        raise MalformedHeaderError(f"vertex count is not a decimal integer: {parts[2]!r}")
    n = int(parts[2])
    if n < MIN_VERTICES:
        raise MalformedHeaderError(f"vertex count must be >= {MIN_VERTICES}, got {n}")

    body = lines[1:]
    if len(body) != n - 1:
        raise RowLengthError(f"expected {n - 1} rows for n={n}, got {len(body)}")
    return Drawing.from_rows(body)


def serialize_body(d: Drawing) -> str:
    """Rows joined by newlines, without header or trailing newline."""
    return "\n".join(d.rows())


def serialize_drawing(d: Drawing) -> str:
    """Canonical .2pg text: header, one row per line, trailing newline."""
    return f"{MAGIC} {FORMAT_VERSION} {d.n}\n{serialize_body(d)}\n"
