"""
Counting properties of k-edges.

Some hold for every 2-page drawing (row and column counts, last-column pairs,
the double-prefix bound); the rest are only guaranteed for crossing-optimal
drawings (support, halving entries, the single-prefix bound, equality after
deleting trailing vertices).
"""

from __future__ import annotations

from math import comb

import numpy as np

from twopage.core.exceptions import ParameterRangeError
from twopage.drawing.deletion import deleted_matrix
from twopage.drawing.kedges import fold, profile_from_matrix, raw_k_matrix
from twopage.drawing.model import Drawing
from twopage.drawing.schemas import KEdgeProfile


def _folded(d: Drawing) -> np.ndarray:
    """n x n folded k-values, -1 outside the strict upper triangle."""
    n = d.n
    values = fold(raw_k_matrix(d.red), n)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    return np.where(upper, values, -1)


def _check_low_k(d: Drawing, k: int) -> None:
    if not 0 <= k <= d.n // 2 - 2:
        raise ParameterRangeError(f"k must lie in 0..{d.n // 2 - 2} for n={d.n}, got {k}")


def support_check(d: Drawing, k: int) -> bool:
    """
    True iff every <=k-edge lies in rows 1..k+1 or columns n-k..n.

    Args:
        d: Drawing
        k: 0 <= k <= fl(n/2)-2
    """
    _check_low_k(d, k)
    n = d.n
    values = _folded(d)
    low = (values >= 0) & (values <= k)
    inside = np.zeros((n, n), dtype=bool)
    inside[: k + 1, :] = True
    inside[:, n - k - 1 :] = True
    return not bool(np.any(low & ~inside))


def halving_entries(n: int) -> list[tuple[int, int]]:
    """(fl(n/2), ce(n/2)+1), (fl(n/2), fl(n/2)+1), (ce(n/2), ce(n/2)+1)."""
    lo, hi = n // 2, (n + 1) // 2
    return [(lo, hi + 1), (lo, lo + 1), (hi, hi + 1)]


def halving_check(d: Drawing) -> bool:
    """True iff the three middle entries are halving edges (k = fl(n/2)-1)."""
    n = d.n
    values = _folded(d)
    return all(values[r - 1, c - 1] == n // 2 - 1 for r, c in halving_entries(n))


def row_low_edge_counts_ok(d: Drawing, k: int) -> bool:
    """For k < n/2-1 and 1 <= j <= k+1, row j holds >= 2(k+2-j) <=k-edges."""
    if not 0 <= k < d.n / 2 - 1:
        raise ParameterRangeError(f"k must satisfy 0 <= k < n/2-1, got {k}")
    values = _folded(d)
    for j in range(1, k + 2):
        row = values[j - 1]
        if np.count_nonzero((row >= 0) & (row <= k)) < 2 * (k + 2 - j):
            return False
    return True


def column_low_edge_counts_ok(d: Drawing, k: int) -> bool:
    """For k < n/2-1 and n-k <= j <= n, column j holds >= 2(k+1-n+j) <=k-edges."""
    n = d.n
    if not 0 <= k < n / 2 - 1:
        raise ParameterRangeError(f"k must satisfy 0 <= k < n/2-1, got {k}")
    values = _folded(d)
    for j in range(n - k, n + 1):
        column = values[:, j - 1]
        if np.count_nonzero((column >= 0) & (column <= k)) < 2 * (k + 1 - n + j):
            return False
    return True


def last_column_pairs_ok(d: Drawing) -> bool:
    """
    Column n holds two j-edges for each 0 <= j < n/2-1 and, for even n, one
    (n/2-1)-edge.
    """
    n = d.n
    column = _folded(d)[: n - 1, n - 1]
    counts = np.bincount(column, minlength=n // 2)
    for j in range(n // 2):
        if j < n / 2 - 1 and counts[j] < 2:
            return False
    if n % 2 == 0 and counts[n // 2 - 1] < 1:
        return False
    return True


def leqleq_bound_ok(profile: KEdgeProfile) -> bool:
    """E_<=<=k >= 3 C(k+3, 3) for all 0 <= k < n/2-1."""
    n = profile.n
    return all(
        profile.leqleq(k) >= 3 * comb(k + 3, 3) for k in range(n // 2) if k < n / 2 - 1
    )


def leq_bound_ok(profile: KEdgeProfile) -> bool:
    """E_<=k >= 3 C(k+2, 2) for all 0 <= k <= fl(n/2)-2; optimal drawings only."""
    return all(profile.leq(k) >= 3 * comb(k + 2, 2) for k in range(profile.n // 2 - 1))


def leqleq_equality_ok(profile: KEdgeProfile, upto: int | None = None) -> bool:
    """E_<=<=k == 3 C(k+3, 3) for 0 <= k <= upto (default fl(n/2)-2)."""
    last = profile.n // 2 - 2 if upto is None else upto
    return all(profile.leqleq(k) == 3 * comb(k + 3, 3) for k in range(last + 1))


def suffix_leqleq_equality_ok(d: Drawing) -> bool:
    """
    For 0 <= j <= fl(n/2)-2, the drawing without its last j vertices (colors kept
    as drawn) has E_<=<=k = 3 C(k+3, 3) for 0 <= k <= fl(n/2)-2-j.
    """
    half = d.n // 2
    for j in range(half - 1):
        profile = profile_from_matrix(deleted_matrix(d, j))
        if not leqleq_equality_ok(profile, half - 2 - j):
            return False
    return True
