"""
Crossing counts of 2-page drawings and the Harary-Hill number.

Two edges on the same page cross exactly when their endpoints interleave
along the spine, so every count here reduces to a scan over 4-subsets.
"""

from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np
from numpy.typing import NDArray

from twopage.core.exceptions import ParameterRangeError
from twopage.drawing.model import Drawing


@lru_cache(maxsize=64)
def quadruples(n: int) -> NDArray[np.intp]:
    """All 4-subsets a < b < c < d of 0..n-1 as a (C(n,4), 4) array."""
    if n < 4:
        return np.empty((0, 4), dtype=np.intp)
    quads = np.fromiter(
        (x for q in combinations(range(n), 4) for x in q), dtype=np.intp, count=4 * comb(n, 4)
    ).reshape(-1, 4)
    quads.setflags(write=False)
    return quads


def z_number(n: int) -> int:
    """
    Harary-Hill number Z(n) = 1/4 * fl(n/2) fl((n-1)/2) fl((n-2)/2) fl((n-3)/2).

    Args:
        n: Number of vertices, n >= 1

    Returns:
        Exact integer value
    """
    if n < 1:
        raise ParameterRangeError(f"z_number needs n >= 1, got {n}")
    return (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2) // 4


def crossing_quadruples(red: NDArray[np.bool_]) -> NDArray[np.bool_]:
    """Per 4-subset a<b<c<d: True iff ac and bd lie on the same page."""
    q = quadruples(red.shape[0])
    return red[q[:, 0], q[:, 2]] == red[q[:, 1], q[:, 3]]


def crossings_direct(d: Drawing) -> int:
    """Number of interleaving same-page edge pairs."""
    return int(np.count_nonzero(crossing_quadruples(d.red)))


def edge_crossing_matrix(red: NDArray[np.bool_]) -> NDArray[np.int64]:
    """n x n upper-triangular matrix of how often each edge is crossed."""
    n = red.shape[0]
    q = quadruples(n)
    hit = q[crossing_quadruples(red)]
    counts = np.zeros((n, n), dtype=np.int64)
    np.add.at(counts, (hit[:, 0], hit[:, 2]), 1)
    np.add.at(counts, (hit[:, 1], hit[:, 3]), 1)
    return counts


def edge_crossing_counts(d: Drawing) -> dict[tuple[int, int], int]:
    """Crossings on every edge, keyed by 1-based (i, j)."""
    counts = edge_crossing_matrix(d.red)
    return {(i, j): int(counts[i - 1, j - 1]) for i, j, _ in d.entries()}


def z_lower_bound(n: int) -> int:
    """
    Crossing lower bound obtained by inserting E_<=<=k >= 3 C(k+3, 3) into the
    double-prefix crossing identity. Equals Z(n) for every n >= 3.
    """
    if n < 3:
        raise ParameterRangeError(f"z_lower_bound needs n >= 3, got {n}")
    half = n // 2
    total = sum(3 * comb(k + 3, 3) for k in range(half - 1))
    last = 3 * comb(half + 1, 3) if half >= 2 else 0
    parity = 2 if n % 2 == 0 else 0
    numerator = 4 * total - comb(n, 2) * ((n - 2) // 2) - parity * last
    return numerator // 2
