"""
k-edges read off the 2-page matrix, and the crossing identities built on them.

For an entry (i, j) the number of vertices on one side of edge ij equals the
same-color entries to its right in row i plus the same-color entries above it
in column j. Folding that raw value to min(k, n-2-k) gives the k of the edge.
"""

from math import comb

import numpy as np
from numpy.typing import NDArray

from twopage.core.exceptions import IdentityMismatchError
from twopage.drawing.counting import crossing_quadruples, quadruples
from twopage.drawing.model import Drawing, upper_indices
from twopage.drawing.schemas import K4Census, KEdgeProfile


def _right_exclusive(x: NDArray[np.int64]) -> NDArray[np.int64]:
    """Sum of x[..., i, j+1:] for every (i, j)."""
    total = np.cumsum(x[..., ::-1], axis=-1)[..., ::-1]
    return total - x


def _above_exclusive(x: NDArray[np.int64]) -> NDArray[np.int64]:
    """Sum of x[..., :i, j] for every (i, j)."""
    return np.cumsum(x, axis=-2) - x


def raw_k_matrix(red: NDArray[np.bool_]) -> NDArray[np.int64]:
    """
    Unfolded k-values of every upper entry of a color matrix.

    The matrix need not respect the spine convention, which lets vertex-deleted
    drawings be measured exactly as they are.

    Args:
        red: (..., n, n) boolean array, strict upper triangle significant

    Returns:
        Integer array of the same shape; only the strict upper triangle is meaningful
    """
    n = red.shape[-1]
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    r = (red & upper).astype(np.int64)
    b = (~red & upper).astype(np.int64)
    same_red = _right_exclusive(r) + _above_exclusive(r)
    same_blue = _right_exclusive(b) + _above_exclusive(b)
    return np.where(red, same_red, same_blue) * upper


def fold(raw: NDArray[np.int64] | int, n: int) -> NDArray[np.int64] | int:
    """A k-edge is also an (n-2-k)-edge; keep the smaller."""
    return np.minimum(raw, n - 2 - raw)


def folded_k_vector(red: NDArray[np.bool_]) -> NDArray[np.int64]:
    """Folded k-values in row-major order."""
    n = red.shape[0]
    rows, cols = upper_indices(n)
    return fold(raw_k_matrix(red)[rows, cols], n)


def entry_k_values(d: Drawing) -> dict[tuple[int, int], int]:
    """Folded k of every edge, keyed by 1-based (i, j)."""
    rows, cols = upper_indices(d.n)
    values = folded_k_vector(d.red)
    return {
        (i + 1, j + 1): k
        for i, j, k in zip(rows.tolist(), cols.tolist(), values.tolist(), strict=True)
    }


def profile_from_matrix(red: NDArray[np.bool_]) -> KEdgeProfile:
    """KEdgeProfile of a raw color matrix."""
    n = red.shape[0]
    counts = np.bincount(folded_k_vector(red), minlength=n // 2)
    return KEdgeProfile.from_counts(n, counts.tolist())


def k_edge_profile(d: Drawing) -> KEdgeProfile:
    """Histogram of folded k-values with prefix and double-prefix sums."""
    return profile_from_matrix(d.red)


def crossings_via_kedges(d: Drawing) -> int:
    """crg(D) = 3 C(n,4) - sum_k k (n-2-k) E_k."""
    n = d.n
    profile = k_edge_profile(d)
    weighted = sum(k * (n - 2 - k) * e for k, e in enumerate(profile.e))
    return 3 * comb(n, 4) - weighted


def crossings_via_leqleq(d: Drawing) -> int:
    """
    Crossings from the double prefix sums:

        crg = 2 sum_{k<=m-2} E_<=<=k - 1/2 C(n,2) fl((n-2)/2) - 1/2 (1+(-1)^n) E_<=<=(m-2)

    with m = fl(n/2). Evaluated in integers; the halved numerator must be even.
    """
    n = d.n
    half = n // 2
    profile = k_edge_profile(d)
    total = sum(profile.leqleq(k) for k in range(half - 1))
    parity = 2 if n % 2 == 0 else 0
    numerator = 4 * total - comb(n, 2) * ((n - 2) // 2) - parity * profile.leqleq(half - 2)
    if numerator % 2:
        raise IdentityMismatchError(f"odd numerator {numerator} in double-prefix identity")
    return numerator // 2


def _separates(
    red: NDArray[np.bool_], i: NDArray[np.intp], j: NDArray[np.intp], v: NDArray[np.intp]
) -> NDArray[np.bool_]:
    """Whether v lies on the counted side of edge ij (the side measured by raw k)."""
    own = red[i, j]
    left = (v < i) & (red[np.minimum(v, i), j] == own)
    right = (v > j) & (red[i, np.maximum(v, j)] == own)
    return left | right


def separation_count(red: NDArray[np.bool_]) -> int:
    """Count triples {pq, r, s} whose triangles pqr, pqs have opposite orientation."""
    q = quadruples(red.shape[0])
    if q.size == 0:
        return 0
    a, b, c, e = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    total = 0
    for (p1, p2), (o1, o2) in (
        ((a, b), (c, e)),
        ((a, c), (b, e)),
        ((a, e), (b, c)),
        ((b, c), (a, e)),
        ((b, e), (a, c)),
        ((c, e), (a, b)),
    ):
        total += int(
            np.count_nonzero(_separates(red, p1, p2, o1) != _separates(red, p1, p2, o2))
        )
    return total


def k4_census(d: Drawing) -> K4Census:
    """
    Classify every induced K4 as crossing (types B and C together) or plane (type A),
    and count separations quadruple by quadruple.
    """
    crossing = int(np.count_nonzero(crossing_quadruples(d.red)))
    return K4Census(
        t_a=comb(d.n, 4) - crossing,
        t_b=crossing,
        t_c=0,
        separations=separation_count(d.red),
    )


def separations_via_kedges(d: Drawing) -> int:
    """sum over edges of k (n-2-k) using raw k-values."""
    n = d.n
    rows, cols = upper_indices(n)
    raw = raw_k_matrix(d.red)[rows, cols]
    return int(np.sum(raw * (n - 2 - raw)))
