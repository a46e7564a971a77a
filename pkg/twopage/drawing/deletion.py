"""
Deleting the last vertices of a drawing.

Removing vertices n-c+1..n keeps every remaining edge on its page. The raw
result may have a Red (1, n-c) entry; measurements that compare a drawing with
its vertex-deleted subdrawing use that raw matrix, while ``suffix_delete``
returns the re-normalized drawing suitable for serialization.
"""

import numpy as np
from numpy.typing import NDArray

from twopage.core.exceptions import ParameterRangeError
from twopage.drawing.kedges import fold, profile_from_matrix, raw_k_matrix
from twopage.drawing.model import Drawing
from twopage.drawing.schemas import KEdgeProfile


def _check_suffix(d: Drawing, c: int) -> None:
    if not 0 <= c <= d.n - 3:
        raise ParameterRangeError(f"can delete 0..{d.n - 3} vertices from n={d.n}, got {c}")


def deleted_matrix(d: Drawing, c: int) -> NDArray[np.bool_]:
    """Color matrix of the first n-c vertices, without recoloring."""
    _check_suffix(d, c)
    m = d.n - c
    return d.red[:m, :m].copy()


def suffix_delete(d: Drawing, c: int) -> Drawing:
    """
    Drop the last c vertices.

    Args:
        d: Source drawing
        c: Number of vertices to delete, 0 <= c <= n-3

    Returns:
        Drawing on n-c vertices with entry (1, n-c) forced Blue
    """
    red = deleted_matrix(d, c)
    red[0, -1] = False
    return Drawing(red)


def deleted_profile(d: Drawing, c: int = 1) -> KEdgeProfile:
    """KEdgeProfile of the vertex-deleted subdrawing as drawn, no recoloring."""
    return profile_from_matrix(deleted_matrix(d, c))


def invariant_leq_k_count(d: Drawing, k: int) -> int:
    """
    Number of (D, D')-invariant <=k-edges, D' being d without vertex n.

    An edge not incident to vertex n is invariant when its folded k-value is the
    same in D and in D'.

    Args:
        d: Drawing with n >= 4
        k: 0 <= k <= fl(n/2)-1

    Returns:
        Count of invariant edges whose k-value is at most k
    """
    n = d.n
    if n < 4:
        raise ParameterRangeError(f"invariant counts need n >= 4, got {n}")
    if not 0 <= k <= n // 2 - 1:
        raise ParameterRangeError(f"k must lie in 0..{n // 2 - 1}, got {k}")

    rows, cols = np.triu_indices(n - 1, k=1)
    in_d = fold(raw_k_matrix(d.red)[rows, cols], n)
    in_sub = fold(raw_k_matrix(deleted_matrix(d, 1))[rows, cols], n - 1)
    return int(np.count_nonzero((in_d == in_sub) & (in_d <= k)))
