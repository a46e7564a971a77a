"""
Unit tests for vertex deletion and (D, D')-invariant edges.
"""

from math import comb

import pytest

from tests.fixtures.drawings import ALL_BLUE_K5, naive_raw_k
from twopage.construct import random_drawing
from twopage.core.exceptions import ParameterRangeError
from twopage.drawing import (
    Color,
    deleted_profile,
    entry_k_values,
    invariant_leq_k_count,
    k_edge_profile,
    parse_drawing,
    suffix_delete,
)
from twopage.drawing.deletion import deleted_matrix
from twopage.drawing.kedges import fold, raw_k_matrix


def test_suffix_delete_identity_and_shape():
    """Test c = 0 and the shape of the result."""
    d = random_drawing(8, 11)

    assert suffix_delete(d, 0) == d
    assert suffix_delete(d, 2).n == 6


def test_suffix_delete_renormalises_corner():
    """Test that the new (1, n-c) entry is forced Blue and the rest kept."""
    for seed in range(40):
        d = random_drawing(8, seed)
        e = suffix_delete(d, 1)
        assert e.color(1, 7) is Color.BLUE
        for i, j, color in e.entries():
            if (i, j) != (1, 7):
                assert d.color(i, j) is color


def test_suffix_delete_range():
    """Test the 0 <= c <= n-3 precondition."""
    d = random_drawing(6, 0)

    with pytest.raises(ParameterRangeError):
        suffix_delete(d, 4)
    with pytest.raises(ParameterRangeError):
        suffix_delete(d, -1)


def test_deleted_edges_gain_at_most_one():
    """Test that a k-edge of D' is a k- or (k+1)-edge of D."""
    for seed in range(60):
        d = random_drawing(5 + seed % 14, seed)
        n = d.n
        in_d = entry_k_values(d)
        raw_sub = raw_k_matrix(deleted_matrix(d, 1))
        for (i, j), k in in_d.items():
            if j == n:
                continue
            k_sub = int(fold(raw_sub[i - 1, j - 1], n - 1))
            assert k in (k_sub, k_sub + 1)


def test_recurrence_for_double_prefix_sums():
    """Test E<=<=k(D) = E<=<=k-1(D') + 2 C(k+2,2) + E<=k(D,D')."""
    for seed in range(80):
        d = random_drawing(5 + seed % 16, seed)
        full = k_edge_profile(d)
        sub = deleted_profile(d)
        for k in range(d.n // 2 - 1):
            lhs = full.leqleq(k)
            rhs = sub.leqleq(k - 1) + 2 * comb(k + 2, 2) + invariant_leq_k_count(d, k)
            assert lhs == rhs


def test_invariant_count_lower_bound():
    """Test E<=k(D,D') >= C(k+2,2) for k < n/2-1."""
    for seed in range(80):
        d = random_drawing(5 + seed % 16, seed)
        for k in range(d.n // 2 - 1):
            assert invariant_leq_k_count(d, k) >= comb(k + 2, 2)


def test_invariant_count_k5_oracle():
    """Test k = 0 on the all-Blue K5 against loop-computed k-values."""
    d = parse_drawing(ALL_BLUE_K5)
    sub = suffix_delete(d, 1)
    expected = 0
    for i in range(1, 5):
        for j in range(i + 1, 5):
            raw = naive_raw_k(d, i, j)
            k_d = min(raw, 3 - raw)
            raw_sub = naive_raw_k(sub, i, j)
            k_sub = min(raw_sub, 2 - raw_sub)
            if k_d == k_sub == 0:
                expected += 1

    assert invariant_leq_k_count(d, 0) == expected


def test_invariant_count_range():
    """Test the k range check."""
    d = random_drawing(8, 2)

    with pytest.raises(ParameterRangeError):
        invariant_leq_k_count(d, 4)
