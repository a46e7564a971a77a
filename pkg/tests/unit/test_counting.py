"""
Unit tests for crossing counts and Z(n).
"""

import pytest

from tests.fixtures.drawings import ALL_BLUE_K4, ALL_BLUE_K5, PLANE_K4, naive_crossings
from twopage.construct import even_optimal, random_drawing
from twopage.core.exceptions import ParameterRangeError
from twopage.drawing import (
    Drawing,
    crossings_direct,
    edge_crossing_counts,
    parse_drawing,
    z_lower_bound,
    z_number,
)


def test_z_table():
    """Test Z(n) for n = 5..14."""
    assert [z_number(n) for n in range(5, 15)] == [1, 3, 9, 18, 36, 60, 100, 150, 225, 315]
    assert z_number(4) == 0


def test_z_closed_forms():
    """Test both closed forms against the floor product for n <= 200."""
    for n in range(1, 201):
        if n % 2:
            assert 64 * z_number(n) == (n - 1) ** 2 * (n - 3) ** 2
        else:
            assert 64 * z_number(n) == n * (n - 2) ** 2 * (n - 4)


def test_z_rejects_nonpositive():
    """Test the n >= 1 precondition."""
    with pytest.raises(ParameterRangeError):
        z_number(0)


def test_lower_bound_chain_equals_z():
    """Test that the bound from E_<=<=k >= 3 C(k+3,3) is exactly Z(n)."""
    for n in range(3, 80):
        assert z_lower_bound(n) == z_number(n)


def test_crossings_small():
    """Test direct crossing counts on hand-checked drawings."""
    assert crossings_direct(parse_drawing(ALL_BLUE_K4)) == 1
    assert crossings_direct(parse_drawing(PLANE_K4)) == 0
    assert crossings_direct(parse_drawing(ALL_BLUE_K5)) == 5
    assert crossings_direct(Drawing.all_blue(3)) == 0


def test_crossings_even_optimal_8():
    """Test that even_optimal(8) has 18 crossings."""
    assert crossings_direct(even_optimal(8)) == 18


def test_crossings_match_pairwise_oracle():
    """Test the quadruple count against a pairwise edge scan."""
    for seed in range(30):
        d = random_drawing(4 + seed % 9, seed)
        assert crossings_direct(d) == naive_crossings(d)


def test_edge_crossing_counts():
    """Test per-edge counts sum to twice the crossings."""
    d = random_drawing(9, 3)
    counts = edge_crossing_counts(d)

    assert len(counts) == 36
    assert sum(counts.values()) == 2 * crossings_direct(d)
    assert counts[(1, 2)] == 0
    assert counts[(1, 9)] == 0
