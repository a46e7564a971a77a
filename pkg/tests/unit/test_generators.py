"""
Unit tests for the drawing generators.
"""

import pytest

from twopage.construct import (
    FamilyMask,
    even_optimal,
    family_edges,
    family_mask_of,
    family_pairing,
    family_pairing_mask,
    odd_family,
    random_drawing,
)
from twopage.core.exceptions import ParameterRangeError, TwoPageError
from twopage.drawing import Color, Drawing, crossings_direct, crossings_via_kedges, z_number
from twopage.transform import canonical_key, orbit_size


def test_even_optimal_reaches_z():
    """Test that the even construction has Z(n) crossings."""
    for n in range(4, 41, 2):
        d = even_optimal(n)
        assert crossings_direct(d) == z_number(n)
        assert crossings_via_kedges(d) == z_number(n)


def test_even_optimal_known_values():
    """Test the values for n = 8 and n = 10."""
    assert crossings_direct(even_optimal(8)) == 18
    assert crossings_direct(even_optimal(10)) == 60


def test_even_optimal_range():
    """Test odd and tiny n."""
    with pytest.raises(ParameterRangeError):
        even_optimal(9)
    with pytest.raises(ParameterRangeError):
        even_optimal(2)


def test_family_edges():
    """Test the free family edges for n = 9."""
    assert family_edges(9) == [(1, 5), (2, 4), (6, 9)]
    for n in range(5, 31, 2):
        assert len(family_edges(n)) == (n - 3) // 2


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
def test_family_reaches_z(n):
    """Test that every mask gives a crossing-optimal drawing."""
    for value in range(1 << ((n - 3) // 2)):
        d = odd_family(n, FamilyMask.from_int(n, value))
        assert crossings_direct(d) == z_number(n)


def test_family_large_n():
    """Test a few masks for larger n."""
    for n in (21, 31):
        for value in (0, 1, (1 << ((n - 3) // 2)) - 1):
            d = odd_family(n, FamilyMask.from_int(n, value))
            assert crossings_via_kedges(d) == z_number(n)


@pytest.mark.parametrize("n,classes", [(5, 1), (7, 2), (9, 4), (11, 8), (13, 16)])
def test_family_class_counts(n, classes):
    """Test that the family splits into 2^((n-5)/2) classes."""
    keys = {
        canonical_key(odd_family(n, FamilyMask.from_int(n, value)))
        for value in range(1 << ((n - 3) // 2))
    }
    assert len(keys) == classes


def test_family_pairing_is_involution_on_masks():
    """Test that the pairing maps masks to masks and squares to the identity."""
    for value in range(16):
        mask = FamilyMask.from_int(11, value)
        paired = family_pairing_mask(mask)
        assert family_pairing_mask(paired) == mask
    assert str(family_pairing(9)) == "h g f^5"


def test_family_mask_parsing():
    """Test mask strings in 0/1 and B/R."""
    mask = FamilyMask.parse(9, "010")

    assert mask == FamilyMask.parse(9, "BRB")
    assert str(mask) == "010"
    assert odd_family(9, mask).color(2, 4) is Color.RED
    assert odd_family(9, mask).color(1, 5) is Color.BLUE
    assert family_mask_of(odd_family(9, mask)) == mask


@pytest.mark.parametrize("text", ["01", "0101", "01x"])
def test_family_mask_rejects(text):
    """Test malformed masks."""
    with pytest.raises(ParameterRangeError):
        FamilyMask.parse(9, text)


def test_family_mask_of_non_member():
    """Test reading a mask from a drawing outside the family."""
    with pytest.raises(TwoPageError):
        family_mask_of(Drawing.all_blue(9))


def test_family_n_mismatch():
    """Test a mask built for another n."""
    with pytest.raises(ParameterRangeError):
        odd_family(11, FamilyMask.from_int(9, 0))


def test_random_is_deterministic():
    """Test that equal seeds give equal drawings."""
    assert random_drawing(12, 99) == random_drawing(12, 99)
    assert len({random_drawing(12, seed) for seed in range(100)}) == 100


def test_random_respects_conventions():
    """Test that random drawings keep spine entries Blue."""
    for seed in range(20):
        d = random_drawing(10, seed)
        assert d.color(1, 10) is Color.BLUE
        assert all(d.color(i, i + 1) is Color.BLUE for i in range(1, 10))


def test_random_orbit_divides_group():
    """Test that orbit sizes of random drawings divide 4n."""
    for seed in range(20):
        d = random_drawing(9, seed)
        assert (4 * 9) % orbit_size(d) == 0


def test_random_range():
    """Test too few vertices and a negative seed."""
    with pytest.raises(ParameterRangeError):
        random_drawing(2, 0)
    with pytest.raises(ParameterRangeError):
        random_drawing(6, -1)
