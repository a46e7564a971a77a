"""
Unit tests for canonical keys, orbits and equivalence.
"""

import pytest

from twopage.construct import odd_family, random_drawing
from twopage.construct.generators import FamilyMask, family_pairing, family_pairing_mask
from twopage.core.exceptions import SizeMismatchError
from twopage.drawing import Drawing, crossings_direct, serialize_body
from twopage.transform import (
    GroupElement,
    all_elements,
    apply,
    are_equivalent,
    canonical_element,
    canonical_form,
    canonical_key,
    orbit,
    orbit_size,
    packed_key,
    parse_element,
    stabilizer_size,
)


def test_key_constant_on_orbit():
    """Test that every image has the same key."""
    for seed in range(10):
        d = random_drawing(4 + seed, seed)
        key = canonical_key(d)
        for t in all_elements(d.n):
            assert canonical_key(apply(d, t)) == key


def test_key_is_smallest_body():
    """Test that the key is the minimum serialized body over the orbit."""
    d = random_drawing(8, 3)
    bodies = [serialize_body(apply(d, t)).encode("ascii") for t in all_elements(8)]

    assert canonical_key(d) == min(bodies)
    assert serialize_body(canonical_form(d)).encode("ascii") == canonical_key(d)
    assert apply(d, canonical_element(d)) == canonical_form(d)


def test_packed_key_orders_like_body_key():
    """Test that packed keys agree with body keys on equality."""
    drawings = [random_drawing(7, seed) for seed in range(30)]
    for a in drawings:
        for b in drawings:
            same_body = canonical_key(a) == canonical_key(b)
            same_packed = packed_key(7, a.flat()) == packed_key(7, b.flat())
            assert same_body == same_packed


def test_all_blue_orbit():
    """Test that the all-Blue drawing is fixed by f and g."""
    for n in range(4, 12):
        d = Drawing.all_blue(n)
        assert apply(d, GroupElement.f(n)) == d
        assert apply(d, GroupElement.g(n)) == d
        assert orbit_size(d) == 2
        assert len(orbit(d)) == 2


def test_orbit_stabilizer():
    """Test orbit size times stabilizer size equals 4n."""
    for seed in range(100):
        d = random_drawing(4 + seed % 12, seed)
        size = orbit_size(d)
        assert (4 * d.n) % size == 0
        assert size * stabilizer_size(d) == 4 * d.n


def test_equivalent_to_image():
    """Test d ~ h g f^3 (d)."""
    d = random_drawing(9, 8)

    assert are_equivalent(d, apply(d, parse_element("h g f^3", 9)))


def test_different_crossings_not_equivalent():
    """Test that drawings with different crossing counts are not equivalent."""
    a = Drawing.all_blue(5)
    b = random_drawing(5, 1)
    while crossings_direct(b) == crossings_direct(a):
        b = random_drawing(5, crossings_direct(b) + 100)

    assert not are_equivalent(a, b)


def test_family_pairing_is_an_equivalence():
    """Test odd_family(n, m) ~ odd_family(n, m') for the paired mask at n = 9."""
    for value in range(8):
        mask = FamilyMask.from_int(9, value)
        paired = family_pairing_mask(mask)
        assert apply(odd_family(9, mask), family_pairing(9)) == odd_family(9, paired)
        assert are_equivalent(odd_family(9, mask), odd_family(9, paired))


def test_size_mismatch():
    """Test comparing drawings of different sizes."""
    with pytest.raises(SizeMismatchError):
        are_equivalent(Drawing.all_blue(5), Drawing.all_blue(6))
