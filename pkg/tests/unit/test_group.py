"""
Unit tests for the equivalence group.
"""

import numpy as np
import pytest

from twopage.construct import random_drawing
from twopage.core.exceptions import ParameterRangeError
from twopage.drawing import Drawing, crossings_direct, k_edge_profile
from twopage.transform import (
    GroupElement,
    all_elements,
    apply,
    compose,
    inverse,
    parse_element,
)


def rotate_first_row(d: Drawing) -> Drawing:
    """Matrix description of f: row 1 becomes column n, the rest shift up-left."""
    n = d.n
    red = np.zeros((n, n), dtype=bool)
    for j in range(2, n + 1):
        red[j - 2, n - 1] = d.red[0, j - 1]
    for i in range(2, n + 1):
        for j in range(i + 1, n + 1):
            red[i - 2, j - 2] = d.red[i - 1, j - 1]
    return Drawing(red)


def test_group_order():
    """Test that there are 4n distinct elements."""
    for n in (3, 4, 7, 10):
        elements = all_elements(n)
        assert len(elements) == 4 * n
        assert len(set(elements)) == 4 * n


def test_f_matches_matrix_rotation():
    """Test the relabelling f against the matrix description."""
    for seed in range(20):
        d = random_drawing(4 + seed % 8, seed)
        assert apply(d, GroupElement.f(d.n)) == rotate_first_row(d)


def test_g_reflects_entries():
    """Test (i, j) -> (n+1-j, n+1-i) under g."""
    d = random_drawing(9, 5)
    image = apply(d, GroupElement.g(9))

    for i, j, color in d.entries():
        assert image.color(10 - j, 10 - i) is color


def test_h_flips_all_but_convention():
    """Test that h swaps pages except for spine edges and (1, n)."""
    d = random_drawing(7, 2)
    image = apply(d, GroupElement.h(7))

    for i, j, color in d.entries():
        if j == i + 1 or (i, j) == (1, 7):
            assert image.color(i, j) is color
        else:
            assert image.color(i, j) is not color


def test_relations_hold():
    """Test f^n = g^2 = h^2 = id and the commutation rules."""
    n = 8
    f, g, h = GroupElement.f(n), GroupElement.g(n), GroupElement.h(n)
    identity = GroupElement.identity(n)
    d = random_drawing(n, 42)

    power = identity
    for _ in range(n):
        power = compose(f, power)
    assert power == identity
    assert compose(g, g) == identity
    assert compose(h, h) == identity
    assert compose(g, f) == compose(inverse(f), g)
    assert compose(h, f) == compose(f, h)
    assert compose(g, h) == compose(h, g)

    image = d
    for _ in range(n):
        image = apply(image, f)
    assert image == d
    assert apply(apply(d, f), g) == apply(apply(d, g), inverse(f))


def test_composition_is_the_action():
    """Test apply(apply(d, t2), t1) == apply(d, t1 o t2) for every pair."""
    n = 6
    d = random_drawing(n, 7)
    for t1 in all_elements(n):
        for t2 in all_elements(n):
            assert apply(apply(d, t2), t1) == apply(d, compose(t1, t2))


def test_inverse():
    """Test t o t^-1 = id."""
    for t in all_elements(7):
        assert compose(t, inverse(t)).is_identity
        assert compose(inverse(t), t).is_identity


def test_invariants_constant_on_orbit():
    """Test crossings and the k-edge profile are preserved."""
    for seed in range(10):
        d = random_drawing(5 + seed, seed)
        crossings = crossings_direct(d)
        profile = k_edge_profile(d)
        for t in all_elements(d.n):
            image = apply(d, t)
            assert crossings_direct(image) == crossings
            assert k_edge_profile(image) == profile


def test_parse_element():
    """Test parsing of words in f, g, h."""
    n = 9
    assert parse_element("h g f^3", n) == GroupElement(n=n, a=1, b=1, i=3)
    assert parse_element("id", n).is_identity
    assert parse_element("f^-1", n) == GroupElement(n=n, i=8)
    assert parse_element("f g", n) == compose(GroupElement.f(n), GroupElement.g(n))
    assert str(GroupElement(n=n, a=1, b=1, i=3)) == "h g f^3"
    with pytest.raises(ParameterRangeError):
        parse_element("k", n)


def test_size_mismatch():
    """Test applying an element built for another n."""
    with pytest.raises(ParameterRangeError):
        apply(random_drawing(5, 0), GroupElement.f(6))
