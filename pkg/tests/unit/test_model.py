"""
Unit tests for the drawing model and the .2pg format.
"""

import numpy as np
import pytest

from tests.fixtures.drawings import (
    ALL_BLUE_K4,
    BAD_CHARACTER,
    BAD_HEADER,
    BAD_ROW_COUNT,
    BAD_ROW_LENGTH,
    CORNER_RED,
    PLANE_K4,
    SPINE_RED,
)
from twopage.construct import random_drawing
from twopage.core.exceptions import (
    ConventionViolationError,
    DrawingFormatError,
    IllegalCharacterError,
    MalformedHeaderError,
    ParameterRangeError,
    RowLengthError,
)
from twopage.drawing import Color, Drawing, parse_drawing, serialize_drawing


def test_parse_all_blue():
    """Test parsing the all-Blue K4."""
    d = parse_drawing(ALL_BLUE_K4)

    assert d.n == 4
    entries = list(d.entries())
    assert len(entries) == 6
    assert all(color is Color.BLUE for _, _, color in entries)


def test_parse_accepts_missing_final_newline():
    """Test that the trailing newline is optional on input."""
    assert parse_drawing(ALL_BLUE_K4.rstrip("\n")) == parse_drawing(ALL_BLUE_K4)


@pytest.mark.parametrize(
    "text, error",
    [
        (BAD_HEADER, MalformedHeaderError),
        ("2pg 1 2\nB\n", MalformedHeaderError),
        ("2pg 1 x\n", MalformedHeaderError),
        ("2pg 1 \u0664\nBBB\nBB\nB\n", MalformedHeaderError),
        ("2pg 1 04\nBBB\nBB\nB\n", MalformedHeaderError),
        ("", MalformedHeaderError),
        (BAD_ROW_LENGTH, RowLengthError),
        (BAD_ROW_COUNT, RowLengthError),
        (BAD_CHARACTER, IllegalCharacterError),
        (SPINE_RED, ConventionViolationError),
        (CORNER_RED, ConventionViolationError),
        ("2pg 1 4\nBBB \nBB\nB\n", RowLengthError),
    ],
)
def test_parse_errors(text, error):
    """Test that each malformation raises its own error."""
    with pytest.raises(error):
        parse_drawing(text)


def test_format_errors_share_base():
    """Test the error hierarchy."""
    with pytest.raises(DrawingFormatError):
        parse_drawing(SPINE_RED)


def test_serialize_is_canonical():
    """Test exact serialization."""
    d = parse_drawing(PLANE_K4)

    assert serialize_drawing(d) == PLANE_K4
    assert d.color(1, 3) is Color.RED
    assert d.color(3, 1) is Color.RED


def test_round_trip_random():
    """Test serialize(parse(t)) == t over random drawings."""
    for seed in range(50):
        text = serialize_drawing(random_drawing(3 + seed % 15, seed))
        assert serialize_drawing(parse_drawing(text)) == text


def test_drawing_is_immutable():
    """Test that the color matrix cannot be written."""
    d = random_drawing(6, 1)

    with pytest.raises(ValueError):
        d.red[0, 2] = True


def test_lower_triangle_ignored():
    """Test that only the strict upper triangle is kept."""
    red = np.ones((4, 4), dtype=bool)
    red[0, 1] = red[1, 2] = red[2, 3] = red[0, 3] = False

    d = Drawing(red)

    assert not d.red[2, 0]
    assert d.color(1, 3) is Color.RED


def test_small_n_rejected():
    """Test that n < 3 is rejected."""
    with pytest.raises(ParameterRangeError):
        Drawing(np.zeros((2, 2), dtype=bool))


def test_free_bits_constructor():
    """Test building from the non-convention entries."""
    d = Drawing.from_free_bits(4, [True, False])

    assert d == parse_drawing(PLANE_K4)
    with pytest.raises(ParameterRangeError):
        Drawing.from_free_bits(4, [True])


def test_with_colors_and_hash():
    """Test recoloring copies and equality/hash consistency."""
    d = parse_drawing(ALL_BLUE_K4)
    e = d.with_colors({(1, 3): Color.RED})

    assert e == parse_drawing(PLANE_K4)
    assert d != e
    assert hash(e) == hash(parse_drawing(PLANE_K4))
    with pytest.raises(ConventionViolationError):
        d.with_colors({(1, 2): Color.RED})
