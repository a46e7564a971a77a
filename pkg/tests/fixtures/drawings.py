"""
Test fixtures: sample .2pg documents and seeded random corpora.
"""

import numpy as np

from twopage.construct import random_drawing
from twopage.drawing import Drawing

ALL_BLUE_K4 = "2pg 1 4\nBBB\nBB\nB\n"

ALL_BLUE_K5 = "2pg 1 5\nBBBB\nBBB\nBB\nB\n"

# (1,3) Red, no crossing
PLANE_K4 = "2pg 1 4\nBRB\nBB\nB\n"

# Malformed documents, keyed by the error they should raise
BAD_HEADER = "2pg 2 4\nBBB\nBB\nB\n"
BAD_ROW_LENGTH = "2pg 1 4\nBBB\nB\nB\n"
BAD_ROW_COUNT = "2pg 1 4\nBBB\nBB\n"
BAD_CHARACTER = "2pg 1 4\nBXB\nBB\nB\n"
SPINE_RED = "2pg 1 4\nRBB\nBB\nB\n"
CORNER_RED = "2pg 1 4\nBBR\nBB\nB\n"

CORPUS_SEED = 20_240_517


def random_corpus(
    count: int, low: int = 4, high: int = 30, seed: int = CORPUS_SEED
) -> list[Drawing]:
    """Seeded drawings with n drawn uniformly from [low, high]."""
    rng = np.random.default_rng(seed)
    sizes = rng.integers(low, high + 1, size=count)
    seeds = rng.integers(0, 2**31, size=count)
    return [random_drawing(int(n), int(s)) for n, s in zip(sizes, seeds, strict=True)]


def naive_crossings(d: Drawing) -> int:
    """Pairwise check over all same-page edge pairs."""
    edges = [(i, j, color) for i, j, color in d.entries()]
    total = 0
    for x, (i, j, c1) in enumerate(edges):
        for k, l, c2 in edges[x + 1 :]:
            if c1 == c2 and (i < k < j < l or k < i < l < j):
                total += 1
    return total


def naive_raw_k(d: Drawing, i: int, j: int) -> int:
    """Same-color entries right of (i, j) in row i plus those above it in column j."""
    own = d.color(i, j)
    right = sum(1 for c in range(j + 1, d.n + 1) if d.color(i, c) == own)
    above = sum(1 for r in range(1, i) if d.color(r, j) == own)
    return right + above
