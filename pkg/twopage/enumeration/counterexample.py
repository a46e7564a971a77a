"""
Search for 2-page drawings with fewer than 3 C(k+2, 2) edges of value <= k.

Crossing-optimal drawings always reach that bound; arbitrary 2-page drawings
need not. The search evaluates colorings in numpy batches: seeded random
batches with greedy single-flip descent first, then every coloring in mask
order, all under one candidate budget.
"""

from __future__ import annotations

from math import comb

import numpy as np
from numpy.typing import NDArray

from twopage.core.config import get_settings
from twopage.core.exceptions import ParameterRangeError
from twopage.core.logging import get_logger
from twopage.drawing.kedges import fold, raw_k_matrix
from twopage.drawing.model import Drawing, free_indices, upper_indices
from twopage.enumeration.schemas import CoverageSearchResult

logger = get_logger(__name__)

# Largest number of free entries the systematic phase can index with int64 masks
SYSTEMATIC_MAX_WIDTH = 62

# search_batch_size is the row count for n = 8; larger n get fewer rows
BATCH_REFERENCE_CELLS = 64


def batch_rows(n: int, batch: int) -> int:
    """Rows per batch so that rows * n * n stays near batch * 64 matrix cells."""
    return max(1, batch * BATCH_REFERENCE_CELLS // (n * n))


def leq_counts(n: int, bits: NDArray[np.bool_], k: int) -> NDArray[np.int64]:
    """
    E_<=k for a batch of colorings.

    Args:
        n: Number of vertices
        bits: (batch, free) array; column f colors the f-th non-convention entry
        k: Folded threshold

    Returns:
        One count per row
    """
    rows, cols = upper_indices(n)
    free_rows, free_cols = free_indices(n)
    red = np.zeros((bits.shape[0], n, n), dtype=bool)
    red[:, free_rows, free_cols] = bits
    values = fold(raw_k_matrix(red)[:, rows, cols], n)
    return np.count_nonzero(values <= k, axis=1)


class _Budget:
    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    @property
    def remaining(self) -> int:
        return self.limit - self.used

    def take(self, wanted: int) -> int:
        granted = max(0, min(wanted, self.remaining))
        self.used += granted
        return granted


def _descend(
    n: int, start: NDArray[np.bool_], score: int, k: int, budget: _Budget
) -> tuple[NDArray[np.bool_], int]:
    """Greedy single-flip descent on E_<=k."""
    current, best = start.copy(), score
    width = current.size
    while budget.remaining >= width:
        budget.take(width)
        neighbours = np.repeat(current[None, :], width, axis=0)
        neighbours[np.arange(width), np.arange(width)] ^= True
        scores = leq_counts(n, neighbours, k)
        pick = int(np.argmin(scores))
        if scores[pick] >= best:
            break
        current, best = neighbours[pick], int(scores[pick])
    return current, best


def search_low_coverage(
    n: int, k: int, budget: int | None = None, seed: int | None = None
) -> CoverageSearchResult:
    """
    Look for a 2-page drawing with E_<=k < 3 C(k+2, 2).

    Args:
        n: At least 4
        k: 0 <= k <= fl(n/2)-2
        budget: Candidate colorings to evaluate (default from settings)
        seed: Seed for the random phase (default from settings)

    Returns:
        ``found`` with the drawing, ``none_exist`` once every coloring was checked,
        or ``budget_exhausted``
    """
    if n < 4:
        raise ParameterRangeError(f"search needs n >= 4, got {n}")
    if not 0 <= k <= n // 2 - 2:
        raise ParameterRangeError(f"k must lie in 0..{n // 2 - 2} for n={n}, got {k}")

    settings = get_settings()
    budget = settings.search_budget if budget is None else budget
    seed = settings.search_seed if seed is None else seed
    if budget < 1:
        raise ParameterRangeError(f"budget must be positive, got {budget}")
    if seed < 0:
        raise ParameterRangeError(f"seed must be non-negative, got {seed}")

    threshold = 3 * comb(k + 2, 2)
    width = free_indices(n)[0].size
    batch = batch_rows(n, settings.search_batch_size)
    spent = _Budget(budget)
    rng = np.random.default_rng(seed)

    def done(status, phase=None, bits=None, leq=None) -> CoverageSearchResult:
        drawing = Drawing.from_free_bits(n, bits) if bits is not None else None
        result = CoverageSearchResult(
            n=n,
            k=k,
            threshold=threshold,
            status=status,
            candidates=spent.used,
            budget=budget,
            seed=seed,
            phase=phase,
            leq=leq,
            drawing=drawing,
        )
        logger.info(
            "Coverage search finished",
            extra={"n": n, "k": k, "status": status, "phase": phase, "candidates": spent.used},
        )
        return result

    for _ in range(settings.search_random_rounds):
        size = spent.take(batch)
        if size == 0:
            return done("budget_exhausted")
        bits = rng.integers(0, 2, size=(size, width)).astype(bool)
        scores = leq_counts(n, bits, k)
        best = int(np.argmin(scores))
        if scores[best] < threshold:
            return done("found", "random", bits[best], int(scores[best]))
        local, score = _descend(n, bits[best], int(scores[best]), k, spent)
        if score < threshold:
            return done("found", "descent", local, score)

    if width > SYSTEMATIC_MAX_WIDTH:
        logger.warning(
            "Too many free entries for a systematic scan",
            extra={"n": n, "free": width, "limit": SYSTEMATIC_MAX_WIDTH},
        )
        return done("budget_exhausted")

    total = 1 << width
    start = 0
    while start < total:
        size = spent.take(min(batch, total - start))
        if size == 0:
            return done("budget_exhausted")
        masks = np.arange(start, start + size, dtype=np.int64)
        bits = ((masks[:, None] >> np.arange(width)) & 1).astype(bool)
        scores = leq_counts(n, bits, k)
        hits = np.flatnonzero(scores < threshold)
        if hits.size:
            first = int(hits[0])
            return done("found", "systematic", bits[first], int(scores[first]))
        start += size
    return done("none_exist", "systematic")
