"""
Unit tests for the Gray-code evaluation engine.
"""

import numpy as np

from twopage.construct import odd_template
from twopage.drawing import Drawing, crossings_direct
from twopage.drawing.counting import quadruples
from twopage.drawing.model import free_indices
from twopage.enumeration.engine import (
    GrayCodeEvaluator,
    PartitionResult,
    SearchSpace,
    interleave_matrix,
    merge_partitions,
)


def full_space(n: int) -> SearchSpace:
    rows, cols = free_indices(n)
    return SearchSpace.from_positions(n, Drawing.all_blue(n).red, rows, cols)


def test_interleave_matrix():
    """Test one interleaving pair per vertex quadruple."""
    for n in (4, 6, 9):
        m = interleave_matrix(n)
        assert np.array_equal(m, m.T)
        assert not m.diagonal().any()
        assert int(m.sum()) // 2 == len(quadruples(n))


def test_space_flat():
    """Test that bit k of a mask colors free entry k."""
    space = full_space(6)
    for k in range(space.free_count):
        vector = space.flat(1 << k)
        assert vector.sum() == 1
        assert vector[space.free[k]]
    assert space.size == 1 << 9


def test_every_value_matches_direct_count():
    """Test all chunk values against the quadruple count at n = 6."""
    space = full_space(6)
    evaluator = GrayCodeEvaluator(space, low_bits=4)
    seen = {}
    for high_mask, values in evaluator.chunks():
        for low, value in enumerate(values.tolist()):
            seen[(high_mask << 4) | low] = value

    assert sorted(seen) == list(range(space.size))
    for mask, value in seen.items():
        assert value == crossings_direct(Drawing.from_flat(6, space.flat(mask)))


def test_low_bits_cover_everything():
    """Test a space smaller than the low block."""
    space = full_space(5)
    evaluator = GrayCodeEvaluator(space)
    chunks = list(evaluator.chunks())

    assert evaluator.high_count == 0
    assert len(chunks) == 1
    _, values = chunks[0]
    assert int(values.min()) == 1


def test_template_space_values():
    """Test chunk values on a template space with fixed Red entries."""
    template = odd_template(7)
    rows, cols = template.free_positions()
    space = SearchSpace.from_positions(7, template.base_matrix(), rows, cols)
    evaluator = GrayCodeEvaluator(space, low_bits=2)

    for high_mask, values in evaluator.chunks():
        for low, value in enumerate(values.tolist()):
            mask = (high_mask << 2) | low
            assert value == crossings_direct(template.completion(mask))


def test_partitions_merge_to_full_scan():
    """Test that a partitioned walk agrees with a single walk."""
    space = full_space(7)
    evaluator = GrayCodeEvaluator(space, low_bits=8)
    whole = merge_partitions([evaluator.scan_partition(0, 0, None)])
    parts = [evaluator.scan_partition(p, 3, None) for p in range(8)]
    merged = merge_partitions(list(reversed(parts)))

    assert merged.minimum == whole.minimum == 9
    assert merged.hits == whole.hits
    assert merged.classes == whole.classes
    assert merged.evaluated == whole.evaluated == space.size


def test_target_scan():
    """Test collecting a fixed target and missing it."""
    space = full_space(6)
    evaluator = GrayCodeEvaluator(space, low_bits=4)

    hit = evaluator.scan_partition(0, 0, 3)
    miss = evaluator.scan_partition(0, 0, 2)

    assert hit.minimum == 3
    assert hit.hits > 0
    assert miss.minimum is None
    assert miss.hits == 0


def test_record_keeps_smallest_mask():
    """Test that a class keeps its smallest mask."""
    space = full_space(5)
    result = PartitionResult(prefix=0)
    result.record(space, [3, 0, 1])

    assert result.hits == 3
    assert min(result.classes.values()) == 0


def test_merge_without_minimum():
    """Test merging partitions that all missed the target."""
    merged = merge_partitions([PartitionResult(prefix=0, evaluated=4)])

    assert merged.minimum is None
    assert merged.evaluated == 4
