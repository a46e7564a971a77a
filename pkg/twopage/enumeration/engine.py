"""
Exhaustive crossing evaluation over a set of free matrix entries.

The free entries are split into low bits, evaluated all at once with numpy,
and high bits, walked in Gray-code order so that each step flips one edge and
the crossing count is updated from that edge's interleaving partners only.

For a fixed assignment of the high bits, with x_l the color of low edge l,

    crossings = c_rest + sum_l (deg_l - R_l) + sum_l x_l (2 R_l - deg_l) + pairs(x)

where c_rest counts crossings among the other edges, deg_l is the number of
other edges interleaving l, R_l how many of those are Red, and pairs(x) the
crossings among low edges, which does not depend on the high bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from twopage.core.logging import get_logger
from twopage.drawing.counting import quadruples
from twopage.drawing.model import upper_indices
from twopage.transform.canonical import packed_key

logger = get_logger(__name__)

DEFAULT_LOW_BITS = 16


def interleave_matrix(n: int) -> NDArray[np.bool_]:
    """E x E matrix over row-major edges: True where the two edges interleave."""
    rows, _ = upper_indices(n)
    position = np.zeros((n, n), dtype=np.intp)
    position[upper_indices(n)] = np.arange(rows.size)
    q = quadruples(n)
    first = position[q[:, 0], q[:, 2]]
    second = position[q[:, 1], q[:, 3]]
    m = np.zeros((rows.size, rows.size), dtype=bool)
    m[first, second] = True
    m[second, first] = True
    return m


@dataclass(frozen=True)
class SearchSpace:
    """
    Colorings of an n-vertex matrix with some entries fixed.

    Attributes:
        n: Number of vertices
        base: Row-major color vector with every free entry Blue
        free: Row-major positions of the free entries; bit k of a mask colors free[k]
    """

    n: int
    base: NDArray[np.bool_]
    free: NDArray[np.intp]

    @classmethod
    def from_positions(
        cls, n: int, base_red: NDArray[np.bool_], rows: NDArray[np.intp], cols: NDArray[np.intp]
    ) -> SearchSpace:
        all_rows, all_cols = upper_indices(n)
        position = np.zeros((n, n), dtype=np.intp)
        position[all_rows, all_cols] = np.arange(all_rows.size)
        base = base_red[all_rows, all_cols].copy()
        base[position[rows, cols]] = False
        return cls(n=n, base=base, free=position[rows, cols].astype(np.intp))

    @property
    def free_count(self) -> int:
        return int(self.free.size)

    @property
    def size(self) -> int:
        return 1 << self.free_count

    def flat(self, mask: int) -> NDArray[np.bool_]:
        """Row-major color vector of one coloring."""
        vector = self.base.copy()
        bits = (mask >> np.arange(self.free_count)) & 1
        vector[self.free] = bits.astype(bool)
        return vector


@dataclass
class PartitionResult:
    """What one worker saw in its share of the masks."""

    prefix: int
    evaluated: int = 0
    minimum: int | None = None
    hits: int = 0
    classes: dict[bytes, int] = field(default_factory=dict)

    def record(self, space: SearchSpace, masks: list[int]) -> None:
        """Fold masks into the class table, keeping the smallest mask per class."""
        self.hits += len(masks)
        for mask in masks:
            key = packed_key(space.n, space.flat(mask))
            current = self.classes.get(key)
            if current is None or mask < current:
                self.classes[key] = mask


class GrayCodeEvaluator:
    """
    Crossing counts of every coloring in a search space, chunk by chunk.

    Args:
        space: Colorings to walk
        low_bits: Free entries evaluated together per chunk
    """

    def __init__(self, space: SearchSpace, low_bits: int = DEFAULT_LOW_BITS) -> None:
        self.space = space
        n = space.n
        self.low_count = min(low_bits, space.free_count)
        self.high_count = space.free_count - self.low_count

        interleave = interleave_matrix(n)
        edges = space.base.size
        low = space.free[: self.low_count]
        high = space.free[self.low_count :]
        rest_mask = np.ones(edges, dtype=bool)
        rest_mask[low] = False
        rest = np.flatnonzero(rest_mask)
        rest_position = np.full(edges, -1, dtype=np.intp)
        rest_position[rest] = np.arange(rest.size)

        self.rest = rest
        self.high_in_rest = rest_position[high]
        self.rest_interleave = interleave[np.ix_(rest, rest)]
        self.rest_degree = self.rest_interleave.sum(axis=1).astype(np.int64)
        self.low_rest = interleave[np.ix_(low, rest)].astype(np.int64)
        self.low_degree = self.low_rest.sum(axis=1)
        self.low_high = self.low_rest[:, self.high_in_rest]

        indices = np.arange(1 << self.low_count, dtype=np.int64)
        self.low_bits = ((indices[:, None] >> np.arange(self.low_count)) & 1).astype(np.int64)
        low_pairs = np.zeros(indices.size, dtype=np.int64)
        low_interleave = interleave[np.ix_(low, low)]
        for a, b in zip(*np.nonzero(np.triu(low_interleave)), strict=True):
            low_pairs += self.low_bits[:, a] == self.low_bits[:, b]
        self.low_pairs = low_pairs

    def _rest_crossings(self, colors: NDArray[np.bool_]) -> int:
        same = colors[:, None] == colors[None, :]
        return int(np.count_nonzero(same & self.rest_interleave)) // 2

    def chunks(self, prefix: int = 0, prefix_bits: int = 0):
        """
        Yield (high_mask, crossings) for every assignment of the high bits whose top
        ``prefix_bits`` bits equal ``prefix``.

        ``crossings[x]`` is the count of the coloring with mask ``high_mask << low | x``.
        """
        walk_bits = self.high_count - prefix_bits
        high_mask = prefix << walk_bits
        colors = self.space.base[self.rest].copy()
        for j in range(self.high_count):
            if high_mask >> j & 1:
                colors[self.high_in_rest[j]] = True

        rest_cross = self._rest_crossings(colors)
        red_partners = self.low_rest @ colors.astype(np.int64)

        step = 0
        while True:
            constant = rest_cross + int(np.sum(self.low_degree - red_partners))
            linear = 2 * red_partners - self.low_degree
            yield high_mask, constant + self.low_bits @ linear + self.low_pairs

            step += 1
            if step >= 1 << walk_bits:
                return
            j = (step & -step).bit_length() - 1
            p = self.high_in_rest[j]
            same = np.count_nonzero(self.rest_interleave[p] & (colors == colors[p]))
            rest_cross += int(self.rest_degree[p]) - 2 * int(same)
            colors[p] = not colors[p]
            red_partners += self.low_high[:, j] if colors[p] else -self.low_high[:, j]
            high_mask ^= 1 << j

    def scan_partition(self, prefix: int, prefix_bits: int, target: int | None) -> PartitionResult:
        """
        Walk one partition.

        Args:
            prefix: Value of the fixed top high bits
            prefix_bits: How many top high bits are fixed
            target: Count to collect; None collects the running minimum

        Returns:
            Partition summary with hit count and classes
        """
        result = PartitionResult(prefix=prefix)
        best = target
        for high_mask, values in self.chunks(prefix, prefix_bits):
            result.evaluated += values.size
            low = int(values.min())
            if target is None and (best is None or low < best):
                best = low
                result.hits = 0
                result.classes = {}
            if low > best:
                continue
            hits = np.flatnonzero(values == best)
            masks = [(high_mask << self.low_count) | int(x) for x in hits]
            result.record(self.space, masks)
        result.minimum = best if target is None or result.hits else None
        return result


def scan_worker(
    space: SearchSpace, prefix: int, prefix_bits: int, target: int | None
) -> PartitionResult:
    """Process-pool entry point: build an evaluator and scan one partition."""
    evaluator = GrayCodeEvaluator(space)
    result = evaluator.scan_partition(prefix, prefix_bits, target)
    logger.debug(
        "Partition scanned",
        extra={"prefix": prefix, "evaluated": result.evaluated, "hits": result.hits},
    )
    return result


def merge_partitions(results: list[PartitionResult]) -> PartitionResult:
    """
    Combine worker summaries independent of arrival order.

    Only partitions at the global minimum contribute hits and classes.
    """
    minima = [r.minimum for r in results if r.minimum is not None]
    merged = PartitionResult(prefix=0)
    merged.evaluated = sum(r.evaluated for r in results)
    if not minima:
        return merged
    merged.minimum = min(minima)
    for r in sorted(results, key=lambda x: x.prefix):
        if r.minimum != merged.minimum:
            continue
        merged.hits += r.hits
        for key, mask in r.classes.items():
            current = merged.classes.get(key)
            if current is None or mask < current:
                merged.classes[key] = mask
    return merged
