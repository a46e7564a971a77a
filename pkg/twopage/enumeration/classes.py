"""
Exhaustive minimisation and class counting.

``brute_force_min`` walks every coloring of the non-convention entries;
``enumerate_optimal_classes`` walks only the completions of the odd template,
which meet every class of crossing-optimal drawings.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from tqdm import tqdm

from twopage.construct.template import odd_template
from twopage.core.config import get_settings
from twopage.core.exceptions import IdentityMismatchError, ParameterRangeError
from twopage.core.logging import get_logger
from twopage.drawing.counting import crossings_direct, z_number
from twopage.drawing.model import Drawing, free_indices
from twopage.enumeration.engine import (
    GrayCodeEvaluator,
    PartitionResult,
    SearchSpace,
    merge_partitions,
    scan_worker,
)
from twopage.enumeration.schemas import ClassReport
from twopage.transform.canonical import key_from_packed

logger = get_logger(__name__)


def _partition_bits(high_count: int, jobs: int) -> int:
    """Fixed top bits giving a few partitions per worker."""
    if jobs <= 1:
        return 0
    wanted = (4 * jobs - 1).bit_length()
    return min(high_count, wanted)


def scan_space(space: SearchSpace, target: int | None, jobs: int = 1) -> PartitionResult:
    """
    Walk a search space, optionally across worker processes.

    The merged result does not depend on ``jobs``.
    """
    settings = get_settings()
    evaluator = GrayCodeEvaluator(space)
    prefix_bits = _partition_bits(evaluator.high_count, jobs)
    partitions = list(range(1 << prefix_bits))
    logger.info(
        "Scanning colorings",
        extra={
            "n": space.n,
            "free": space.free_count,
            "partitions": len(partitions),
            "jobs": jobs,
            "target": target,
        },
    )

    if prefix_bits == 0:
        return merge_partitions([evaluator.scan_partition(0, 0, target)])

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(scan_worker, space, p, prefix_bits, target) for p in partitions]
        results = [
            f.result()
            for f in tqdm(futures, desc=f"n={space.n}", disable=not settings.progress)
        ]
    return merge_partitions(results)


def _build_report(
    space: SearchSpace,
    merged: PartitionResult,
    method: str,
    jobs: int,
    started: float,
) -> ClassReport:
    n = space.n
    z = z_number(n)
    if merged.minimum is None:
        raise IdentityMismatchError(f"no coloring with {z} crossings found for n={n}")

    ordered = sorted(merged.classes.items(), key=lambda item: key_from_packed(n, item[0]))
    keys = [key_from_packed(n, packed) for packed, _ in ordered]
    masks = [mask for _, mask in ordered]
    representatives = [Drawing.from_flat(n, space.flat(mask)) for mask in masks]

    for rep in representatives:
        if crossings_direct(rep) != merged.minimum:
            raise IdentityMismatchError("representative crossing count disagrees with the scan")

    report = ClassReport(
        n=n,
        z=z,
        minimum=merged.minimum,
        method=method,
        search_space=space.size,
        optimal_colorings=merged.hits,
        classes=len(keys),
        keys=keys,
        masks=masks,
        representatives=representatives,
        jobs=jobs,
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        "Enumeration finished",
        extra={
            "n": n,
            "method": method,
            "optimal_colorings": report.optimal_colorings,
            "classes": report.classes,
            "elapsed": round(report.elapsed, 3),
        },
    )
    return report


def brute_force_min(n: int, jobs: int | None = None) -> ClassReport:
    """
    Minimum crossing count over every 2-page drawing of K_n, with its minimisers.

    Args:
        n: 3 <= n <= 10; n = 10 walks 2^35 colorings and takes hours
        jobs: Worker processes (defaults to the configured value)

    Returns:
        Report whose minimum equals Z(n)

    Raises:
        ParameterRangeError: n outside the supported range
        IdentityMismatchError: the minimum differs from Z(n)
    """
    settings = get_settings()
    if not 3 <= n <= settings.brute_force_max_n:
        raise ParameterRangeError(
            f"brute force supports 3 <= n <= {settings.brute_force_max_n}, got {n}"
        )
    jobs = jobs or settings.jobs
    started = time.perf_counter()

    rows, cols = free_indices(n)
    space = SearchSpace.from_positions(n, Drawing.all_blue(n).red, rows, cols)
    report = _build_report(space, scan_space(space, None, jobs), "brute", jobs, started)

    if report.minimum != report.z:
        raise IdentityMismatchError(f"minimum {report.minimum} differs from Z({n}) = {report.z}")
    return report


def enumerate_optimal_classes(n: int, big: bool = False, jobs: int | None = None) -> ClassReport:
    """
    Equivalence classes of crossing-optimal drawings for odd n.

    Walks all 2^((5/2)(n-5)) completions of the odd template and keeps those with
    Z(n) crossings.

    Args:
        n: Odd, 7 <= n <= 15, or up to 17 with ``big``
        big: Allow the multi-hour n = 17 run
        jobs: Worker processes (defaults to the configured value)

    Returns:
        Report of classes with their template representatives

    Raises:
        ParameterRangeError: n even or outside the supported range
    """
    settings = get_settings()
    ceiling = settings.enumeration_big_n if big else settings.enumeration_max_n
    if n % 2 == 0 or not 7 <= n <= ceiling:
        hint = "" if big else " (use --big for larger n)"
        raise ParameterRangeError(f"enumeration supports odd 7 <= n <= {ceiling}, got {n}{hint}")
    jobs = jobs or settings.jobs
    started = time.perf_counter()

    template = odd_template(n)
    rows, cols = template.free_positions()
    space = SearchSpace.from_positions(n, template.base_matrix(), rows, cols)
    merged = scan_space(space, z_number(n), jobs)
    return _build_report(space, merged, "template", jobs, started)
