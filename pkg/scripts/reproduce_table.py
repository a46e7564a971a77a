"""
Reproduce the table of optimal-drawing classes for odd n.
Walks the odd template for every n up to --max-n and prints, per n, the number
of equivalence classes next to the number of cyclic-family classes.
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import click

from twopage.construct import FamilyMask, odd_family
from twopage.core.config import configure
from twopage.core.logging import get_logger, setup_logging
from twopage.enumeration import enumerate_optimal_classes
from twopage.transform import canonical_key

logger = get_logger(__name__)

EXPECTED_CLASSES = {7: 4, 9: 9, 11: 25, 13: 58, 15: 142}


def family_classes(n: int) -> int:
    """Distinct classes among the 2^((n-3)/2) family members."""
    keys = {
        canonical_key(odd_family(n, FamilyMask.from_int(n, value)))
        for value in range(1 << ((n - 3) // 2))
    }
    return len(keys)


def reproduce_table(max_n: int, jobs: int) -> bool:
    """
    Print one row per odd n and compare with the known class counts.
    """
    click.echo(f"{'n':>3} {'Z(n)':>6} {'classes':>8} {'family':>7}")
    ok = True
    for n in range(7, max_n + 1, 2):
        report = enumerate_optimal_classes(n, big=n > 15, jobs=jobs)
        family = family_classes(n)
        click.echo(f"{n:>3} {report.z:>6} {report.classes:>8} {family:>7}")

        expected = EXPECTED_CLASSES.get(n)
        if expected is not None and report.classes != expected:
            logger.error(
                "Class count differs from the known value",
                extra={"n": n, "classes": report.classes, "expected": expected},
            )
            ok = False
    return ok


@click.command()
@click.option("--max-n", type=int, default=13, show_default=True, help="Largest odd n.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--progress", is_flag=True, help="Show progress bars on stderr.")
def main(max_n: int, jobs: int, progress: bool) -> None:
    """Reproduce the table of optimal-drawing classes for odd n."""
    configure(log_level="INFO", progress=progress or None, jobs=jobs)
    setup_logging()
    success = reproduce_table(max_n, jobs)
    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()
