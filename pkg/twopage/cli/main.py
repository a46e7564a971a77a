"""
Command-line entry point.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O failure.
Results go to stdout; logs and error messages go to stderr.
"""

from __future__ import annotations

import functools
from collections.abc import Callable
from math import comb
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError

from twopage.analysis import (
    check_structure,
    conforming_element,
    halving_check,
    support_check,
    uncrossed_hamiltonian_cycles,
)
from twopage.cli import reports
from twopage.construct import FamilyMask, even_optimal, odd_family, random_drawing
from twopage.core.config import configure
from twopage.core.exceptions import IllegalCharacterError, TwoPageError
from twopage.core.logging import get_logger, setup_logging
from twopage.drawing import (
    Drawing,
    crossings_direct,
    crossings_via_kedges,
    crossings_via_leqleq,
    k4_census,
    k_edge_profile,
    parse_drawing,
    separations_via_kedges,
    serialize_drawing,
    z_number,
)
from twopage.enumeration import brute_force_min, enumerate_optimal_classes, search_low_coverage
from twopage.transform import apply, are_equivalent, canonical_form, canonical_key, render

logger = get_logger(__name__)


class ValidationFailure(click.ClickException):
    """Input was read but is invalid, or a check failed."""

    exit_code = 1


class IOFailure(click.ClickException):
    """A file could not be read or written."""

    exit_code = 3


def handle_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """Translate library errors into the CLI exit-code contract."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except OSError as exc:
            logger.error("I/O failure", extra={"error": str(exc)})
            raise IOFailure(str(exc)) from exc
        except (TwoPageError, ValidationError) as exc:
            raise ValidationFailure(str(exc)) from exc

    return wrapper


def load_drawing(path: str) -> Drawing:
    """Read and parse a .2pg file."""
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IllegalCharacterError(f"{path} is not UTF-8 text: {exc.reason}") from exc
    return parse_drawing(text)


def write_text(path: str | None, text: str) -> None:
    """Write to a file, or to stdout when no path is given."""
    if path is None:
        click.echo(text, nl=False)
    else:
        Path(path).write_text(text, encoding="utf-8")


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "kv"]),
    default="text",
    show_default=True,
    help="Output layout.",
)
jobs_option = click.option(
    "--jobs", type=click.IntRange(min=1), default=None, help="Worker processes."
)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Logging threshold (logs go to stderr).",
)
@click.option("--json-logs", is_flag=True, help="Emit structured JSON logs.")
@click.option("--progress", is_flag=True, help="Show progress bars on stderr.")
def cli(log_level: str | None, json_logs: bool, progress: bool) -> None:
    """Crossing counts, symmetries and exhaustive searches for 2-page drawings of K_n."""
    configure(
        log_level=log_level,
        environment="production" if json_logs else None,
        progress=progress or None,
    )
    setup_logging()


@cli.command("z")
@click.option("--n", "n", type=int, required=True, help="Number of vertices.")
@format_option
@handle_errors
def z_command(n: int, fmt: str) -> None:
    """Print the Harary-Hill number Z(n)."""
    value = z_number(n)
    if fmt == "kv":
        click.echo(reports.kv_lines([("n", n), ("z", value)]), nl=False)
    else:
        click.echo(value)


@cli.command("crossings")
@click.argument("path")
@click.option(
    "--method",
    type=click.Choice(["direct", "kedges", "leqleq"]),
    default="direct",
    show_default=True,
)
@handle_errors
def crossings_command(path: str, method: str) -> None:
    """Print the crossing count of a drawing."""
    d = load_drawing(path)
    compute = {
        "direct": crossings_direct,
        "kedges": crossings_via_kedges,
        "leqleq": crossings_via_leqleq,
    }[method]
    click.echo(compute(d))


@cli.command("profile")
@click.argument("path")
@format_option
@handle_errors
def profile_command(path: str, fmt: str) -> None:
    """Print E_k, E_<=k and E_<=<=k."""
    click.echo(reports.profile_report(k_edge_profile(load_drawing(path)), fmt), nl=False)


@cli.command("verify")
@click.argument("path")
@format_option
@handle_errors
def verify_command(path: str, fmt: str) -> None:
    """Check that every crossing identity and the K4 census agree."""
    d = load_drawing(path)
    direct = crossings_direct(d)
    via_kedges = crossings_via_kedges(d)
    via_leqleq = crossings_via_leqleq(d)
    census = k4_census(d)
    expected_separations = separations_via_kedges(d)

    failures = []
    if not direct == via_kedges == via_leqleq:
        failures.append("crossing counts differ")
    if census.crossing != direct:
        failures.append("crossing quadruples differ from crossings")
    if census.total != comb(d.n, 4):
        failures.append("census does not cover every quadruple")
    if census.separations != 3 * census.t_a + 2 * census.crossing:
        failures.append("separations differ from 3 t_a + 2 (t_b + t_c)")
    if census.separations != expected_separations:
        failures.append("separations differ from the k-edge sum")

    pairs = reports.verify_pairs(d.n, direct, via_kedges, via_leqleq, census, expected_separations)
    click.echo(reports.verify_report(pairs, failures, fmt), nl=False)
    if failures:
        raise ValidationFailure("; ".join(failures))


@cli.command("gen")
@click.option(
    "--kind", type=click.Choice(["even-opt", "odd-family", "random"]), required=True
)
@click.option("--n", "n", type=int, required=True, help="Number of vertices.")
@click.option("--mask", default=None, help="Family bits, e.g. 010 (odd-family only).")
@click.option(
    "--seed", type=click.IntRange(min=0), default=0, show_default=True, help="Seed (random only)."
)
@click.option("--output", "-o", default=None, help="Write to a file instead of stdout.")
@handle_errors
def gen_command(kind: str, n: int, mask: str | None, seed: int, output: str | None) -> None:
    """Generate a drawing in .2pg format."""
    if kind == "even-opt":
        d = even_optimal(n)
    elif kind == "odd-family":
        if mask is None:
            mask = "0" * max(0, (n - 3) // 2)
        d = odd_family(n, FamilyMask.parse(n, mask))
    else:
        d = random_drawing(n, seed)
        logger.info("Random drawing generated", extra={"n": n, "seed": seed})
    write_text(output, serialize_drawing(d))


@cli.command("canon")
@click.argument("path")
@click.option("--form", is_flag=True, help="Print the canonical drawing instead of its key.")
@handle_errors
def canon_command(path: str, form: bool) -> None:
    """Print the canonical key (lowercase hex of the smallest body)."""
    d = load_drawing(path)
    if form:
        click.echo(serialize_drawing(canonical_form(d)), nl=False)
    else:
        click.echo(canonical_key(d).hex())


@cli.command("equiv")
@click.argument("first")
@click.argument("second")
@handle_errors
def equiv_command(first: str, second: str) -> None:
    """Print whether two drawings are equivalent."""
    click.echo("true" if are_equivalent(load_drawing(first), load_drawing(second)) else "false")


def emit_representatives(directory: str, representatives: list[Drawing]) -> None:
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    for index, rep in enumerate(representatives, start=1):
        (target / f"rep_{index}.2pg").write_text(serialize_drawing(rep), encoding="utf-8")


@cli.command("enumerate")
@click.option("--n", "n", type=int, required=True, help="Odd number of vertices.")
@click.option("--big", is_flag=True, help="Allow n = 17 (multi-hour run).")
@click.option("--emit-reps", "emit_reps", default=None, help="Directory for representatives.")
@jobs_option
@format_option
@handle_errors
def enumerate_command(
    n: int, big: bool, emit_reps: str | None, jobs: int | None, fmt: str
) -> None:
    """Count classes of crossing-optimal drawings for odd n."""
    report = enumerate_optimal_classes(n, big=big, jobs=jobs)
    click.echo(reports.class_report(report, fmt), nl=False)
    if emit_reps is not None:
        emit_representatives(emit_reps, report.representatives)


@cli.command("mincross")
@click.option("--n", "n", type=int, required=True, help="Number of vertices (at most 10).")
@click.option("--emit-reps", "emit_reps", default=None, help="Directory for representatives.")
@jobs_option
@format_option
@handle_errors
def mincross_command(n: int, emit_reps: str | None, jobs: int | None, fmt: str) -> None:
    """Minimise crossings over every 2-page drawing of K_n."""
    report = brute_force_min(n, jobs=jobs)
    click.echo(reports.class_report(report, fmt), nl=False)
    if emit_reps is not None:
        emit_representatives(emit_reps, report.representatives)


@cli.command("search-counterexample")
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Candidate cap.")
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Seed of the random phase.")
@click.option("--output", "-o", default=None, help="Write the drawing found to a file.")
@format_option
@handle_errors
def search_command(
    n: int, k: int, budget: int | None, seed: int | None, output: str | None, fmt: str
) -> None:
    """Look for a drawing with E_<=k < 3 C(k+2, 2)."""
    result = search_low_coverage(n, k, budget=budget, seed=seed)
    click.echo(reports.search_report(result, fmt), nl=False)
    if result.drawing is not None:
        if output is not None:
            write_text(output, serialize_drawing(result.drawing))
        elif fmt == "text":
            click.echo(serialize_drawing(result.drawing), nl=False)
    if not result.found:
        raise ValidationFailure(f"no drawing found ({result.status})")


@cli.command("check")
@click.argument("path")
@click.option("--structure", is_flag=True, help="Conformance to the structure template.")
@click.option("--support", is_flag=True, help="<=k-edges lie in the first rows / last columns.")
@click.option("--halving", is_flag=True, help="The three middle entries are halving edges.")
@click.option("--hamcycles", is_flag=True, help="Exactly one uncrossed Hamiltonian cycle.")
@click.option(
    "--up-to-equivalence", is_flag=True, help="Structure check on some equivalent drawing."
)
@handle_errors
def check_command(
    path: str,
    structure: bool,
    support: bool,
    halving: bool,
    hamcycles: bool,
    up_to_equivalence: bool,
) -> None:
    """Run structural checks; with no flag, all of them."""
    d = load_drawing(path)
    if not (structure or support or halving or hamcycles):
        structure = d.n >= 6
        support = halving = hamcycles = True

    failed: list[str] = []
    if structure:
        violations = check_structure(d)
        if violations and up_to_equivalence:
            element = conforming_element(d)
            if element is not None:
                click.echo(f"structure conforms after {element}")
                violations = check_structure(apply(d, element))
        for line in reports.violations_report(violations):
            click.echo(line)
        click.echo(f"structure {'ok' if not violations else 'fail'}")
        if violations:
            failed.append("structure")
    if support:
        bad = [k for k in range(d.n // 2 - 1) if not support_check(d, k)]
        click.echo(f"support {'ok' if not bad else 'fail k=' + ','.join(map(str, bad))}")
        if bad:
            failed.append("support")
    if halving:
        ok = halving_check(d)
        click.echo(f"halving {'ok' if ok else 'fail'}")
        if not ok:
            failed.append("halving")
    if hamcycles:
        cycles = uncrossed_hamiltonian_cycles(d)
        for cycle in cycles:
            click.echo("cycle " + " ".join(map(str, cycle)))
        click.echo(f"hamcycles {len(cycles)}")
        if len(cycles) != 1:
            failed.append("hamcycles")

    if failed:
        raise ValidationFailure("failed checks: " + ", ".join(failed))


@cli.command("render")
@click.argument("path")
@click.option("--mode", type=click.Choice(["matrix", "strip"]), default="matrix", show_default=True)
@handle_errors
def render_command(path: str, mode: str) -> None:
    """Draw the 2-page matrix or the strip diagram in ASCII."""
    click.echo(render(load_drawing(path), mode), nl=False)


def main(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    try:
        cli.main(args=argv, prog_name="twopage", standalone_mode=True)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
