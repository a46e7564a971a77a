"""
Text and key/value renderings of command results.

Everything here is deterministic: no timestamps, no wall-clock durations.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Literal

from twopage.analysis.structure import StructureViolation
from twopage.drawing.schemas import K4Census, KEdgeProfile
from twopage.enumeration.schemas import ClassReport, CoverageSearchResult

OutputFormat = Literal["text", "kv"]


def kv_lines(pairs: Iterable[tuple[str, object]]) -> str:
    """``key value`` per line."""
    return "".join(f"{key} {value}\n" for key, value in pairs)


def profile_report(profile: KEdgeProfile, fmt: OutputFormat) -> str:
    if fmt == "kv":
        return kv_lines(profile.as_kv())
    width = max(len(str(profile.e_leqleq[-1])) if profile.e_leqleq else 1, 7)
    lines = [f"{'k':>3} {'E_k':>{width}} {'E_<=k':>{width}} {'E_<=<=k':>{width}}"]
    for k, (e, leq, leqleq) in enumerate(
        zip(profile.e, profile.e_leq, profile.e_leqleq, strict=True)
    ):
        lines.append(f"{k:>3} {e:>{width}} {leq:>{width}} {leqleq:>{width}}")
    return "\n".join(lines) + "\n"


def verify_pairs(
    n: int,
    direct: int,
    via_kedges: int,
    via_leqleq: int,
    census: K4Census,
    separations_expected: int,
) -> list[tuple[str, object]]:
    return [
        ("n", n),
        ("crossings_direct", direct),
        ("crossings_via_kedges", via_kedges),
        ("crossings_via_leqleq", via_leqleq),
        ("t_a", census.t_a),
        ("t_bc", census.crossing),
        ("separations", census.separations),
        ("separations_via_kedges", separations_expected),
    ]


def verify_report(
    pairs: list[tuple[str, object]], failures: list[str], fmt: OutputFormat
) -> str:
    values = dict(pairs)
    if fmt == "kv":
        return kv_lines([*pairs, ("ok", "true" if not failures else "false")])
    lines = [
        f"n {values['n']}",
        "crossings {} = {} = {}".format(
            values["crossings_direct"],
            values["crossings_via_kedges"],
            values["crossings_via_leqleq"],
        ),
        "census t_a {} t_bc {} separations {}".format(
            values["t_a"], values["t_bc"], values["separations"]
        ),
        "separations via k-edges {}".format(values["separations_via_kedges"]),
    ]
    lines.extend(f"FAIL {failure}" for failure in failures)
    lines.append("OK" if not failures else "MISMATCH")
    return "\n".join(lines) + "\n"


def class_report(report: ClassReport, fmt: OutputFormat) -> str:
    if fmt == "kv":
        return kv_lines(report.as_kv())
    lines = [
        f"n {report.n}",
        f"z {report.z}",
        f"method {report.method}",
        f"search_space {report.search_space}",
        f"minimum {report.minimum}",
        f"optimal_colorings {report.optimal_colorings}",
        f"classes {report.classes}",
    ]
    for index, (key, mask) in enumerate(zip(report.keys, report.masks, strict=True), start=1):
        lines.append(f"class {index} mask {mask} key {key.hex()}")
    return "\n".join(lines) + "\n"


def search_report(result: CoverageSearchResult, fmt: OutputFormat) -> str:
    if fmt == "kv":
        return kv_lines(result.as_kv())
    lines = [f"{key} {value}" for key, value in result.as_kv()]
    return "\n".join(lines) + "\n"


def violations_report(violations: list[StructureViolation]) -> list[str]:
    return [str(v) for v in violations]
