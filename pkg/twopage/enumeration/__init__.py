"""Exhaustive searches: minima, optimal classes and low-coverage drawings."""

from twopage.enumeration.classes import brute_force_min, enumerate_optimal_classes
from twopage.enumeration.counterexample import search_low_coverage
from twopage.enumeration.schemas import ClassReport, CoverageSearchResult

__all__ = [
    "ClassReport",
    "CoverageSearchResult",
    "brute_force_min",
    "enumerate_optimal_classes",
    "search_low_coverage",
]
