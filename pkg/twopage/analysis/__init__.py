"""Structural verifiers for 2-page drawings."""

from twopage.analysis.hamiltonian import (
    spine_cycle,
    uncrossed_graph,
    uncrossed_hamiltonian_cycles,
)
from twopage.analysis.properties import (
    column_low_edge_counts_ok,
    halving_check,
    halving_entries,
    last_column_pairs_ok,
    leq_bound_ok,
    leqleq_bound_ok,
    leqleq_equality_ok,
    row_low_edge_counts_ok,
    suffix_leqleq_equality_ok,
    support_check,
)
from twopage.analysis.structure import StructureViolation, check_structure, conforming_element

__all__ = [
    "StructureViolation",
    "check_structure",
    "column_low_edge_counts_ok",
    "conforming_element",
    "halving_check",
    "halving_entries",
    "last_column_pairs_ok",
    "leq_bound_ok",
    "leqleq_bound_ok",
    "leqleq_equality_ok",
    "row_low_edge_counts_ok",
    "spine_cycle",
    "suffix_leqleq_equality_ok",
    "support_check",
    "uncrossed_graph",
    "uncrossed_hamiltonian_cycles",
]
