"""
Pydantic models for k-edge profiles and K4 censuses.
"""

from __future__ import annotations

from math import comb

from pydantic import BaseModel, Field, model_validator


class KEdgeProfile(BaseModel):
    """Histogram of folded k-values with its prefix and double-prefix sums."""

    n: int = Field(..., ge=3, description="Number of vertices")
    e: list[int] = Field(..., description="E_k for k = 0 .. floor(n/2)-1")
    e_leq: list[int] = Field(..., description="E_<=k, prefix sums of e")
    e_leqleq: list[int] = Field(..., description="E_<=<=k, prefix sums of e_leq")

    @classmethod
    def from_counts(cls, n: int, counts: list[int]) -> KEdgeProfile:
        """Derive both prefix tables from the histogram."""
        e_leq: list[int] = []
        e_leqleq: list[int] = []
        running = 0
        double = 0
        for value in counts:
            running += value
            double += running
            e_leq.append(running)
            e_leqleq.append(double)
        return cls(n=n, e=list(counts), e_leq=e_leq, e_leqleq=e_leqleq)

    @model_validator(mode="after")
    def check_totals(self) -> KEdgeProfile:
        """Every edge is a k-edge for exactly one folded k."""
        expected = self.n // 2
        if not len(self.e) == len(self.e_leq) == len(self.e_leqleq) == expected:
            raise ValueError(f"profile for n={self.n} needs {expected} entries")
        if sum(self.e) != comb(self.n, 2):
            raise ValueError(f"k-edge counts sum to {sum(self.e)}, expected {comb(self.n, 2)}")
        return self

    def leq(self, k: int) -> int:
        """E_<=k, zero for negative k."""
        return self.e_leq[k] if k >= 0 else 0

    def leqleq(self, k: int) -> int:
        """E_<=<=k, zero for negative k."""
        return self.e_leqleq[k] if k >= 0 else 0

    def as_kv(self) -> list[tuple[str, str]]:
        """Flat key/value pairs for scripting output."""
        return [
            ("n", str(self.n)),
            ("e", " ".join(map(str, self.e))),
            ("e_leq", " ".join(map(str, self.e_leq))),
            ("e_leqleq", " ".join(map(str, self.e_leqleq))),
        ]


class K4Census(BaseModel):
    """
    Induced K4 subdrawings by type.

    Crossing quadruples are reported together in ``t_b``; ``t_c`` stays 0.
    """

    t_a: int = Field(..., ge=0, description="Quadruples without a crossing")
    t_b: int = Field(..., ge=0, description="Quadruples with a crossing (types B and C)")
    t_c: int = Field(default=0, ge=0, description="Not separated from t_b")
    separations: int = Field(..., ge=0, description="Triples {pq, r, s} with opposite orientations")

    @property
    def crossing(self) -> int:
        return self.t_b + self.t_c

    @property
    def total(self) -> int:
        return self.t_a + self.t_b + self.t_c
