"""
Pydantic models for enumeration and search results.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from twopage.drawing.model import Drawing


class ClassReport(BaseModel):
    """Optimal colorings found by an exhaustive search, grouped into equivalence classes."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int = Field(..., ge=3)
    z: int = Field(..., ge=0, description="Z(n)")
    minimum: int = Field(..., ge=0, description="Smallest crossing count seen")
    method: Literal["brute", "template"]
    search_space: int = Field(..., ge=1, description="Colorings examined")
    optimal_colorings: int = Field(..., ge=0, description="Colorings with Z(n) crossings")
    classes: int = Field(..., ge=0, description="Distinct canonical keys")
    keys: list[bytes] = Field(default_factory=list, description="Canonical bodies, sorted")
    masks: list[int] = Field(default_factory=list, description="Free-entry mask per representative")
    representatives: list[Drawing] = Field(default_factory=list)
    jobs: int = Field(default=1, ge=1)
    elapsed: float = Field(default=0.0, ge=0, description="Wall time in seconds; not reported")

    @model_validator(mode="after")
    def check_counts(self) -> ClassReport:
        if self.classes > self.optimal_colorings:
            raise ValueError("more classes than optimal colorings")
        if not len(self.keys) == len(self.masks) == len(self.representatives) == self.classes:
            raise ValueError("one key, mask and representative per class")
        return self

    def as_kv(self) -> list[tuple[str, str]]:
        """Deterministic key/value pairs; wall time is left out."""
        pairs = [
            ("n", str(self.n)),
            ("z", str(self.z)),
            ("method", self.method),
            ("search_space", str(self.search_space)),
            ("minimum", str(self.minimum)),
            ("optimal_colorings", str(self.optimal_colorings)),
            ("classes", str(self.classes)),
        ]
        for index, (key, mask) in enumerate(zip(self.keys, self.masks, strict=True), start=1):
            pairs.append((f"class.{index}.key", key.hex()))
            pairs.append((f"class.{index}.mask", str(mask)))
        return pairs


SearchStatus = Literal["found", "budget_exhausted", "none_exist"]


class CoverageSearchResult(BaseModel):
    """Outcome of a search for a drawing with few <=k-edges."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int = Field(..., ge=4)
    k: int = Field(..., ge=0)
    threshold: int = Field(..., description="3 C(k+2, 2); a hit has fewer <=k-edges")
    status: SearchStatus
    candidates: int = Field(..., ge=0, description="Colorings evaluated")
    budget: int = Field(..., ge=1)
    seed: int
    phase: Literal["random", "descent", "systematic"] | None = None
    leq: int | None = Field(default=None, description="E_<=k of the returned drawing")
    drawing: Drawing | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"

    def as_kv(self) -> list[tuple[str, str]]:
        pairs = [
            ("n", str(self.n)),
            ("k", str(self.k)),
            ("threshold", str(self.threshold)),
            ("status", self.status),
            ("candidates", str(self.candidates)),
            ("budget", str(self.budget)),
            ("seed", str(self.seed)),
        ]
        if self.phase is not None:
            pairs.append(("phase", self.phase))
        if self.leq is not None:
            pairs.append(("leq", str(self.leq)))
        return pairs
