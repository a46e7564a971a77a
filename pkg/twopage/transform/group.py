"""
The equivalence group of a 2-page drawing: h^a o g^b o f^i.

f moves vertex 1 to the far right of the spine (relabel k -> k-1, 1 -> n),
g reverses the spine (k -> n+1-k) and h swaps the pages of every edge except
the spine edges and (1, n). Composites act right to left.
"""

from __future__ import annotations

import re
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from twopage.core.exceptions import ParameterRangeError
from twopage.drawing.model import Drawing, convention_mask, upper_indices


class GroupElement(BaseModel):
    """h^a o g^b o f^i acting on drawings with n vertices."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3)
    a: int = Field(default=0, ge=0, le=1, description="Exponent of h")
    b: int = Field(default=0, ge=0, le=1, description="Exponent of g")
    i: int = Field(default=0, description="Exponent of f, reduced mod n")

    @model_validator(mode="before")
    @classmethod
    def reduce_exponents(cls, data):
        if isinstance(data, dict) and "n" in data:
            data = dict(data)
            data["a"] = data.get("a", 0) % 2
            data["b"] = data.get("b", 0) % 2
            data["i"] = data.get("i", 0) % data["n"]
        return data

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(n=n)

    @classmethod
    def f(cls, n: int, power: int = 1) -> GroupElement:
        return cls(n=n, i=power)

    @classmethod
    def g(cls, n: int) -> GroupElement:
        return cls(n=n, b=1)

    @classmethod
    def h(cls, n: int) -> GroupElement:
        return cls(n=n, a=1)

    @property
    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0 and self.i == 0

    def __matmul__(self, other: GroupElement) -> GroupElement:
        return compose(self, other)

    def __str__(self) -> str:
        parts = []
        if self.a:
            parts.append("h")
        if self.b:
            parts.append("g")
        if self.i:
            parts.append("f" if self.i == 1 else f"f^{self.i}")
        return " ".join(parts) if parts else "id"

    def vertex_map(self) -> NDArray[np.intp]:
        """0-based image of every vertex under g^b o f^i."""
        v = (np.arange(self.n) - self.i) % self.n
        if self.b:
            v = self.n - 1 - v
        return v


def _check_same_n(t1: GroupElement, t2: GroupElement) -> None:
    if t1.n != t2.n:
        raise ParameterRangeError(f"cannot combine elements for n={t1.n} and n={t2.n}")


def compose(t1: GroupElement, t2: GroupElement) -> GroupElement:
    """
    t1 o t2 (t2 acts first).

    Uses f^i o g = g o f^(-i) and that h commutes with both, so
    h^a1 g^b1 f^i1 o h^a2 g^b2 f^i2 = h^(a1+a2) g^(b1+b2) f^((-1)^b2 i1 + i2).
    """
    _check_same_n(t1, t2)
    sign = -1 if t2.b else 1
    return GroupElement(n=t1.n, a=t1.a + t2.a, b=t1.b + t2.b, i=sign * t1.i + t2.i)


def inverse(t: GroupElement) -> GroupElement:
    """(h^a g^b f^i)^-1 = f^-i g^b h^a = h^a g^b f^((-1)^(b+1) i)."""
    return GroupElement(n=t.n, a=t.a, b=t.b, i=t.i if t.b else -t.i)


@lru_cache(maxsize=64)
def all_elements(n: int) -> tuple[GroupElement, ...]:
    """The 4n elements ordered by (a, b, i)."""
    if n < 3:
        raise ParameterRangeError(f"group needs n >= 3, got {n}")
    return tuple(
        GroupElement(n=n, a=a, b=b, i=i) for a in (0, 1) for b in (0, 1) for i in range(n)
    )


_TOKEN = re.compile(r"^(id|h|g|f)(?:\^(-?\d+))?$")


def parse_element(text: str, n: int) -> GroupElement:
    """
    Parse a word such as ``"h g f^3"`` or ``"f^-1 g"``; the rightmost symbol acts first.

    Raises:
        ParameterRangeError: Unknown symbol
    """
    result = GroupElement.identity(n)
    tokens = text.replace("o", " ").replace("*", " ").split()
    for token in tokens:
        match = _TOKEN.match(token)
        if match is None:
            raise ParameterRangeError(f"unknown group symbol {token!r}")
        symbol, power_text = match.groups()
        power = int(power_text) if power_text is not None else 1
        if symbol == "id":
            step = GroupElement.identity(n)
        elif symbol == "f":
            step = GroupElement.f(n, power)
        elif symbol == "g":
            step = GroupElement(n=n, b=power)
        else:
            step = GroupElement(n=n, a=power)
        result = compose(result, step)
    return result


@lru_cache(maxsize=4096)
def edge_action(t: GroupElement) -> tuple[NDArray[np.intp], NDArray[np.bool_]]:
    """
    Row-major edge permutation and flip mask of an element.

    The image of a flat color vector x is ``x[source] ^ flip``.
    """
    n = t.n
    rows, cols = upper_indices(n)
    position = np.zeros((n, n), dtype=np.intp)
    position[rows, cols] = np.arange(rows.size)

    perm = t.vertex_map()
    pr, pc = perm[rows], perm[cols]
    dest = position[np.minimum(pr, pc), np.maximum(pr, pc)]
    source = np.empty_like(dest)
    source[dest] = np.arange(dest.size)

    if t.a:
        flip = ~convention_mask(n)[rows, cols]
    else:
        flip = np.zeros(rows.size, dtype=bool)
    source.setflags(write=False)
    flip.setflags(write=False)
    return source, flip


def apply(d: Drawing, t: GroupElement) -> Drawing:
    """
    Image of a drawing under a group element.

    Args:
        d: Drawing on n vertices
        t: Element for the same n

    Returns:
        New drawing; d is untouched
    """
    if t.n != d.n:
        raise ParameterRangeError(f"element for n={t.n} applied to drawing with n={d.n}")
    if t.is_identity:
        return d
    source, flip = edge_action(t)
    return Drawing.from_flat(d.n, d.flat()[source] ^ flip)
