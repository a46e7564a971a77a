"""
Canonical forms under the equivalence group.

The key of a drawing is the smallest .2pg body over its 4n images, comparing
B < R. Because every body of a fixed n has newlines in the same places, this is
the lexicographic minimum of the row-major color vectors, which is what is
computed here on packed bits.
"""

from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from twopage.core.exceptions import SizeMismatchError
from twopage.drawing.model import Drawing, serialize_body
from twopage.transform.group import GroupElement, all_elements, edge_action


@lru_cache(maxsize=64)
def orbit_tables(n: int) -> tuple[NDArray[np.intp], NDArray[np.bool_]]:
    """Stacked (4n, C(n,2)) source indices and flip masks of every group element."""
    actions = [edge_action(t) for t in all_elements(n)]
    sources = np.stack([s for s, _ in actions])
    flips = np.stack([f for _, f in actions])
    sources.setflags(write=False)
    flips.setflags(write=False)
    return sources, flips


def orbit_vectors(n: int, flat: NDArray[np.bool_]) -> NDArray[np.bool_]:
    """Row-major color vectors of all 4n images, in ``all_elements`` order."""
    sources, flips = orbit_tables(n)
    return flat[sources] ^ flips


def _packed(vectors: NDArray[np.bool_]) -> list[bytes]:
    packed = np.packbits(vectors, axis=-1)
    return [row.tobytes() for row in packed]


def packed_key(n: int, flat: NDArray[np.bool_]) -> bytes:
    """
    Compact canonical key: the packed bits of the smallest image.

    Orders exactly like ``canonical_key``; used for deduplication in bulk searches.
    """
    return min(_packed(orbit_vectors(n, flat)))


def canonical_index(d: Drawing) -> int:
    """Position in ``all_elements(n)`` of the first element reaching the minimum."""
    keys = _packed(orbit_vectors(d.n, d.flat()))
    best = min(keys)
    return keys.index(best)


def canonical_element(d: Drawing) -> GroupElement:
    """A group element mapping d onto its canonical form."""
    return all_elements(d.n)[canonical_index(d)]


def canonical_form(d: Drawing) -> Drawing:
    """The member of d's orbit with the smallest serialized body."""
    vectors = orbit_vectors(d.n, d.flat())
    return Drawing.from_flat(d.n, vectors[canonical_index(d)])


def canonical_key(d: Drawing) -> bytes:
    """
    Smallest serialized body over the orbit of d.

    Args:
        d: Any drawing

    Returns:
        ASCII body bytes (rows of B/R joined by newlines)
    """
    return serialize_body(canonical_form(d)).encode("ascii")


def key_from_packed(n: int, packed: bytes) -> bytes:
    """Body bytes for a ``packed_key`` value."""
    rows = np.unpackbits(np.frombuffer(packed, dtype=np.uint8))
    count = n * (n - 1) // 2
    return serialize_body(Drawing.from_flat(n, rows[:count].astype(bool))).encode("ascii")


def are_equivalent(d1: Drawing, d2: Drawing) -> bool:
    """True iff d2 is the image of d1 under some group element."""
    if d1.n != d2.n:
        raise SizeMismatchError(f"drawings have n={d1.n} and n={d2.n}")
    return packed_key(d1.n, d1.flat()) == packed_key(d2.n, d2.flat())


def orbit(d: Drawing) -> list[Drawing]:
    """Distinct images of d, sorted by serialized body."""
    vectors = orbit_vectors(d.n, d.flat())
    unique = np.unique(vectors, axis=0)
    return [Drawing.from_flat(d.n, row) for row in unique]


def orbit_size(d: Drawing) -> int:
    """Number of distinct images; always divides 4n."""
    return int(np.unique(orbit_vectors(d.n, d.flat()), axis=0).shape[0])


def stabilizer_size(d: Drawing) -> int:
    """Number of group elements fixing d."""
    vectors = orbit_vectors(d.n, d.flat())
    return int(np.count_nonzero(np.all(vectors == d.flat(), axis=1)))
