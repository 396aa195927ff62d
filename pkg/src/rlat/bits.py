"""Subsets of lattice elements as integer bitmasks.

Bit ``i`` of a mask is set iff element ``i`` is a member.  Plain ints give
exact, hashable set algebra (``&``, ``|``, ``~``) for free, which is all the
filter and spectrum code needs.
"""

from typing import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield member indices in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def count(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def full(n: int) -> int:
    return (1 << n) - 1


def sort_key(mask: int):
    """Canonical ordering: by cardinality, then lexicographic on member lists."""
    return (count(mask), tuple(members(mask)))
