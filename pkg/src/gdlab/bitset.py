"""Integer bitset helpers. Subsets of an indexed carrier are plain ints."""
from __future__ import annotations

from collections.abc import Iterable, Iterator


def from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full(n: int) -> int:
    return (1 << n) - 1


def members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(members(mask))


def count(mask: int) -> int:
    return mask.bit_count()


def contains(mask: int, i: int) -> bool:
    return (mask >> i) & 1 == 1


def subset(a: int, b: int) -> bool:
    return a & ~b == 0


def all_subsets(n: int) -> range:
    return range(1 << n)


def intersection_closure(generators: Iterable[int], top: int) -> list[int]:
    """Moore family generated by ``generators`` inside ``top``, sorted."""
    family = {top}
    for g in generators:
        family |= {s & g for s in family}
    return sorted(family, key=lambda m: (count(m), m))
