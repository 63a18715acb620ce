"""Polarities (X, |=, Y), their Galois connection, stable sets and sorted relations.

Subsets of X and of Y are bitmasks over the respective index ranges.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from . import bitset

SORTS = ("X", "Y")


class SortMismatch(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


def _other(sort: str) -> str:
    return "Y" if sort == "X" else "X"


@dataclass(frozen=True)
class Polarity:
    """``rows[x]`` is the mask of all ``y`` with ``x |= y``."""

    nx: int
    ny: int
    rows: tuple[int, ...]
    x_names: tuple[str, ...] = ()
    y_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ValueError("both carriers must be nonempty")
        if len(self.rows) != self.nx or any(r >> self.ny for r in self.rows):
            raise ValueError("relation rows do not fit the carriers")
        if not self.x_names:
            object.__setattr__(self, "x_names", tuple(f"x{i}" for i in range(self.nx)))
        if not self.y_names:
            object.__setattr__(self, "y_names", tuple(f"y{i}" for i in range(self.ny)))
        if len(self.x_names) != self.nx or len(self.y_names) != self.ny:
            raise ValueError("name lists do not match carrier sizes")

    @classmethod
    def from_pairs(cls, nx: int, ny: int, pairs: Iterable[Sequence[int]], x_names=(), y_names=()) -> Polarity:
        rows = [0] * nx
        for x, y in pairs:
            if not (0 <= x < nx and 0 <= y < ny):
                raise IndexOutOfRange(f"pair ({x}, {y}) outside the carriers")
            rows[x] |= 1 << y
        return cls(nx, ny, tuple(rows), tuple(x_names), tuple(y_names))

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """``cols[y]`` is ``'{y}``."""
        return tuple(
            bitset.from_indices(x for x in range(self.nx) if bitset.contains(self.rows[x], y))
            for y in range(self.ny)
        )

    @property
    def full_x(self) -> int:
        return bitset.full(self.nx)

    @property
    def full_y(self) -> int:
        return bitset.full(self.ny)

    def gal(self, x: int, y: int) -> bool:
        return bitset.contains(self.rows[x], y)

    def icomp(self, x: int, y: int) -> bool:
        return not self.gal(x, y)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.nx) for y in bitset.members(self.rows[x])]

    # Galois connection

    def prime_x(self, u: int) -> int:
        """``U'`` for ``U`` a subset of X."""
        out = self.full_y
        for x in bitset.members(u):
            out &= self.rows[x]
        return out

    def prime_y(self, v: int) -> int:
        """``'V`` for ``V`` a subset of Y."""
        out = self.full_x
        for y in bitset.members(v):
            out &= self.cols[y]
        return out

    def prime(self, sort: str, mask: int) -> int:
        return self.prime_x(mask) if sort == "X" else self.prime_y(mask)

    def closure_x(self, u: int) -> int:
        return self.prime_y(self.prime_x(u))

    def closure_y(self, v: int) -> int:
        return self.prime_x(self.prime_y(v))

    def closure(self, sort: str, mask: int) -> int:
        return self.closure_x(mask) if sort == "X" else self.closure_y(mask)

    def is_stable(self, u: int) -> bool:
        return self.closure_x(u) == u

    def is_costable(self, v: int) -> bool:
        return self.closure_y(v) == v

    # specialization

    @cached_property
    def up_x(self) -> tuple[int, ...]:
        """``up_x[x]`` is the set of ``z`` with ``x <= z`` in the specialization preorder."""
        r = self.rows
        return tuple(
            bitset.from_indices(z for z in range(self.nx) if bitset.subset(r[x], r[z])) for x in range(self.nx)
        )

    @cached_property
    def up_y(self) -> tuple[int, ...]:
        c = self.cols
        return tuple(
            bitset.from_indices(v for v in range(self.ny) if bitset.subset(c[y], c[v])) for y in range(self.ny)
        )

    def leq_x(self, x: int, z: int) -> bool:
        return bitset.subset(self.rows[x], self.rows[z])

    def leq_y(self, y: int, v: int) -> bool:
        return bitset.subset(self.cols[y], self.cols[v])

    def gamma_x(self, x: int) -> int:
        """``Gamma x = {x}''``."""
        return self.up_x[x]

    def gamma_y(self, y: int) -> int:
        return self.up_y[y]

    def is_upset_x(self, u: int) -> bool:
        return all(bitset.subset(self.up_x[x], u) for x in bitset.members(u))

    def is_downset_x(self, u: int) -> bool:
        comp = self.full_x & ~u
        return self.is_upset_x(comp)

    def is_upset_y(self, v: int) -> bool:
        return all(bitset.subset(self.up_y[y], v) for y in bitset.members(v))

    def is_downset_y(self, v: int) -> bool:
        return self.is_upset_y(self.full_y & ~v)

    def separation_witness(self) -> tuple[str, int, int] | None:
        """A pair of distinct but specialization-equivalent points, if any."""
        for x, z in product(range(self.nx), repeat=2):
            if x < z and self.rows[x] == self.rows[z]:
                return ("X", x, z)
        for y, v in product(range(self.ny), repeat=2):
            if y < v and self.cols[y] == self.cols[v]:
                return ("Y", y, v)
        return None

    def is_separated(self) -> bool:
        return self.separation_witness() is None

    def point_of_gamma_x(self, u: int) -> int | None:
        """The ``x`` with ``Gamma x = u``; the least one if the frame is not separated."""
        for x in range(self.nx):
            if self.up_x[x] == u:
                return x
        return None

    def point_of_gamma_y(self, v: int) -> int | None:
        for y in range(self.ny):
            if self.up_y[y] == v:
                return y
        return None

    def point_of_open_x(self, u: int) -> int | None:
        """The ``y`` with ``'{y} = u``."""
        for y in range(self.ny):
            if self.cols[y] == u:
                return y
        return None

    def point_of_open_y(self, v: int) -> int | None:
        """The ``x`` with ``{x}' = v``."""
        for x in range(self.nx):
            if self.rows[x] == v:
                return x
        return None

    def quasi_serial_witness(self) -> tuple[str, int] | None:
        """A point related to every point of the other sort, violating quasi-seriality of I."""
        for x in range(self.nx):
            if self.rows[x] == self.full_y:
                return ("X", x)
        for y in range(self.ny):
            if self.cols[y] == self.full_x:
                return ("Y", y)
        return None

    @cached_property
    def stable_family(self) -> StableFamily:
        return StableFamily.of(self)


@dataclass(frozen=True)
class StableFamily:
    """Galois stable subsets of X and co-stable subsets of Y.

    ``stables[i]`` and ``costables[i]`` correspond under priming, so the two
    lists are reverse-ordered by inclusion with respect to one another.
    """

    base: Polarity
    stables: tuple[int, ...]
    costables: tuple[int, ...]
    _index: dict = field(repr=False, compare=False, hash=False, default_factory=dict)

    @classmethod
    def of(cls, pol: Polarity) -> StableFamily:
        stables = tuple(bitset.intersection_closure(pol.cols, pol.full_x))
        costables = tuple(pol.prime_x(a) for a in stables)
        fam = cls(pol, stables, costables)
        fam._index.update({a: i for i, a in enumerate(stables)})
        return fam

    def __len__(self) -> int:
        return len(self.stables)

    def index(self, a: int) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise KeyError(f"{bitset.to_list(a)} is not a stable set") from None

    def __contains__(self, a: int) -> bool:
        return a in self._index

    @property
    def bottom(self) -> int:
        return self.stables[0]

    @property
    def top(self) -> int:
        return self.base.full_x

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return self.base.closure_x(a | b)

    def join_all(self, sets: Iterable[int]) -> int:
        u = 0
        for a in sets:
            u |= a
        return self.base.closure_x(u)

    @cached_property
    def costable_set(self) -> frozenset[int]:
        return frozenset(self.costables)

    # closed / open elements, with the empty set and the full carrier adjoined

    @cached_property
    def closed_x(self) -> frozenset[int]:
        return frozenset(self.base.up_x) | {0}

    @cached_property
    def open_x(self) -> frozenset[int]:
        return frozenset(self.base.cols) | {self.base.full_x}

    @cached_property
    def clopen_x(self) -> frozenset[int]:
        return self.closed_x & self.open_x

    @cached_property
    def closed_y(self) -> frozenset[int]:
        return frozenset(self.base.up_y) | {0}

    @cached_property
    def open_y(self) -> frozenset[int]:
        return frozenset(self.base.rows) | {self.base.full_y}

    @cached_property
    def clopen_y(self) -> frozenset[int]:
        return self.closed_y & self.open_y

    def sorted_clopens_x(self) -> list[int]:
        return sorted(self.clopen_x, key=lambda m: (bitset.count(m), m))

    def sorted_clopens_y(self) -> list[int]:
        return sorted(self.clopen_y, key=lambda m: (bitset.count(m), m))


@dataclass(frozen=True)
class SortedRelation:
    """An (n+1)-ary relation ``u R u1 ... un`` with sort type ``(result; args)``.

    ``sorts[0]`` is the result sort; each entry is ``"X"`` or ``"Y"``.
    """

    sorts: tuple[str, ...]
    tuples: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if len(self.sorts) < 2 or any(s not in SORTS for s in self.sorts):
            raise SortMismatch(f"bad sort signature {self.sorts}")
        for t in self.tuples:
            if len(t) != len(self.sorts):
                raise SortMismatch(f"tuple {t} does not have arity {len(self.sorts)}")

    @property
    def arity(self) -> int:
        return len(self.sorts) - 1

    def check_sorts(self, pol: Polarity) -> None:
        sizes = {"X": pol.nx, "Y": pol.ny}
        for t in self.tuples:
            for s, v in zip(self.sorts, t):
                if not 0 <= v < sizes[s]:
                    raise SortMismatch(f"tuple {t} does not respect sorts {self.sorts}")


def _carrier(pol: Polarity, sort: str) -> range:
    return range(pol.nx if sort == "X" else pol.ny)


def section(rel: SortedRelation, holed: Sequence[int | None]) -> int:
    """Bitmask of values filling the single ``None`` slot of ``holed``.

    Slot 0 is the result position, so ``section(S, (None, x))`` is ``S x``.
    """
    if len(holed) != len(rel.sorts):
        raise IndexOutOfRange(f"expected {len(rel.sorts)} slots, got {len(holed)}")
    holes = [i for i, v in enumerate(holed) if v is None]
    if len(holes) != 1:
        raise IndexOutOfRange("exactly one slot must be left open")
    k = holes[0]
    out = 0
    for t in rel.tuples:
        if all(t[i] == v for i, v in enumerate(holed) if i != k):
            out |= 1 << t[k]
    return out


def galois_dual(pol: Polarity, rel: SortedRelation) -> SortedRelation:
    """``u R' v`` iff every ``w`` with ``w R v`` is Galois-related to ``u``."""
    rel.check_sorts(pol)
    result_sort = rel.sorts[0]
    args = rel.sorts[1:]
    new_sorts = (_other(result_sort),) + args
    tuples = set()
    for v in product(*(_carrier(pol, s) for s in args)):
        sec = section(rel, (None, *v))
        dual = pol.prime(result_sort, sec)
        tuples.update((u, *v) for u in bitset.members(dual))
    return SortedRelation(new_sorts, frozenset(tuples))
