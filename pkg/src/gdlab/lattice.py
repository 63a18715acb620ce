"""Finite bounded lattices with a unary quasi-complementation operator."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import bitset


class LatticeError(ValueError):
    """Base class for invalid lattice input."""


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NoBounds(LatticeError):
    pass


class NuNotTotal(LatticeError):
    pass


class MissingNu(LatticeError):
    pass


@dataclass(frozen=True)
class FiniteLattice:
    """An immutable finite bounded lattice on the indices ``0..n-1``.

    ``up[a]`` is the bitmask of all ``b`` with ``a <= b``. ``meet`` and ``join``
    are full tables; ``nu`` is an optional total unary map.
    """

    names: tuple[str, ...]
    up: tuple[int, ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    nu: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(
            bitset.from_indices(a for a in range(self.n) if bitset.contains(self.up[a], b))
            for b in range(self.n)
        )

    def leq(self, a: int, b: int) -> bool:
        return bitset.contains(self.up[a], b)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def join_all(self, elements) -> int:
        acc = self.bottom
        for e in elements:
            acc = self.join[acc][e]
        return acc

    def meet_all(self, elements) -> int:
        acc = self.top
        for e in elements:
            acc = self.meet[acc][e]
        return acc

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
        out = []
        for a in range(self.n):
            above = self.up[a] & ~(1 << a)
            for b in bitset.members(above):
                between = above & self.down[b] & ~(1 << b)
                if not between:
                    out.append((a, b))
        return out

    def with_nu(self, nu: Sequence[int] | None) -> FiniteLattice:
        if nu is not None:
            nu = tuple(int(v) for v in nu)
            if len(nu) != self.n or any(not 0 <= v < self.n for v in nu):
                raise NuNotTotal(f"nu must map each of the {self.n} elements into the carrier")
        return FiniteLattice(self.names, self.up, self.meet, self.join, self.bottom, self.top, nu)

    def require_nu(self) -> tuple[int, ...]:
        if self.nu is None:
            raise MissingNu("lattice has no nu operator")
        return self.nu

    def is_distributive(self) -> bool:
        m, j = self.meet, self.join
        r = range(self.n)
        return all(m[a][j[b][c]] == j[m[a][b]][m[a][c]] for a in r for b in r for c in r)


def validate_lattice(
    elements: Sequence[str] | int,
    leq: Sequence[Sequence[int]] | None = None,
    covers: Sequence[Sequence[int]] | None = None,
    nu: Sequence[int] | None = None,
) -> FiniteLattice:
    """Build a :class:`FiniteLattice` from order pairs or cover pairs.

    Pairs ``(i, j)`` mean ``i <= j``. The reflexive-transitive closure is taken,
    bounds are inferred, and meet/join tables are computed from the order.
    """
    if isinstance(elements, int):
        names = tuple(str(i) for i in range(elements))
    else:
        names = tuple(str(e) for e in elements)
    n = len(names)
    if n == 0:
        raise NotAPoset("carrier is empty")
    if len(set(names)) != n:
        raise NotAPoset("element names must be distinct")
    pairs = list(leq or []) + list(covers or [])
    up = [1 << a for a in range(n)]
    for pair in pairs:
        a, b = (int(v) for v in pair)
        if not (0 <= a < n and 0 <= b < n):
            raise NotAPoset(f"pair {list(pair)} out of range")
        up[a] |= 1 << b
    for k in range(n):
        for i in range(n):
            if bitset.contains(up[i], k):
                up[i] |= up[k]
    for a in range(n):
        for b in bitset.members(up[a]):
            if b != a and bitset.contains(up[b], a):
                raise NotAPoset(f"{names[a]} and {names[b]} lie on a cycle")
    everything = bitset.full(n)
    down = [bitset.from_indices(a for a in range(n) if bitset.contains(up[a], b)) for b in range(n)]
    bottoms = [a for a in range(n) if up[a] == everything]
    tops = [a for a in range(n) if down[a] == everything]
    if not bottoms or not tops:
        raise NoBounds("lattice needs both a least and a greatest element")
    bottom, top = bottoms[0], tops[0]
    if bottom == top:
        raise NoBounds("degenerate lattice with 0 = 1")

    def bound(sets: list[int], a: int, b: int) -> int | None:
        common = sets[a] & sets[b]
        for c in bitset.members(common):
            if sets[c] == common:
                return c
        return None

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        g = bound(down, a, b)
        lub = bound(up, a, b)
        if g is None:
            raise NotALattice(f"{names[a]} and {names[b]} have no greatest lower bound")
        if lub is None:
            raise NotALattice(f"{names[a]} and {names[b]} have no least upper bound")
        meet[a][b] = g
        join[a][b] = lub
    lat = FiniteLattice(
        names, tuple(up), tuple(map(tuple, meet)), tuple(map(tuple, join)), bottom, top, None
    )
    return lat.with_nu(nu)


def dualize(lat: FiniteLattice) -> FiniteLattice:
    """The order dual: ``a <= b`` in the result iff ``b <= a`` in ``lat``."""
    return FiniteLattice(lat.names, lat.down, lat.join, lat.meet, lat.top, lat.bottom, lat.nu)


def relabel(lat: FiniteLattice, perm: Sequence[int], names: Sequence[str] | None = None) -> FiniteLattice:
    """Move element ``a`` to index ``perm[a]``."""
    n = lat.n
    inv = [0] * n
    for a, p in enumerate(perm):
        inv[p] = a
    up = tuple(bitset.from_indices(perm[b] for b in bitset.members(lat.up[inv[i]])) for i in range(n))
    meet = tuple(tuple(perm[lat.meet[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
    join = tuple(tuple(perm[lat.join[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
    nu = None if lat.nu is None else tuple(perm[lat.nu[inv[i]]] for i in range(n))
    if names is None:
        names = tuple(lat.names[inv[i]] for i in range(n))
    return FiniteLattice(tuple(names), up, meet, join, perm[lat.bottom], perm[lat.top], nu)
