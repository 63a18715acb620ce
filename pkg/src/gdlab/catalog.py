"""Named small lattices used as fixtures, CLI examples and search seeds."""
from __future__ import annotations

from collections.abc import Callable, Sequence

from .lattice import FiniteLattice, validate_lattice


def chain(n: int, nu: Sequence[int] | None = None) -> FiniteLattice:
    """``0 < 1 < ... < n-1``; element names are ``0``, ``a``, ``b``, ... , ``1``."""
    if n < 2:
        raise ValueError("a chain needs at least two elements")
    names = ["0"] + [chr(ord("a") + i) for i in range(n - 2)] + ["1"]
    return validate_lattice(names, covers=[(i, i + 1) for i in range(n - 1)], nu=nu)


def reversal(n: int) -> FiniteLattice:
    """Chain with the order-reversing involution ``i -> n-1-i``."""
    return chain(n, [n - 1 - i for i in range(n)])


def boolean(k: int) -> FiniteLattice:
    """Subsets of ``{0..k-1}`` indexed by bitmask, with set complement."""
    n = 1 << k
    names = ["{" + ",".join(str(i) for i in range(k) if m >> i & 1) + "}" for m in range(n)]
    covers = [(m, m | 1 << i) for m in range(n) for i in range(k) if not m >> i & 1]
    return validate_lattice(names, covers=covers, nu=[(n - 1) ^ m for m in range(n)])


def pentagon(nu: Sequence[int] | None = None) -> FiniteLattice:
    """N5 on ``0, a, b, c, 1`` with ``0 < a < c < 1`` and ``0 < b < 1``."""
    return validate_lattice(["0", "a", "b", "c", "1"], covers=[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)], nu=nu)


def diamond(nu: Sequence[int] | None = None) -> FiniteLattice:
    """M3 on ``0, a, b, c, 1``."""
    return validate_lattice(
        ["0", "a", "b", "c", "1"], covers=[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], nu=nu
    )


def trivial_nu(lat: FiniteLattice) -> FiniteLattice:
    """``nu 0 = 1`` and ``nu x = 0`` otherwise."""
    return lat.with_nu([lat.top if a == lat.bottom else lat.bottom for a in range(lat.n)])


def constant_top_nu(lat: FiniteLattice) -> FiniteLattice:
    return lat.with_nu([lat.top] * lat.n)


def benzene() -> FiniteLattice:
    """The six-element ortholattice O6: two disjoint 2-chains ``a < b`` and
    ``c < d`` between 0 and 1, with ``a <-> d`` and ``b <-> c``."""
    return validate_lattice(
        ["0", "a", "b", "c", "d", "1"],
        covers=[(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)],
        nu=[5, 4, 3, 2, 1, 0],
    )


def de_morgan_chain4() -> FiniteLattice:
    """4-chain ``0 < a < b < 1`` with ``a <-> b``: a De Morgan (Kleene) algebra, not an ortholattice."""
    return reversal(4)


def kleene_chain3() -> FiniteLattice:
    return reversal(3)


def three_chain_m_not_g() -> FiniteLattice:
    """3-chain with ``0, a -> 1`` and ``1 -> 0``: minimal but ``a <= nu nu a`` fails."""
    return chain(3, [2, 2, 0])


CATALOG: dict[str, Callable[[], FiniteLattice]] = {
    "chain2": lambda: reversal(2),
    "chain3-kleene": kleene_chain3,
    "chain3-trivial": lambda: trivial_nu(chain(3)),
    "chain3-m": three_chain_m_not_g,
    "chain4-demorgan": de_morgan_chain4,
    "chain4-top": lambda: constant_top_nu(chain(4)),
    "bool2": lambda: boolean(2),
    "bool3": lambda: boolean(3),
    "n5-trivial": lambda: trivial_nu(pentagon()),
    "m3-trivial": lambda: trivial_nu(diamond()),
    "benzene": benzene,
}


def named(name: str) -> FiniteLattice:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown catalog lattice {name!r}; known: {', '.join(CATALOG)}") from None

