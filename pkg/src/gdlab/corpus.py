"""Enumeration of small lattices with quasi-complements, up to isomorphism,
and seeded random frames."""
from __future__ import annotations

import random
from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations, permutations

from . import bitset
from .axioms import check_table2
from .frame import IMPROPER, Frame
from .lattice import FiniteLattice, NotALattice, validate_lattice
from .polarity import Polarity
from .varieties import ALL_VARIETIES, classify_variety


def element_names(n: int) -> list[str]:
    return ["0"] + [chr(ord("a") + i) for i in range(n - 2)] + ["1"]


def _closure(n: int, pairs) -> list[int] | None:
    """Upsets of the order on ``0..n-1`` generated by ``pairs`` (each ``i < j``),
    or None if the pairs are not already transitively closed."""
    up = [1 << i for i in range(n)]
    for i, j in pairs:
        up[i] |= 1 << j
    for i in range(n):
        for j in bitset.members(up[i]):
            if not bitset.subset(up[j], up[i]):
                return None
    return up


def _canonical_key(up: list[int]) -> tuple[int, ...]:
    """Lexicographically least upset table over relabelings of the middle elements."""
    n = len(up)
    mid = range(1, n - 1)
    best = None
    for perm in permutations(mid):
        p = [0, *perm, n - 1]
        new = [0] * n
        for i in range(n):
            new[p[i]] = bitset.from_indices(p[j] for j in bitset.members(up[i]))
        key = tuple(new)
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def lattices(n: int) -> tuple[FiniteLattice, ...]:
    """One representative of each isomorphism class of lattices with ``n`` elements.

    Middle elements ``1..n-2`` carry all naturally labeled strict orders
    (``i < j`` only when ``i < j`` as integers); bounds are adjoined and the
    lattice property is checked. Isomorphs are rejected by canonical key.
    """
    if n < 2:
        raise ValueError("lattices need at least two elements")
    mid = list(range(1, n - 1))
    slots = list(combinations(mid, 2))
    seen = {}
    for bits in range(1 << len(slots)):
        pairs = [slots[k] for k in range(len(slots)) if bits >> k & 1]
        full = pairs + [(0, i) for i in range(1, n)] + [(i, n - 1) for i in range(1, n - 1)]
        up = _closure(n, full)
        if up is None:
            continue
        key = _canonical_key(up)
        if key in seen:
            continue
        try:
            lat = validate_lattice(element_names(n), leq=full)
        except NotALattice:
            continue
        seen[key] = lat
    return tuple(seen[k] for k in sorted(seen))


def lattices_upto(max_n: int) -> list[FiniteLattice]:
    return [lat for n in range(2, max_n + 1) for lat in lattices(n)]


def automorphisms(lat: FiniteLattice) -> list[tuple[int, ...]]:
    n = lat.n
    mid = [a for a in range(n) if a not in (lat.bottom, lat.top)]
    out = []
    for perm in permutations(mid):
        p = list(range(n))
        for a, b in zip(mid, perm):
            p[a] = b
        if all(bitset.from_indices(p[b] for b in bitset.members(lat.up[a])) == lat.up[p[a]] for a in range(n)):
            out.append(tuple(p))
    return out


def minimal_nu_maps(lat: FiniteLattice) -> Iterator[tuple[int, ...]]:
    """All maps that are antitone, send 0 to 1 and turn joins into meets."""
    n = lat.n
    order = sorted(range(n), key=lambda a: bitset.count(lat.down[a]))
    nu = [None] * n

    def extend(k):
        if k == n:
            if all(nu[lat.join[a][b]] == lat.meet[nu[a]][nu[b]] for a in range(n) for b in range(a + 1, n)):
                yield tuple(nu)
            return
        a = order[k]
        if a == lat.bottom:
            cands = [lat.top]
        else:
            cands = range(n)
        for c in cands:
            ok = True
            for b in order[:k]:
                if lat.leq(b, a) and not lat.leq(c, nu[b]):
                    ok = False
                    break
                if lat.leq(a, b) and not lat.leq(nu[b], c):
                    ok = False
                    break
            if ok:
                nu[a] = c
                yield from extend(k + 1)
                nu[a] = None

    yield from extend(0)


def _is_canonical_nu(nu: tuple[int, ...], autos: list[tuple[int, ...]]) -> bool:
    n = len(nu)
    for p in autos:
        inv = [0] * n
        for a, b in enumerate(p):
            inv[b] = a
        conj = tuple(p[nu[inv[i]]] for i in range(n))
        if conj < nu:
            return False
    return True


def nu_maps(lat: FiniteLattice, tag: str = "M") -> list[tuple[int, ...]]:
    """Minimal quasi-complements on ``lat`` in the variety ``tag``, one per
    orbit under the automorphisms of ``lat``."""
    if tag not in ALL_VARIETIES:
        raise KeyError(f"unknown class {tag!r}")
    autos = automorphisms(lat)
    out = []
    for nu in minimal_nu_maps(lat):
        if not _is_canonical_nu(nu, autos):
            continue
        if tag != "M" and not classify_variety(lat.with_nu(nu)).member(tag):
            continue
        out.append(nu)
    return out


def corpus(max_size: int, tag: str = "M", min_size: int = 2) -> list[FiniteLattice]:
    """Every lattice with ``min_size..max_size`` elements and every class member ``nu``."""
    return [lat.with_nu(nu) for lat in lattices_upto(max_size) if lat.n >= min_size for nu in nu_maps(lat, tag)]


# random frames


def _random_polarity(rng: random.Random, max_x: int, max_y: int) -> Polarity:
    while True:
        nx = 1 if rng.random() < 0.05 else rng.randint(min(2, max_x), max_x)
        ny = 1 if rng.random() < 0.05 else rng.randint(min(2, max_y), max_y)
        density = rng.uniform(0.2, 0.8)
        rows = tuple(
            bitset.from_indices(y for y in range(ny) if rng.random() < density) for _ in range(nx)
        )
        pol = Polarity(nx, ny, rows)
        if pol.quasi_serial_witness() is None and pol.is_separated():
            return pol


def random_frame(rng: random.Random, max_x: int = 6, max_y: int = 6, tries: int = 10_000) -> Frame:
    """A random frame passing F0-F4, by rejection.

    A random monotone point operator (possibly improper) fixes ``S x`` as
    ``Gamma nu_hat(x)`` or the empty set, which settles F2 and F3.
    """
    for _ in range(tries):
        pol = _random_polarity(rng, max_x, max_y)
        order = sorted(range(pol.nx), key=lambda x: -bitset.count(pol.up_x[x]))
        nu_hat = [None] * pol.nx
        for i, x in enumerate(order):
            below = [z for z in order[:i] if pol.leq_x(z, x)]
            floor = [nu_hat[z] for z in below]
            if any(f is IMPROPER for f in floor):
                cands = []
            else:
                cands = [y for y in range(pol.ny) if all(pol.leq_y(f, y) for f in floor)]
            if cands and rng.random() < 0.85:
                nu_hat[x] = rng.choice(cands)
            else:
                nu_hat[x] = IMPROPER
        s = tuple(0 if v is IMPROPER else pol.gamma_y(v) for v in nu_hat)
        frame = Frame(pol, s)
        if check_table2(frame).all_passed():
            return frame
    raise RuntimeError("no frame found")


def random_frames(seed: int, count: int, max_x: int = 6, max_y: int = 6) -> list[Frame]:
    rng = random.Random(seed)
    return [random_frame(rng, max_x, max_y) for _ in range(count)]
