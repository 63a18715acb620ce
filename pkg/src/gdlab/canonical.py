"""The canonical frame of a finite lattice with a minimal quasi-complement."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import bitset
from .frame import IMPROPER, Frame
from .lattice import FiniteLattice
from .polarity import Polarity
from .varieties import classify_variety


class NotMinimalVariety(ValueError):
    pass


class RepresentationFailure(AssertionError):
    pass


def _is_filter(lat: FiniteLattice, s: int) -> bool:
    if not bitset.contains(s, lat.top) or bitset.contains(s, lat.bottom):
        return False
    members = bitset.to_list(s)
    if any(not bitset.subset(lat.up[a], s) for a in members):
        return False
    return all(bitset.contains(s, lat.meet[a][b]) for a in members for b in members)


def _is_ideal(lat: FiniteLattice, s: int) -> bool:
    if not bitset.contains(s, lat.bottom) or bitset.contains(s, lat.top):
        return False
    members = bitset.to_list(s)
    if any(not bitset.subset(lat.down[a], s) for a in members):
        return False
    return all(bitset.contains(s, lat.join[a][b]) for a in members for b in members)


def _key(m: int) -> tuple[int, int]:
    return (bitset.count(m), m)


def filters(lat: FiniteLattice) -> list[int]:
    """All proper filters, as masks over the carrier, by exhaustive subset scan."""
    return sorted((s for s in bitset.all_subsets(lat.n) if _is_filter(lat, s)), key=_key)


def ideals(lat: FiniteLattice) -> list[int]:
    return sorted((s for s in bitset.all_subsets(lat.n) if _is_ideal(lat, s)), key=_key)


def _set_name(lat: FiniteLattice, s: int) -> str:
    return "{" + ",".join(lat.names[a] for a in bitset.members(s)) + "}"


@dataclass(frozen=True)
class CanonicalFrame:
    """Proper filters ``X``, proper ideals ``Y`` and the canonical relation ``S``.

    ``x_of[a]`` is the index of the principal filter of ``a`` (``None`` for the
    bottom), ``y_of[a]`` that of the principal ideal (``None`` for the top).
    """

    source: FiniteLattice
    X: tuple[int, ...]
    Y: tuple[int, ...]
    frame: Frame
    nu_hat: tuple[int | None, ...]
    x_of: tuple[int | None, ...]
    y_of: tuple[int | None, ...]

    @property
    def polarity(self) -> Polarity:
        return self.frame.polarity

    @cached_property
    def X_a(self) -> tuple[int, ...]:
        """``X_a`` as a mask over the filters, per lattice element."""
        return tuple(
            bitset.from_indices(i for i, x in enumerate(self.X) if bitset.contains(x, a))
            for a in range(self.source.n)
        )

    @cached_property
    def Y_a(self) -> tuple[int, ...]:
        return tuple(
            bitset.from_indices(j for j, y in enumerate(self.Y) if bitset.contains(y, a))
            for a in range(self.source.n)
        )


def _generated_ideal(lat: FiniteLattice, gens) -> int | None:
    """Principal ideal of the join of ``gens``; ``None`` when that join is the top."""
    j = lat.join_all(gens)
    return None if j == lat.top else lat.down[j]


def canonical_frame(lat: FiniteLattice) -> CanonicalFrame:
    nu = lat.require_nu()
    rep = classify_variety(lat)
    if not rep.M:
        missing = [n for n in ("antitone", "normal", "join_demorgan") if not getattr(rep, n)]
        raise NotMinimalVariety("minimal quasi-complement laws fail: " + ", ".join(missing))
    X = tuple(filters(lat))
    Y = tuple(ideals(lat))
    rows = tuple(bitset.from_indices(j for j, y in enumerate(Y) if x & y) for x in X)
    pol = Polarity(
        len(X), len(Y), rows, tuple(_set_name(lat, x) for x in X), tuple(_set_name(lat, y) for y in Y)
    )
    y_index = {y: j for j, y in enumerate(Y)}
    nu_hat = []
    s_vee = []
    for x in X:
        gen = _generated_ideal(lat, (nu[a] for a in bitset.members(x)))
        if gen is None:
            nu_hat.append(IMPROPER)
            s_vee.append(0)
        else:
            nu_hat.append(y_index[gen])
            s_vee.append(bitset.from_indices(j for j, y in enumerate(Y) if bitset.subset(gen, y)))
    # pointwise form: y S x iff nu a lies in y for every a in x
    for i, x in enumerate(X):
        direct = bitset.from_indices(
            j for j, y in enumerate(Y) if all(bitset.contains(y, nu[a]) for a in bitset.members(x))
        )
        if direct != s_vee[i]:
            raise RepresentationFailure(f"two definitions of S disagree at {_set_name(lat, x)}")
    x_index = {x: i for i, x in enumerate(X)}
    x_of = tuple(x_index.get(lat.up[a]) for a in range(lat.n))
    y_of = tuple(y_index.get(lat.down[a]) for a in range(lat.n))
    return CanonicalFrame(lat, X, Y, Frame(pol, tuple(s_vee)), tuple(nu_hat), x_of, y_of)


@dataclass(frozen=True)
class RepresentationMap:
    X_a: tuple[int, ...]
    Y_a: tuple[int, ...]


def representation_map(cf: CanonicalFrame) -> RepresentationMap:
    """``a -> X_a`` and ``a -> Y^a``, verified to be an isomorphism onto the stable sets."""
    lat = cf.source
    nu = lat.require_nu()
    pol = cf.polarity
    fr = cf.frame
    Xa, Ya = cf.X_a, cf.Y_a
    problems = []
    r = range(lat.n)
    for a in r:
        if a != lat.bottom and Xa[a] != pol.gamma_x(cf.x_of[a]):
            problems.append(f"X_{lat.names[a]} is not Gamma of the principal filter")
        if a != lat.top and Ya[a] != pol.gamma_y(cf.y_of[a]):
            problems.append(f"Y^{lat.names[a]} is not Gamma of the principal ideal")
        if fr.star(Xa[a]) != Xa[nu[a]]:
            problems.append(f"(X_{lat.names[a]})* != X_nu{lat.names[a]}")
        for b in r:
            if Xa[lat.meet[a][b]] != Xa[a] & Xa[b]:
                problems.append(f"X of meet {lat.names[a]},{lat.names[b]}")
            if Xa[lat.join[a][b]] != pol.closure_x(Xa[a] | Xa[b]):
                problems.append(f"X of join {lat.names[a]},{lat.names[b]}")
            if lat.leq(a, b) != bitset.subset(Xa[a], Xa[b]):
                problems.append(f"order not reflected at {lat.names[a]},{lat.names[b]}")
    if Xa[lat.bottom] != 0:
        problems.append("X_0 is not empty")
    if Xa[lat.top] != pol.full_x:
        problems.append("X_1 is not X")
    if len(set(Xa)) != lat.n:
        problems.append("a -> X_a is not injective")
    if set(Xa) != set(pol.stable_family.stables):
        problems.append("a -> X_a does not reach every stable set")
    if problems:
        raise RepresentationFailure("; ".join(problems[:5]))
    return RepresentationMap(Xa, Ya)


@dataclass(frozen=True)
class FsatReport:
    passed: bool
    fsat_witness: int | None
    filter_witness: tuple[int, int] | None


def fsat_check(cf: CanonicalFrame) -> FsatReport:
    """Compare the saturation by open elements with ``U''`` for every ``U`` in X,
    and check that stable sets are closed under intersection of filters."""
    pol = cf.polarity
    opens = pol.cols
    bad = None
    for u in bitset.all_subsets(pol.nx):
        sat = pol.full_x
        for f in opens:
            if bitset.subset(u, f):
                sat &= f
        if sat != pol.closure_x(u):
            bad = u
            break
    fw = None
    index = {x: i for i, x in enumerate(cf.X)}
    for a in pol.stable_family.stables:
        members = bitset.to_list(a)
        for i in members:
            for j in members:
                k = index.get(cf.X[i] & cf.X[j])
                # the intersection of two proper filters is again a proper filter
                if k is None or not bitset.contains(a, k):
                    fw = (a, i)
                    break
            if fw:
                break
        if fw:
            break
        # upward closed under inclusion
        for i in members:
            for k, x in enumerate(cf.X):
                if bitset.subset(cf.X[i], x) and not bitset.contains(a, k):
                    fw = (a, i)
                    break
            if fw:
                break
        if fw:
            break
    return FsatReport(bad is None and fw is None, bad, fw)
