"""Image operators generated by the frame relations and the complex algebra of stable sets."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import bitset
from .frame import Frame
from .lattice import FiniteLattice
from .varieties import VarietyReport, classify_variety


class RWedgeUnavailable(ValueError):
    pass


class AxiomPrereqFailed(ValueError):
    pass


def eta_S(frame: Frame, u: int) -> int:
    """Union of the sections ``S x`` over ``x`` in ``u``."""
    out = 0
    for x in bitset.members(u):
        out |= frame.s_vee[x]
    return out


def eta_bar_S(frame: Frame, a: int) -> int:
    return frame.polarity.closure_y(eta_S(frame, a))


def eta_vee(frame: Frame, a: int) -> int:
    """``(eta_S A)'``, which is the star of ``A``."""
    return frame.polarity.prime_y(eta_S(frame, a))


def zeta_S(frame: Frame, b: int) -> int:
    """Right residual of ``eta_bar_S``: all ``x`` with ``eta_bar_S(Gamma x)`` inside ``b``."""
    pol = frame.polarity
    return bitset.from_indices(
        x for x in range(pol.nx) if bitset.subset(eta_bar_S(frame, pol.gamma_x(x)), b)
    )


def triangle(frame: Frame, c: int) -> int:
    return zeta_S(frame, frame.polarity.prime_x(c))


def _r_wedge_cols(frame: Frame) -> tuple[int, ...]:
    try:
        return frame.r_wedge_cols
    except ValueError as exc:
        raise RWedgeUnavailable(str(exc)) from None


def eta_R(frame: Frame, v: int) -> int:
    cols = _r_wedge_cols(frame)
    out = 0
    for y in bitset.members(v):
        out |= cols[y]
    return out


def eta_bar_R(frame: Frame, b: int) -> int:
    return frame.polarity.closure_x(eta_R(frame, b))


def eta_wedge(frame: Frame, a: int) -> int:
    return eta_bar_R(frame, frame.polarity.prime_x(a))


@dataclass(frozen=True)
class ComplexAlgebra:
    """Stable sets of a frame as a lattice, with star and triangle tables.

    Element ``i`` of :attr:`lattice` is the stable set ``stables[i]``.
    """

    frame: Frame
    stables: tuple[int, ...]
    lattice: FiniteLattice
    triangle: tuple[int, ...]
    wedge: tuple[int, ...] | None

    @property
    def star(self) -> tuple[int, ...]:
        return self.lattice.nu

    @cached_property
    def variety(self) -> VarietyReport:
        return classify_variety(self.lattice)

    def index(self, a: int) -> int:
        return self.frame.stable_family.index(a)

    def set_names(self) -> tuple[str, ...]:
        names = self.frame.polarity.x_names
        return tuple("{" + ",".join(names[x] for x in bitset.members(a)) + "}" for a in self.stables)


def stable_lattice(frame: Frame, nu: tuple[int, ...] | None = None, names=None) -> FiniteLattice:
    """The lattice of stable sets with meets as intersections and joins as closed unions."""
    fam = frame.stable_family
    st = fam.stables
    n = len(st)
    up = tuple(bitset.from_indices(j for j in range(n) if bitset.subset(st[i], st[j])) for i in range(n))
    meet = tuple(tuple(fam.index(st[i] & st[j]) for j in range(n)) for i in range(n))
    join = tuple(tuple(fam.index(fam.join(st[i], st[j])) for j in range(n)) for i in range(n))
    if names is None:
        xn = frame.polarity.x_names
        names = tuple("{" + ",".join(xn[x] for x in bitset.members(a)) + "}" for a in st)
    return FiniteLattice(tuple(names), up, meet, join, fam.index(fam.bottom), fam.index(fam.top), nu)


def build_complex_algebra(frame: Frame, check: bool = True) -> ComplexAlgebra:
    """Assemble the complex algebra; with ``check`` the frame must pass F0-F4.

    The soundness mapping is asserted: symmetric incompatibility gives the
    Galois law, irreflexive incompatibility gives explosion, and (D) gives
    distributivity of the stable sets.
    """
    from .axioms import check_table2, frame_flags

    if check:
        rep = check_table2(frame)
        if not rep.all_passed():
            raise AxiomPrereqFailed("frame fails " + ", ".join(rep.failed()))
    fam = frame.stable_family
    st = fam.stables
    star = tuple(fam.index(frame.star(a)) for a in st)
    tri = tuple(fam.index(triangle(frame, a)) for a in st)
    wedge = None
    if frame.has_nu_hat():
        try:
            wedge = tuple(fam.index(eta_wedge(frame, a)) for a in st)
        except (RWedgeUnavailable, KeyError):
            wedge = None
    alg = ComplexAlgebra(frame, st, stable_lattice(frame, star), tri, wedge)
    if check:
        flags = frame_flags(frame)
        v = alg.variety
        problems = []
        if not v.M:
            problems.append("star is not a minimal quasi-complement")
        if flags["G"] and not v.galois:
            problems.append("symmetric incompatibility without A <= A**")
        if flags["O"] and not v.explosion:
            problems.append("irreflexive incompatibility without A & A* = 0")
        if flags["D"] and not v.distributive:
            problems.append("(D) without distributivity")
        if flags["G"] and flags["INV"] and not v.involution:
            problems.append("(G) and (INV) without involution")
        if problems:
            from .axioms import CorrespondenceViolation

            raise CorrespondenceViolation("; ".join(problems))
    return alg


@dataclass(frozen=True)
class LawCheck:
    name: str
    passed: bool
    witness: tuple | None = None


def operator_law_scan(frame: Frame) -> list[LawCheck]:
    """Full scans of the join/meet distribution, residuation and Galois laws.

    Joins over arbitrary families reduce to binary joins plus the empty join
    on a finite lattice, which is what is scanned here.
    """
    pol = frame.polarity
    fam = frame.stable_family
    st = fam.stables
    cst = fam.costables
    out = []

    def first(gen):
        for w in gen:
            return w
        return None

    ebs = {a: eta_bar_S(frame, a) for a in st}
    stars = {a: frame.star(a) for a in st}
    out.append(LawCheck("eta_bar_S preserves the empty join", ebs[fam.bottom] == pol.closure_y(0), None))
    w = first(
        (a, b)
        for a, b in product(st, st)
        if ebs[fam.join(a, b)] != pol.closure_y(ebs[a] | ebs[b])
    )
    out.append(LawCheck("eta_bar_S distributes over joins", w is None, w))
    out.append(LawCheck("star of the empty join is X", stars[fam.bottom] == pol.full_x, None))
    w = first((a, b) for a, b in product(st, st) if stars[fam.join(a, b)] != stars[a] & stars[b])
    out.append(LawCheck("star co-distributes over joins", w is None, w))
    w = first(a for a in st if eta_vee(frame, a) != stars[a])
    out.append(LawCheck("eta_vee equals star", w is None, w))
    zs = {b: zeta_S(frame, b) for b in cst}
    w = first(
        (a, b) for a, b in product(st, cst) if bitset.subset(ebs[a], b) != bitset.subset(a, zs[b])
    )
    out.append(LawCheck("eta_bar_S is residuated by zeta_S", w is None, w))
    tri = {c: triangle(frame, c) for c in st}
    w = first(
        (a, c) for a, c in product(st, st) if bitset.subset(a, tri[c]) != bitset.subset(c, stars[a])
    )
    out.append(LawCheck("star and triangle form a Galois connection", w is None, w))
    w = first(a for a in st if not pol.is_stable(stars[a]) or not pol.is_stable(tri[a]))
    out.append(LawCheck("star and triangle return stable sets", w is None, w))
    return out


def wedge_law_scan(frame: Frame) -> list[LawCheck]:
    """Laws of the R_wedge side; requires the point operator to exist."""
    fam = frame.stable_family
    st = fam.stables
    ew = {a: eta_wedge(frame, a) for a in st}
    checks = []
    w = next(
        ((a, b) for a, b in product(st, st) if ew[a & b] != fam.join(ew[a], ew[b])), None
    )
    checks.append(LawCheck("eta_wedge co-distributes over meets", w is None, w))
    checks.append(LawCheck("eta_wedge of X is bottom", ew[fam.top] == fam.bottom, None))
    return checks
