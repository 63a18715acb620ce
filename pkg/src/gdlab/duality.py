"""Homomorphisms, frame morphisms and the unit/counit of the duality at finite scale."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import product

from . import bitset
from .axioms import (
    TABLE4,
    AxiomReport,
    AxiomResult,
    check_table4_objects,
    classify_frame,
)
from .canonical import CanonicalFrame, canonical_frame, representation_map
from .complex_algebra import AxiomPrereqFailed, build_complex_algebra
from .frame import Frame
from .lattice import FiniteLattice
from .varieties import classify_variety


class HomInvalid(ValueError):
    pass


class ImproperImage(ValueError):
    pass


class MorphismAxiomsFail(ValueError):
    pass


@dataclass(frozen=True)
class LatticeHom:
    source: FiniteLattice
    target: FiniteLattice
    map: tuple[int, ...]

    def problems(self) -> list[str]:
        s, t, h = self.source, self.target, self.map
        if len(h) != s.n or any(not 0 <= v < t.n for v in h):
            return ["map is not total into the target"]
        out = []
        if h[s.bottom] != t.bottom:
            out.append("bottom not preserved")
        if h[s.top] != t.top:
            out.append("top not preserved")
        for a, b in product(range(s.n), repeat=2):
            if s.leq(a, b) and not t.leq(h[a], h[b]):
                out.append(f"order not preserved at ({s.names[a]}, {s.names[b]})")
            if h[s.meet[a][b]] != t.meet[h[a]][h[b]]:
                out.append(f"meet not preserved at ({s.names[a]}, {s.names[b]})")
            if h[s.join[a][b]] != t.join[h[a]][h[b]]:
                out.append(f"join not preserved at ({s.names[a]}, {s.names[b]})")
        if s.nu is not None and t.nu is not None:
            for a in range(s.n):
                if h[s.nu[a]] != t.nu[h[a]]:
                    out.append(f"nu not preserved at {s.names[a]}")
        elif (s.nu is None) != (t.nu is None):
            out.append("only one side carries nu")
        return out

    def validate(self) -> LatticeHom:
        p = self.problems()
        if p:
            raise HomInvalid("; ".join(p[:5]))
        return self

    def is_bijective(self) -> bool:
        return len(set(self.map)) == self.target.n == self.source.n


def identity_hom(lat: FiniteLattice) -> LatticeHom:
    return LatticeHom(lat, lat, tuple(range(lat.n)))


def compose_homs(g: LatticeHom, h: LatticeHom) -> LatticeHom:
    """``g after h``."""
    return LatticeHom(h.source, g.target, tuple(g.map[v] for v in h.map))


@dataclass(frozen=True)
class FrameMorphism:
    """A sorted map ``(p, q)`` from ``source`` to ``target``."""

    source: Frame
    target: Frame
    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        if len(self.p) != self.source.nx or any(not 0 <= v < self.target.nx for v in self.p):
            raise ValueError("p is not a map between the X carriers")
        if len(self.q) != self.source.ny or any(not 0 <= v < self.target.ny for v in self.q):
            raise ValueError("q is not a map between the Y carriers")

    def preimage_x(self, a: int) -> int:
        return bitset.from_indices(i for i, v in enumerate(self.p) if bitset.contains(a, v))

    def preimage_y(self, b: int) -> int:
        return bitset.from_indices(i for i, v in enumerate(self.q) if bitset.contains(b, v))


def identity_morphism(frame: Frame) -> FrameMorphism:
    return FrameMorphism(frame, frame, tuple(range(frame.nx)), tuple(range(frame.ny)))


def compose_morphisms(second: FrameMorphism, first: FrameMorphism) -> FrameMorphism:
    return FrameMorphism(
        first.source,
        second.target,
        tuple(second.p[v] for v in first.p),
        tuple(second.q[v] for v in first.q),
    )


def check_morphism_axioms(pi: FrameMorphism) -> AxiomReport:
    """M1-M5, with the source playing the role of frame 2 and the target of frame 1."""
    s, t = pi.source, pi.target
    ps, pt = s.polarity, t.polarity
    p, q = pi.p, pi.q
    rep = AxiomReport()

    def fail(name, note, **w):
        rep.add(AxiomResult(name, False, w, note))

    w = next(((x, y) for x, y in product(range(s.nx), range(s.ny)) if ps.icomp(x, y) and not pt.icomp(p[x], q[y])), None)
    if w:
        fail("M1", "I not preserved", x_src=("Xs", w[0]), y_src=("Ys", w[1]))
    else:
        rep.add(AxiomResult("M1", True))

    w = next(
        (
            (x, y2)
            for x, y2 in product(range(t.nx), range(s.ny))
            if pt.icomp(x, q[y2]) and not any(pt.leq_x(x, p[x2]) and ps.icomp(x2, y2) for x2 in range(s.nx))
        ),
        None,
    )
    if w:
        fail("M2", "no source point above", x=("Xt", w[0]), y_src=("Ys", w[1]))
    else:
        rep.add(AxiomResult("M2", True))

    w = next(
        (
            (x2, y)
            for x2, y in product(range(s.nx), range(t.ny))
            if pt.icomp(p[x2], y) and not any(pt.leq_y(y, q[y2]) and ps.icomp(x2, y2) for y2 in range(s.ny))
        ),
        None,
    )
    if w:
        fail("M3", "no source co-point above", x_src=("Xs", w[0]), y=("Yt", w[1]))
    else:
        rep.add(AxiomResult("M3", True))

    w = next(
        (
            (z, v)
            for z, v in product(range(t.nx), range(s.ny))
            if bitset.contains(t.s_vee[z], q[v])
            and not any(pt.leq_x(z, p[x]) and bitset.contains(s.s_vee[x], v) for x in range(s.nx))
        ),
        None,
    )
    if w:
        fail("M4", "S not reflected", z=("Xt", w[0]), v_src=("Ys", w[1]))
    else:
        rep.add(AxiomResult("M4", True))

    fam = s.stable_family
    bad = next((("Xt", u) for u in range(t.nx) if pi.preimage_x(pt.gamma_x(u)) not in fam.closed_x), None)
    if bad is None:
        bad = next((("Yt", u) for u in range(t.ny) if pi.preimage_y(pt.gamma_y(u)) not in fam.closed_y), None)
    if bad:
        fail("M5", "preimage of a closed element is not closed", u=bad)
    else:
        rep.add(AxiomResult("M5", True))
    return rep


def dual_frame_morphism(h: LatticeHom, cf_source: CanonicalFrame | None = None, cf_target: CanonicalFrame | None = None) -> FrameMorphism:
    """For ``h: L2 -> L1`` return ``(p, q)`` from the frame of ``L1`` to that of ``L2``
    by inverse images."""
    h.validate()
    f1 = cf_target or canonical_frame(h.target)
    f2 = cf_source or canonical_frame(h.source)
    xi = {x: i for i, x in enumerate(f2.X)}
    yi = {y: i for i, y in enumerate(f2.Y)}

    def pre(mask):
        return bitset.from_indices(a for a in range(h.source.n) if bitset.contains(mask, h.map[a]))

    p, q = [], []
    for x in f1.X:
        k = xi.get(pre(x))
        if k is None:
            raise ImproperImage(f"inverse image of filter {bitset.to_list(x)} is not a proper filter")
        p.append(k)
    for y in f1.Y:
        k = yi.get(pre(y))
        if k is None:
            raise ImproperImage(f"inverse image of ideal {bitset.to_list(y)} is not a proper ideal")
        q.append(k)
    return FrameMorphism(f1.frame, f2.frame, tuple(p), tuple(q))


def inverse_image_hom(pi: FrameMorphism) -> LatticeHom:
    """``A -> p^-1(A)`` from the complex algebra of the target to that of the source."""
    rep = check_morphism_axioms(pi)
    if not rep.all_passed():
        raise MorphismAxiomsFail("morphism fails " + ", ".join(rep.failed()))
    ct = build_complex_algebra(pi.target)
    cs = build_complex_algebra(pi.source)
    fam_s = pi.source.stable_family
    images = []
    for a in ct.stables:
        pre = pi.preimage_x(a)
        if pre not in fam_s:
            raise MorphismAxiomsFail(f"preimage {bitset.to_list(pre)} is not stable")
        images.append(fam_s.index(pre))
    hom = LatticeHom(ct.lattice, cs.lattice, tuple(images))
    hom.validate()
    clo_t = pi.target.stable_family.clopen_x
    for a in ct.stables:
        if a in clo_t and pi.preimage_x(a) not in fam_s.clopen_x:
            raise MorphismAxiomsFail("a clopen element has a non-clopen preimage")
    return hom


@dataclass
class IsoReport:
    passed: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def unit_iso_check(lat: FiniteLattice, cf: CanonicalFrame | None = None) -> IsoReport:
    """``a -> X_a`` is an isomorphism onto the clopen algebra, which is all of the stable sets."""
    cf = cf or canonical_frame(lat)
    problems = []
    try:
        rmap = representation_map(cf)
    except AssertionError as exc:
        return IsoReport(False, [str(exc)])
    fam = cf.frame.stable_family
    if set(rmap.X_a) != fam.clopen_x:
        problems.append("image of a -> X_a is not the clopen family")
    if set(fam.clopen_x) != set(fam.stables):
        problems.append("clopen family is not all of the stable sets")
    return IsoReport(not problems, problems)


def clopen_algebra(frame: Frame) -> tuple[FiniteLattice, tuple[int, ...]]:
    """The clopen stable sets with intersection, closed union and star."""
    fam = frame.stable_family
    k = fam.sorted_clopens_x()
    index = {a: i for i, a in enumerate(k)}
    n = len(k)

    def idx(m, what):
        if m not in index:
            raise AxiomPrereqFailed(f"clopens not closed under {what}")
        return index[m]

    up = tuple(bitset.from_indices(j for j in range(n) if bitset.subset(k[i], k[j])) for i in range(n))
    meet = tuple(tuple(idx(k[i] & k[j], "intersection") for j in range(n)) for i in range(n))
    join = tuple(tuple(idx(fam.join(k[i], k[j]), "joins") for j in range(n)) for i in range(n))
    nu = tuple(idx(frame.star(a), "star") for a in k)
    names = tuple("{" + ",".join(frame.polarity.x_names[x] for x in bitset.members(a)) + "}" for a in k)
    if 0 not in index or frame.polarity.full_x not in index:
        raise AxiomPrereqFailed("empty set or X is not clopen")
    lat = FiniteLattice(names, up, meet, join, index[0], index[frame.polarity.full_x], nu)
    return lat, tuple(k)


def counit_iso_check(frame: Frame) -> IsoReport:
    """Compare ``frame`` with the canonical frame of its clopen algebra through
    ``lambda(x) = {A | x in A}`` and ``rho(y) = {A | A <= '{y}}``."""
    t4 = check_table4_objects(frame)
    if not t4.all_passed(TABLE4):
        raise AxiomPrereqFailed("frame fails " + ", ".join(t4.failed()))
    pol = frame.polarity
    lat, k = clopen_algebra(frame)
    cf = canonical_frame(lat)
    xi = {x: i for i, x in enumerate(cf.X)}
    yi = {y: i for i, y in enumerate(cf.Y)}
    problems = []
    lam, rho = [], []
    for x in range(pol.nx):
        f = bitset.from_indices(i for i, a in enumerate(k) if bitset.contains(a, x))
        if f not in xi:
            problems.append(f"lambda({pol.x_names[x]}) is not a proper filter")
            return IsoReport(False, problems)
        lam.append(xi[f])
    for y in range(pol.ny):
        g = bitset.from_indices(i for i, a in enumerate(k) if bitset.subset(a, pol.cols[y]))
        if g not in yi:
            problems.append(f"rho({pol.y_names[y]}) is not a proper ideal")
            return IsoReport(False, problems)
        rho.append(yi[g])
    if sorted(lam) != list(range(len(cf.X))):
        problems.append("lambda is not a bijection onto the filters")
    if sorted(rho) != list(range(len(cf.Y))):
        problems.append("rho is not a bijection onto the ideals")
    cpol = cf.polarity
    for x, y in product(range(pol.nx), range(pol.ny)):
        if pol.gal(x, y) != cpol.gal(lam[x], rho[y]):
            problems.append(f"Galois relation differs at ({pol.x_names[x]}, {pol.y_names[y]})")
        if bitset.contains(frame.s_vee[x], y) != bitset.contains(cf.frame.s_vee[lam[x]], rho[y]):
            problems.append(f"S differs at ({pol.y_names[y]}, {pol.x_names[x]})")
    return IsoReport(not problems, problems)


@dataclass
class RoundtripReport:
    variety: str | None
    frame_category: str
    expected_category: str | None
    double_dual_variety: str | None
    unit_iso: bool
    counit_iso: bool

    @property
    def passed(self) -> bool:
        return (
            self.frame_category == self.expected_category
            and self.double_dual_variety == self.variety
            and self.unit_iso
            and self.counit_iso
        )


def roundtrip(lat: FiniteLattice) -> RoundtripReport:
    variety = classify_variety(lat).most_specific()
    cf = canonical_frame(lat)
    cat = classify_frame(cf.frame)
    alg = build_complex_algebra(cf.frame)
    unit = unit_iso_check(lat, cf)
    try:
        counit = bool(counit_iso_check(cf.frame))
    except AxiomPrereqFailed:
        counit = False
    return RoundtripReport(
        variety,
        cat,
        None if variety is None else "nu" + variety,
        alg.variety.most_specific(),
        bool(unit),
        counit,
    )


def hom_from_names(source: FiniteLattice, target: FiniteLattice, mapping: dict[str, str] | Sequence[int]) -> LatticeHom:
    if isinstance(mapping, dict):
        m = tuple(target.index(mapping[n]) for n in source.names)
    else:
        m = tuple(int(v) for v in mapping)
    return LatticeHom(source, target, m)
