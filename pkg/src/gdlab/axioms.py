"""Axiom checkers for frames, frame categories and the correspondence results.

Every failed axiom carries a witness: a dict from role names to tagged values
``("X", i)``, ``("Y", i)`` for points and ``("X*", mask)``, ``("Y*", mask)``
for subsets. :func:`recheck_witness` re-evaluates the first-order form of the
axiom at the witness, independently of the scan that produced it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from . import bitset
from .frame import IMPROPER, Frame, NuHatUndefined

TABLE2 = ("F0", "F1", "F2", "F3", "F4")
TABLE4 = ("F0", "F1", "F2+", "F3", "F4", "F5", "F6", "F7")
TABLE3 = ("I1", "I2", "I3", "I4", "I5")
EXTRA = ("G", "O", "D")

CATEGORIES = ("nuBA", "nuDMA", "nuO", "nuINV", "nuG", "nuM")
CATEGORY_VARIETY = {"nuM": "M", "nuG": "G", "nuINV": "INV", "nuO": "O", "nuDMA": "DMA", "nuBA": "BA"}


class CorrespondenceViolation(AssertionError):
    """A direction of a proved equivalence failed on an instance: an internal bug."""


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: dict | None = None
    note: str = ""


@dataclass
class AxiomReport:
    results: dict[str, AxiomResult] = field(default_factory=dict)
    category: str | None = None

    def add(self, res: AxiomResult) -> None:
        self.results[res.name] = res

    def merge(self, other: AxiomReport) -> AxiomReport:
        for r in other.results.values():
            self.add(r)
        return self

    def ok(self, name: str) -> bool:
        return self.results[name].passed

    def all_passed(self, names=None) -> bool:
        names = self.results if names is None else names
        return all(self.results[n].passed for n in names)

    def failed(self) -> list[str]:
        return [n for n, r in self.results.items() if not r.passed]


def _pass(name: str) -> AxiomResult:
    return AxiomResult(name, True)


def _fail(name: str, note: str, **witness) -> AxiomResult:
    return AxiomResult(name, False, witness, note)


# base frame axioms F0-F4


def _f0(frame: Frame) -> AxiomResult:
    w = frame.polarity.quasi_serial_witness()
    if w is None:
        return _pass("F0")
    sort, i = w
    return _fail("F0", "point related to every point of the other sort", point=(sort, i))


def _f1(frame: Frame) -> AxiomResult:
    w = frame.polarity.separation_witness()
    if w is None:
        return _pass("F1")
    sort, a, b = w
    return _fail("F1", "distinct points with equal primes", u=(sort, a), v=(sort, b))


def _f2(frame: Frame) -> AxiomResult:
    closed = frame.stable_family.closed_y
    for x in range(frame.nx):
        if frame.s_vee[x] not in closed:
            return _fail("F2", "S x is not a closed element", x=("X", x), section=("Y*", frame.s_vee[x]))
    return _pass("F2")


def _downset_witness(frame: Frame, name: str) -> AxiomResult:
    pol = frame.polarity
    for y in range(frame.ny):
        row = frame.s_row(y)
        for x in bitset.members(row):
            for z in range(frame.nx):
                if pol.leq_x(z, x) and not bitset.contains(row, z):
                    return _fail(name, "y S is not a downset", y=("Y", y), x=("X", x), z=("X", z))
    return _pass(name)


def _f4(frame: Frame) -> AxiomResult:
    pol = frame.polarity
    for z in range(frame.nx):
        if not pol.is_stable(frame.perp_of[z]):
            return _fail("F4", "argument section not stable", z=("X", z), section=("X*", frame.perp_of[z]))
    for x in range(frame.nx):
        if not pol.is_stable(frame.perp_rows[x]):
            return _fail("F4", "result section not stable", x=("X", x), section=("X*", frame.perp_rows[x]))
    return _pass("F4")


def check_table2(frame: Frame) -> AxiomReport:
    rep = AxiomReport()
    for r in (_f0(frame), _f1(frame), _f2(frame), _downset_witness(frame, "F3"), _f4(frame)):
        rep.add(r)
    return rep


# strengthened F2 and the negation axioms F5-F7


def _f2_strong(frame: Frame) -> AxiomResult:
    pol = frame.polarity
    fam = frame.stable_family
    for z in range(frame.nx):
        s = frame.s_vee[z]
        if s not in fam.closed_y:
            return _fail("F2+", "S z is not a closed element", z=("X", z), section=("Y*", s))
        if pol.gamma_x(z) in fam.clopen_x and s not in fam.clopen_y:
            return _fail("F2+", "Gamma z clopen but S z is not", z=("X", z), section=("Y*", s))
    return _pass("F2+")


def _f5(frame: Frame) -> AxiomResult:
    fam = frame.stable_family
    for sort, clopens in (("X*", fam.sorted_clopens_x()), ("Y*", fam.sorted_clopens_y())):
        pool = fam.clopen_x if sort == "X*" else fam.clopen_y
        for a, b in combinations(clopens, 2):
            if a & b not in pool:
                return _fail("F5", "intersection of clopens is not clopen", a=(sort, a), b=(sort, b))
    return _pass("F5")


def _f6(frame: Frame) -> AxiomResult:
    fam = frame.stable_family
    pol = frame.polarity
    for sort, clopens, closed, top in (
        ("X*", fam.clopen_x, fam.closed_x, pol.full_x),
        ("Y*", fam.clopen_y, fam.closed_y, pol.full_y),
    ):
        generated = set(clopens)
        for c in clopens:
            generated |= {g & c for g in generated}
        for m in sorted(closed ^ generated):
            note = "closed element not an intersection of clopens" if m in closed else "intersection of clopens not closed"
            return _fail("F6", note, set=(sort, m))
    return _pass("F6")


def _f7(frame: Frame) -> AxiomResult:
    fam = frame.stable_family
    pol = frame.polarity
    if pol.full_x not in fam.clopen_x:
        return _fail("F7", "X is not a clopen element", set=("X*", pol.full_x))
    if pol.full_y not in fam.clopen_y:
        return _fail("F7", "Y is not a clopen element", set=("Y*", pol.full_y))
    for sort, clopens, n in (("X", fam.clopen_x, pol.nx), ("Y", fam.clopen_y, pol.ny)):
        for a, b in combinations(clopens, 2):
            if a & b not in clopens:
                return _fail("F7", "clopen basis not intersection-closed", a=(sort + "*", a), b=(sort + "*", b))
        for u, v in combinations(range(n), 2):
            if all(bitset.contains(c, u) == bitset.contains(c, v) for c in clopens):
                return _fail("F7", "clopen topology is not T0", u=(sort, u), v=(sort, v))
    return _pass("F7")


def check_table4_objects(frame: Frame) -> AxiomReport:
    rep = AxiomReport()
    for r in (
        _f0(frame),
        _f1(frame),
        _f2_strong(frame),
        _downset_witness(frame, "F3"),
        _f4(frame),
        _f5(frame),
        _f6(frame),
        _f7(frame),
    ):
        rep.add(r)
    return rep


# involution axioms I1-I5


def check_table3(frame: Frame) -> AxiomReport:
    """I1-I5 on the derived (or supplied) R_wedge. Raises if the point operator is undefined."""
    pol = frame.polarity
    fam = frame.stable_family
    nu_hat = frame.nu_hat
    rows = frame.r_wedge_rows
    cols = frame.r_wedge_cols
    rep = AxiomReport()
    if frame.r_wedge is not None and frame.r_wedge != frame.derived_r_wedge:
        x = next(i for i in range(frame.nx) if frame.r_wedge[i] != frame.derived_r_wedge[i])
        rep.add(_fail("R-consistency", "supplied R_wedge differs from the derived one", x=("X", x)))
    elif frame.r_wedge is not None:
        rep.add(_pass("R-consistency"))

    bad = next((y for y in range(frame.ny) if cols[y] not in fam.closed_x), None)
    rep.add(_pass("I1") if bad is None else _fail("I1", "R y is not a closed element", y=("Y", bad), section=("X*", cols[bad])))

    res = _pass("I2")
    for x in range(frame.nx):
        for y in bitset.members(rows[x]):
            v = next((v for v in range(frame.ny) if pol.leq_y(v, y) and not bitset.contains(rows[x], v)), None)
            if v is not None:
                res = _fail("I2", "x R is not a downset", x=("X", x), y=("Y", y), v=("Y", v))
                break
        if not res.passed:
            break
    rep.add(res)

    res = _pass("I3")
    dual_of = [pol.prime_x(cols[y]) for y in range(frame.ny)]
    for y in range(frame.ny):
        if not pol.is_costable(dual_of[y]):
            res = _fail("I3", "argument section not co-stable", y=("Y", y))
            break
    if res.passed:
        for v in range(frame.ny):
            sec = bitset.from_indices(y for y in range(frame.ny) if bitset.contains(dual_of[y], v))
            if not pol.is_costable(sec):
                res = _fail("I3", "result section not co-stable", v=("Y", v), section=("Y*", sec))
                break
    rep.add(res)

    def tilde(y):
        try:
            return frame.nu_tilde_of(y)
        except NuHatUndefined:
            return "undefined"

    res = _pass("I4")
    for x in range(frame.nx):
        y = nu_hat[x]
        if y is IMPROPER or tilde(y) != x:
            res = _fail("I4", "nu_tilde(nu_hat(x)) != x", x=("X", x))
            break
    rep.add(res)
    res = _pass("I5")
    for y in range(frame.ny):
        x = tilde(y)
        if x is IMPROPER or x == "undefined" or nu_hat[x] != y:
            res = _fail("I5", "nu_hat(nu_tilde(y)) != y", y=("Y", y))
            break
    rep.add(res)
    return rep


def _table3_or_fail(frame: Frame) -> AxiomReport:
    try:
        return check_table3(frame)
    except NuHatUndefined as exc:
        rep = AxiomReport()
        for n in TABLE3:
            rep.add(AxiomResult(n, False, {}, f"point operator undefined: {exc}"))
        return rep


# additional axioms


def check_symmetric(frame: Frame) -> AxiomResult:
    for x, z in frame.perp_pairs():
        if not frame.perp(z, x):
            return _fail("G", "incompatibility not symmetric", x=("X", x), z=("X", z))
    return _pass("G")


def check_irreflexive(frame: Frame) -> AxiomResult:
    for x in range(frame.nx):
        if frame.perp(x, x):
            return _fail("O", "x is incompatible with itself", x=("X", x))
    return _pass("O")


@dataclass(frozen=True)
class UpperBoundReport:
    d_holds: bool
    d_witness: dict | None
    distributive: bool
    distributivity_witness: tuple | None


def upper_bound_sections(frame: Frame) -> dict[tuple[int, int], int]:
    """``(y, z) -> {x | y R'_<= x z}``, the argument sections of the dual upper bound relation."""
    pol = frame.polarity
    out = {}
    for z in range(frame.nx):
        for x in range(frame.nx):
            dual = pol.prime_x(pol.gamma_x(x) & pol.gamma_x(z))
            for y in bitset.members(dual):
                out[(y, z)] = out.get((y, z), 0) | 1 << x
    return {(y, z): out.get((y, z), 0) for y in range(frame.ny) for z in range(frame.nx)}


def check_D(frame: Frame) -> AxiomResult:
    pol = frame.polarity
    for (y, z), sec in upper_bound_sections(frame).items():
        if not pol.is_stable(sec):
            return _fail("D", "section of the dual upper bound relation not stable", y=("Y", y), z=("X", z), section=("X*", sec))
    return _pass("D")


def distributivity_witness(frame: Frame) -> tuple[int, int, int] | None:
    fam = frame.stable_family
    st = fam.stables
    for a, b, c in product(st, repeat=3):
        if a & fam.join(b, c) != fam.join(a & b, a & c):
            return (a, b, c)
    return None


def upper_bound_relation(frame: Frame) -> UpperBoundReport:
    d = check_D(frame)
    w = distributivity_witness(frame)
    if d.passed and w is not None:
        raise CorrespondenceViolation("(D) holds but the stable sets are not distributive")
    return UpperBoundReport(d.passed, d.witness, w is None, w)


def frame_flags(frame: Frame) -> dict[str, bool]:
    inv = frame.has_nu_hat() and _table3_or_fail(frame).all_passed(TABLE3)
    return {
        "G": check_symmetric(frame).passed,
        "O": check_irreflexive(frame).passed,
        "D": check_D(frame).passed,
        "INV": inv,
    }


def full_report(frame: Frame) -> AxiomReport:
    rep = check_table2(frame)
    rep.merge(check_table4_objects(frame))
    rep.merge(_table3_or_fail(frame))
    rep.add(check_symmetric(frame))
    rep.add(check_irreflexive(frame))
    rep.add(check_D(frame))
    rep.category = category_of(rep)
    return rep


def category_of(rep: AxiomReport) -> str:
    if not rep.all_passed(TABLE4):
        return "none"
    g = rep.ok("G")
    inv = g and rep.all_passed(TABLE3)
    o, d = rep.ok("O"), rep.ok("D")
    if inv and o and d:
        return "nuBA"
    if inv and d:
        return "nuDMA"
    if inv and o:
        return "nuO"
    if inv:
        return "nuINV"
    if g:
        return "nuG"
    return "nuM"


def classify_frame(frame: Frame) -> str:
    return full_report(frame).category


# correspondence


@dataclass
class CorrespondenceReport:
    flags: dict[str, bool]
    violations: list[str]

    @property
    def passed(self) -> bool:
        return not self.violations


def check_correspondence(frame: Frame, strict: bool = False) -> CorrespondenceReport:
    """Check each direction of the symmetry, irreflexivity, involution and
    distributivity correspondences on this frame."""
    from .complex_algebra import triangle

    st = frame.stable_family.stables
    star = {a: frame.star(a) for a in st}
    sym = check_symmetric(frame).passed
    irr = check_irreflexive(frame).passed
    sub = all(bitset.subset(a, star[star[a]]) for a in st)
    tri = all(star[a] == triangle(frame, a) for a in st)
    disj = all(a & star[a] == 0 for a in st)
    inv_ax = frame.has_nu_hat() and _table3_or_fail(frame).all_passed(TABLE3)
    invol = all(star[star[a]] == a for a in st)
    d = check_D(frame).passed
    dist = distributivity_witness(frame) is None
    flags = {
        "symmetric": sym,
        "A<=A**": sub,
        "star=triangle": tri,
        "irreflexive": irr,
        "A&A*=0": disj,
        "I1-I5": inv_ax,
        "A**=A": invol,
        "D": d,
        "distributive": dist,
    }
    v = []
    for name, hyp, concl in (
        ("symmetric => A<=A**", sym, sub),
        ("A<=A** => star=triangle", sub, tri),
        ("star=triangle => A<=A**", tri, sub),
        ("A<=A** => symmetric", sub, sym),
        ("irreflexive => A&A*=0", irr, disj),
        ("A&A*=0 => irreflexive", disj, irr),
        ("symmetric and I1-I5 => A**=A", sym and inv_ax, invol),
        ("D => distributive", d, dist),
    ):
        if hyp and not concl:
            v.append(name)
    if strict and v:
        raise CorrespondenceViolation(", ".join(v))
    return CorrespondenceReport(flags, v)


# witness re-evaluation


def _pt(w, key):
    return w[key][1]


def recheck_witness(frame: Frame, res: AxiomResult) -> bool:
    """True when the first-order form of the axiom is indeed false at the witness."""
    pol = frame.polarity
    w = res.witness or {}
    n = res.name
    if n == "F0":
        sort, i = w["point"]
        if sort == "X":
            return all(pol.gal(i, y) for y in range(pol.ny))
        return all(pol.gal(x, i) for x in range(pol.nx))
    if n == "F1":
        sort, a = w["u"]
        b = _pt(w, "v")
        if sort == "X":
            return a != b and all(pol.gal(a, y) == pol.gal(b, y) for y in range(pol.ny))
        return a != b and all(pol.gal(x, a) == pol.gal(x, b) for x in range(pol.nx))
    if n in ("F2", "F2+"):
        key = "x" if "x" in w else "z"
        z = _pt(w, key)
        sec = {y for y in range(pol.ny) if bitset.contains(frame.s_vee[z], y)}
        gammas = [{v for v in range(pol.ny) if pol.leq_y(y, v)} for y in range(pol.ny)]
        closed = not sec or sec in gammas
        if not closed:
            return True
        if n == "F2+":
            fam = frame.stable_family
            return pol.gamma_x(z) in fam.clopen_x and frame.s_vee[z] not in fam.clopen_y
        return False
    if n == "F3":
        y, x, z = _pt(w, "y"), _pt(w, "x"), _pt(w, "z")
        return bitset.contains(frame.s_vee[x], y) and pol.leq_x(z, x) and not bitset.contains(frame.s_vee[z], y)
    if n == "F4":
        sec = w["section"][1]
        return pol.closure_x(sec) != sec
    if n == "G":
        x, z = _pt(w, "x"), _pt(w, "z")
        incompatible = lambda a, b: all(pol.gal(a, y) for y in range(pol.ny) if bitset.contains(frame.s_vee[b], y))  # noqa: E731
        return incompatible(x, z) and not incompatible(z, x)
    if n == "O":
        x = _pt(w, "x")
        return all(pol.gal(x, y) for y in range(pol.ny) if bitset.contains(frame.s_vee[x], y))
    if n == "D":
        sec = w["section"][1]
        y, z = _pt(w, "y"), _pt(w, "z")
        direct = bitset.from_indices(
            x
            for x in range(pol.nx)
            if all(
                pol.gal(u, y)
                for u in range(pol.nx)
                if pol.leq_x(x, u) and pol.leq_x(z, u)
            )
        )
        return direct == sec and pol.closure_x(sec) != sec
    if n == "F5":
        fam = frame.stable_family
        a, b = w["a"][1], w["b"][1]
        pool = fam.clopen_x if w["a"][0] == "X*" else fam.clopen_y
        return a in pool and b in pool and a & b not in pool
    if n == "F6":
        sort, m = w["set"]
        closed, clopens = _independent_clopens(frame, sort[0])
        generated = set()
        for r in range(1, len(clopens) + 1):
            for fam_ in combinations(clopens, r):
                acc = fam_[0]
                for c in fam_[1:]:
                    acc &= c
                generated.add(acc)
        return (m in closed) != (m in generated)
    if n == "F7":
        if "set" in w:
            sort, m = w["set"]
            return m not in _independent_clopens(frame, sort[0])[1]
        if "a" in w:
            sort, a = w["a"]
            return a & w["b"][1] not in _independent_clopens(frame, sort[0])[1]
        sort, u = w["u"]
        v = _pt(w, "v")
        return all(bitset.contains(c, u) == bitset.contains(c, v) for c in _independent_clopens(frame, sort)[1])
    if n in TABLE3:
        return not check_table3(frame).ok(n)
    raise KeyError(f"no recheck for axiom {n}")


def _independent_clopens(frame: Frame, sort: str) -> tuple[set[int], list[int]]:
    """Closed and clopen elements of one side, recomputed from the relation alone."""
    pol = frame.polarity
    if sort == "X":
        n, m = pol.nx, pol.ny
        related = pol.gal
    else:
        n, m = pol.ny, pol.nx
        related = lambda a, b: pol.gal(b, a)  # noqa: E731
    prime_of = [bitset.from_indices(b for b in range(m) if related(a, b)) for a in range(n)]
    closed = {
        bitset.from_indices(c for c in range(n) if bitset.subset(prime_of[a], prime_of[c])) for a in range(n)
    } | {0}
    opens = {bitset.from_indices(a for a in range(n) if related(a, b)) for b in range(m)} | {bitset.full(n)}
    return closed, sorted(closed & opens)
