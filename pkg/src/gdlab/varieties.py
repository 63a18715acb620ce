"""Law checks for the quasi-complement and membership in the varieties
M, G, INV, DMA, O, BA and the order-dual M-dual, G-dual."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import product

from .lattice import FiniteLattice

#: Most specific first, so the first member found names the smallest variety.
SPECIFICITY = ("BA", "DMA", "O", "INV", "G", "M")
ALL_VARIETIES = ("M", "G", "INV", "DMA", "O", "BA", "M_dual", "G_dual")


@dataclass(frozen=True)
class VarietyReport:
    antitone: bool
    normal: bool
    join_demorgan: bool
    galois: bool
    involution: bool
    explosion: bool
    distributive: bool
    antilogism: bool
    dual_normal: bool
    meet_demorgan: bool
    dual_galois: bool

    @property
    def M(self) -> bool:
        return self.antitone and self.normal and self.join_demorgan

    @property
    def G(self) -> bool:
        return self.M and self.galois

    @property
    def INV(self) -> bool:
        return self.G and self.involution

    @property
    def DMA(self) -> bool:
        return self.INV and self.distributive

    @property
    def O(self) -> bool:  # noqa: E743
        return self.INV and self.explosion

    @property
    def BA(self) -> bool:
        return self.INV and self.antilogism

    @property
    def M_dual(self) -> bool:
        return self.antitone and self.dual_normal and self.meet_demorgan

    @property
    def G_dual(self) -> bool:
        return self.M_dual and self.dual_galois

    def member(self, tag: str) -> bool:
        if tag not in ALL_VARIETIES:
            raise KeyError(f"unknown variety {tag!r}")
        return getattr(self, tag)

    def varieties(self) -> tuple[str, ...]:
        return tuple(t for t in ALL_VARIETIES if self.member(t))

    def most_specific(self) -> str | None:
        for tag in SPECIFICITY:
            if self.member(tag):
                return tag
        return None

    def as_dict(self) -> dict:
        out = asdict(self)
        out["varieties"] = list(self.varieties())
        return out


def classify_variety(lat: FiniteLattice) -> VarietyReport:
    """Check every law by exhaustive scan; no law is inferred from another."""
    nu = lat.require_nu()
    r = range(lat.n)
    leq, m, j = lat.leq, lat.meet, lat.join
    zero, one = lat.bottom, lat.top
    return VarietyReport(
        antitone=all(leq(nu[b], nu[a]) for a, b in product(r, r) if leq(a, b)),
        normal=nu[zero] == one,
        join_demorgan=all(nu[j[a][b]] == m[nu[a]][nu[b]] for a, b in product(r, r)),
        galois=all(leq(a, nu[nu[a]]) for a in r),
        involution=all(nu[nu[a]] == a for a in r),
        explosion=all(m[a][nu[a]] == zero for a in r),
        distributive=lat.is_distributive(),
        antilogism=all(
            leq(m[a][nu[c]], nu[b]) for a, b, c in product(r, r, r) if leq(m[a][b], c)
        ),
        dual_normal=nu[one] == zero,
        meet_demorgan=all(nu[m[a][b]] == j[nu[a]][nu[b]] for a, b in product(r, r)),
        dual_galois=all(leq(nu[nu[a]], a) for a in r),
    )


@dataclass(frozen=True)
class Implication:
    name: str
    hypothesis: bool
    conclusion: bool

    @property
    def passed(self) -> bool:
        return not self.hypothesis or self.conclusion


def verify_lemma1_consequences(lat: FiniteLattice) -> list[Implication]:
    """Re-derive the basic facts about antitone quasi-complements on this instance.

    Each entry is a material conditional over independently computed flags.
    A failed entry means the law checker is wrong, not that the instance is odd.
    """
    nu = lat.require_nu()
    rep = classify_variety(lat)
    r = range(lat.n)
    self_adjoint = all(lat.leq(a, nu[b]) == lat.leq(b, nu[a]) for a, b in product(r, r))
    anti = rep.antitone
    return [
        Implication("antitone: galois iff nu is self-adjoint", anti, rep.galois == self_adjoint),
        Implication("antitone and galois => normal", anti and rep.galois, rep.normal),
        Implication("antitone and galois => join De Morgan", anti and rep.galois, rep.join_demorgan),
        Implication("antitone and dual galois => meet De Morgan", anti and rep.dual_galois, rep.meet_demorgan),
        Implication("join De Morgan => antitone", rep.join_demorgan, anti),
        Implication("meet De Morgan => antitone", rep.meet_demorgan, anti),
        Implication("involution and distributive => DMA", anti and rep.involution and rep.distributive, rep.DMA),
        Implication("involution and explosion => O", anti and rep.involution and rep.explosion, rep.O),
        Implication(
            "involution and antilogism => distributive",
            anti and rep.involution and rep.antilogism,
            rep.distributive,
        ),
        Implication(
            "involution and antilogism => explosion",
            anti and rep.involution and rep.antilogism,
            rep.explosion,
        ),
        Implication("BA => DMA and O", rep.BA, rep.DMA and rep.O),
        Implication("O => INV", rep.O, rep.INV),
        Implication("DMA => INV", rep.DMA, rep.INV),
        Implication("INV => G", rep.INV, rep.G),
        Implication("G => M", rep.G, rep.M),
    ]
