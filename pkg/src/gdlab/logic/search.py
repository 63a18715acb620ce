"""Bounded search for finite countermodels of a sequent within a variety."""
from __future__ import annotations

from dataclasses import dataclass

from ..corpus import lattices, nu_maps
from ..lattice import FiniteLattice
from ..varieties import SPECIFICITY
from .semantics import algebra_countermodel
from .syntax import Sequent


@dataclass(frozen=True)
class Countermodel:
    lattice: FiniteLattice
    valuation: dict[str, int]

    def named_valuation(self) -> dict[str, str]:
        return {k: self.lattice.names[v] for k, v in self.valuation.items()}


@dataclass(frozen=True)
class Exhausted:
    """No countermodel up to ``bound`` elements. This is not a proof of validity."""

    bound: int
    searched: int


def countermodel_search(s: Sequent, tag: str, bound: int) -> Countermodel | Exhausted:
    """Scan lattices by size, then in canonical order, then each class member ``nu``.

    The scan order is fixed, so the first countermodel found is reproducible.
    """
    if tag not in SPECIFICITY:
        raise KeyError(f"unknown class {tag!r}; expected one of {', '.join(reversed(SPECIFICITY))}")
    searched = 0
    for n in range(2, bound + 1):
        for lat in lattices(n):
            for nu in nu_maps(lat, tag):
                searched += 1
                alg = lat.with_nu(nu)
                v = algebra_countermodel(alg, s)
                if v is not None:
                    return Countermodel(alg, v)
    return Exhausted(bound, searched)
