"""Frames (X, |=, Y, S) for a quasi-complement and the relations derived from S."""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from . import bitset
from .polarity import Polarity, SortedRelation

#: Stand-in for the improper ideal (or filter) when a section of S or R is empty.
IMPROPER = None


class NuHatUndefined(ValueError):
    """Some section ``S x`` is neither empty nor of the form ``Gamma y``."""


@dataclass(frozen=True)
class Frame:
    """``s_vee[x]`` is the section ``S x`` as a mask over Y.

    ``r_wedge`` optionally carries an explicitly supplied ``R_wedge`` (rows ``x R``
    as masks over Y); otherwise it is derived from the point operator.
    """

    polarity: Polarity
    s_vee: tuple[int, ...]
    r_wedge: tuple[int, ...] | None = None

    def __post_init__(self):
        pol = self.polarity
        if len(self.s_vee) != pol.nx or any(s >> pol.ny for s in self.s_vee):
            raise ValueError("S sections do not fit the carriers")
        if self.r_wedge is not None and (
            len(self.r_wedge) != pol.nx or any(r >> pol.ny for r in self.r_wedge)
        ):
            raise ValueError("R_wedge rows do not fit the carriers")

    @classmethod
    def from_pairs(
        cls,
        pol: Polarity,
        s_pairs: Iterable[Sequence[int]],
        r_pairs: Iterable[Sequence[int]] | None = None,
    ) -> Frame:
        """``s_pairs`` are ``(y, x)`` with ``y S x``; ``r_pairs`` are ``(x, y)``."""
        s = [0] * pol.nx
        for y, x in s_pairs:
            if not (0 <= x < pol.nx and 0 <= y < pol.ny):
                raise ValueError(f"S pair ({y}, {x}) outside the carriers")
            s[x] |= 1 << y
        r = None
        if r_pairs is not None:
            rr = [0] * pol.nx
            for x, y in r_pairs:
                if not (0 <= x < pol.nx and 0 <= y < pol.ny):
                    raise ValueError(f"R pair ({x}, {y}) outside the carriers")
                rr[x] |= 1 << y
            r = tuple(rr)
        return cls(pol, tuple(s), r)

    @property
    def nx(self) -> int:
        return self.polarity.nx

    @property
    def ny(self) -> int:
        return self.polarity.ny

    def s_pairs(self) -> list[tuple[int, int]]:
        return [(y, x) for x in range(self.nx) for y in bitset.members(self.s_vee[x])]

    def s_relation(self) -> SortedRelation:
        return SortedRelation(("Y", "X"), frozenset(self.s_pairs()))

    def s_row(self, y: int) -> int:
        """``y S`` as a mask over X."""
        return bitset.from_indices(x for x in range(self.nx) if bitset.contains(self.s_vee[x], y))

    # incompatibility

    @cached_property
    def perp_of(self) -> tuple[int, ...]:
        """``perp_of[z] = {x | x perp z} = '(S z)``."""
        return tuple(self.polarity.prime_y(s) for s in self.s_vee)

    @cached_property
    def perp_rows(self) -> tuple[int, ...]:
        """``perp_rows[x] = {z | x perp z}``."""
        return tuple(
            bitset.from_indices(z for z in range(self.nx) if bitset.contains(self.perp_of[z], x))
            for x in range(self.nx)
        )

    def perp(self, x: int, z: int) -> bool:
        return bitset.contains(self.perp_of[z], x)

    def perp_pairs(self) -> list[tuple[int, int]]:
        return [(x, z) for z in range(self.nx) for x in bitset.members(self.perp_of[z])]

    def star(self, a: int) -> int:
        out = self.polarity.full_x
        for z in bitset.members(a):
            out &= self.perp_of[z]
        return out

    # point operators

    def nu_hat_of(self, x: int) -> int | None:
        """The ``y`` with ``S x = Gamma y``; ``IMPROPER`` when ``S x`` is empty."""
        s = self.s_vee[x]
        if s == 0:
            return IMPROPER
        y = self.polarity.point_of_gamma_y(s)
        if y is None:
            raise NuHatUndefined(f"S {self.polarity.x_names[x]} is not a closed element")
        return y

    @cached_property
    def nu_hat(self) -> tuple[int | None, ...]:
        return tuple(self.nu_hat_of(x) for x in range(self.nx))

    def has_nu_hat(self) -> bool:
        try:
            self.nu_hat
        except NuHatUndefined:
            return False
        return True

    @cached_property
    def derived_r_wedge(self) -> tuple[int, ...]:
        """``x R y`` iff ``y <= nu_hat(x)``; every ``y`` when ``nu_hat(x)`` is improper."""
        pol = self.polarity
        rows = []
        for x, y0 in enumerate(self.nu_hat):
            if y0 is IMPROPER:
                rows.append(pol.full_y)
            else:
                rows.append(bitset.from_indices(y for y in range(pol.ny) if pol.leq_y(y, y0)))
        return tuple(rows)

    @property
    def r_wedge_rows(self) -> tuple[int, ...]:
        return self.r_wedge if self.r_wedge is not None else self.derived_r_wedge

    @cached_property
    def r_wedge_cols(self) -> tuple[int, ...]:
        """``R y`` as masks over X."""
        rows = self.r_wedge_rows
        return tuple(
            bitset.from_indices(x for x in range(self.nx) if bitset.contains(rows[x], y))
            for y in range(self.ny)
        )

    def nu_tilde_of(self, y: int) -> int | None:
        """The ``x`` with ``R y = Gamma x``; ``IMPROPER`` when ``R y`` is empty."""
        r = self.r_wedge_cols[y]
        if r == 0:
            return IMPROPER
        x = self.polarity.point_of_gamma_x(r)
        if x is None:
            raise NuHatUndefined(f"R {self.polarity.y_names[y]} is not a closed element")
        return x

    @cached_property
    def stable_family(self):
        return self.polarity.stable_family


def derive_R_wedge(frame: Frame) -> SortedRelation:
    """The derived relation as a sorted relation of type ``(X; Y)``."""
    rows = frame.derived_r_wedge
    return SortedRelation(
        ("X", "Y"), frozenset((x, y) for x in range(frame.nx) for y in bitset.members(rows[x]))
    )
