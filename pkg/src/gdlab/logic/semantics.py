"""Algebraic and relational interpretation of formulas, and validity by exhaustive valuation."""
from __future__ import annotations

import os
from collections.abc import Iterator, Sequence
from itertools import product

from .. import bitset
from ..frame import Frame
from ..lattice import FiniteLattice
from .syntax import And, Bot, Formula, Neg, Or, Sequent, Top, Var

DEFAULT_MAX_VALUATIONS = 10**6


class TooManyValuations(RuntimeError):
    pass


class UnboundVariable(KeyError):
    pass


class InterpretationMismatch(AssertionError):
    pass


def max_valuations() -> int:
    raw = os.environ.get("GDLAB_MAX_VALUATIONS")
    return int(raw) if raw else DEFAULT_MAX_VALUATIONS


def _valuations(names: Sequence[str], values: Sequence, cap: int | None) -> Iterator[dict]:
    cap = max_valuations() if cap is None else cap
    total = len(values) ** len(names)
    if total > cap:
        raise TooManyValuations(f"{total} valuations exceed the cap of {cap}")
    for combo in product(values, repeat=len(names)):
        yield dict(zip(names, combo))


def evaluate(lat: FiniteLattice, v: dict[str, int], f: Formula) -> int:
    nu = lat.require_nu()
    if isinstance(f, Var):
        try:
            return v[f.name]
        except KeyError:
            raise UnboundVariable(f.name) from None
    if isinstance(f, Top):
        return lat.top
    if isinstance(f, Bot):
        return lat.bottom
    if isinstance(f, Neg):
        return nu[evaluate(lat, v, f.arg)]
    if isinstance(f, And):
        return lat.meet[evaluate(lat, v, f.left)][evaluate(lat, v, f.right)]
    return lat.join[evaluate(lat, v, f.left)][evaluate(lat, v, f.right)]


def algebra_countermodel(lat: FiniteLattice, s: Sequent, cap: int | None = None) -> dict[str, int] | None:
    """A valuation with ``V(left) <= V(right)`` failing, or None."""
    for v in _valuations(s.variables(), range(lat.n), cap):
        if not lat.leq(evaluate(lat, v, s.left), evaluate(lat, v, s.right)):
            return v
    return None


def algebra_valid(lat: FiniteLattice, s: Sequent, cap: int | None = None) -> bool:
    return algebra_countermodel(lat, s, cap) is None


def interpret(frame: Frame, v: dict[str, int], f: Formula) -> tuple[int, int]:
    """``(extension, co-extension)`` of ``f``; both halves are checked to be mutual primes."""
    pol = frame.polarity
    if isinstance(f, Var):
        if f.name not in v:
            raise UnboundVariable(f.name)
        ext = v[f.name]
        if not pol.is_stable(ext):
            raise ValueError(f"value of {f.name} is not a stable set")
        co = pol.prime_x(ext)
    elif isinstance(f, Top):
        ext = pol.full_x
        co = pol.prime_x(ext)
    elif isinstance(f, Bot):
        co = pol.full_y
        ext = pol.prime_y(co)
    elif isinstance(f, And):
        ext = interpret(frame, v, f.left)[0] & interpret(frame, v, f.right)[0]
        co = pol.prime_x(ext)
    elif isinstance(f, Or):
        co = interpret(frame, v, f.left)[1] & interpret(frame, v, f.right)[1]
        ext = pol.prime_y(co)
    elif isinstance(f, Neg):
        ext = frame.star(interpret(frame, v, f.arg)[0])
        co = pol.prime_x(ext)
    else:
        raise TypeError(f"not a formula: {f!r}")
    if pol.prime_x(ext) != co or pol.prime_y(co) != ext:
        raise InterpretationMismatch(f"extension and co-extension are not mutual primes at {f!r}")
    return ext, co


def frame_countermodel(frame: Frame, s: Sequent, cap: int | None = None) -> dict[str, int] | None:
    stables = frame.stable_family.stables
    for v in _valuations(s.variables(), stables, cap):
        if not bitset.subset(interpret(frame, v, s.left)[0], interpret(frame, v, s.right)[0]):
            return v
    return None


def frame_valid(frame: Frame, s: Sequent, cap: int | None = None) -> bool:
    return frame_countermodel(frame, s, cap) is None
