"""Infinity twistors, distance functions, the bang twistor and the k = +-1
FRW twistors.

Points are fed in as 2-valence twistors.  ``null_point(r)`` builds the one
an observer at ``r`` gets from two null rays through the origin: the
conformal point of ``-r`` times the spin-frame factor.  Time-dependent
relations (bang, FRW) are stated in terms of that observer position.
"""

from __future__ import annotations

import math
from enum import Enum
from functools import lru_cache

from .clifford import Multivector
from .conformal import conformal_point
from .msta import complex_structure, massless_states, quantum_inner, times_complex
from .sta import FourVector, gamma, i_gamma3, minkowski_dot


class Space(str, Enum):
    MINKOWSKI = "minkowski"
    DE_SITTER = "ds"
    ANTI_DE_SITTER = "ads"


class DomainError(ValueError):
    """Distance argument outside the real branch of cosh^-1 / cos^-1."""

    def __init__(self, message: str, argument: complex):
        super().__init__(message)
        self.argument = argument


class InfinitePoint(ZeroDivisionError):
    """A point fails the finite-point condition of the chosen space."""


@lru_cache(maxsize=None)
def infinity_twistor(space: Space | str) -> Multivector:
    eps, eps_bar = massless_states()
    space = Space(space)
    if space is Space.MINKOWSKI:
        return eps
    if space is Space.DE_SITTER:
        return eps + eps_bar
    return eps_bar - eps


@lru_cache(maxsize=None)
def bang_twistor() -> Multivector:
    eps, _ = massless_states()
    left = gamma(0, 1) * eps * i_gamma3(1) + gamma(0, 2) * eps * i_gamma3(2)
    return left.scale(-0.5)


@lru_cache(maxsize=None)
def frw_twistors(k: int) -> tuple[Multivector, Multivector]:
    """The pair summing to the bang twistor: ``(I, I-bar)`` for k=1, ``(I, J)`` for k=-1."""
    if k not in (1, -1):
        raise ValueError(f"spatial curvature k must be +1 or -1, got {k!r}")
    half_bang = bang_twistor().scale(0.5)
    if k == 1:
        twist = (infinity_twistor(Space.DE_SITTER) * complex_structure()).scale(0.25)
        return half_bang + twist, half_bang - twist
    ads = infinity_twistor(Space.ANTI_DE_SITTER).scale(0.25)
    return half_bang - ads, half_bang + ads


def null_point(r, factor: complex = 1.0) -> Multivector:
    """2-valence twistor of two origin rays seen by an observer at real ``r``."""
    r = FourVector(*r)
    return times_complex(conformal_point(-r).state, factor)


def finite_point_condition(space: Space | str, r2: Multivector) -> complex:
    return quantum_inner(infinity_twistor(space), r2)


def infinity_norms() -> dict[tuple[str, str], complex]:
    named = {
        "I_M": infinity_twistor(Space.MINKOWSKI),
        "I_dS": infinity_twistor(Space.DE_SITTER),
        "I_adS": infinity_twistor(Space.ANTI_DE_SITTER),
        "B": bang_twistor(),
    }
    return {(a, b): quantum_inner(x, y) for a, x in named.items() for b, y in named.items()}


def bang_time(r2: Multivector) -> complex:
    """``(B, R)_s``; equals ``-t/2`` times the spin factor for an observer at time ``t``."""
    return quantum_inner(bang_twistor(), r2)


def distance_argument(space: Space | str, q2: Multivector, r2: Multivector) -> complex:
    """The twistor ratio feeding each space's distance function.

    Minkowski returns the squared interval itself; de Sitter and
    anti-de Sitter return the argument of cosh^-1 and cos^-1.
    """
    space = Space(space)
    inf = infinity_twistor(space)
    fq = quantum_inner(inf, q2)
    fr = quantum_inner(inf, r2)
    denom = fq.conjugate() * fr
    if denom == 0:
        raise InfinitePoint(f"point at infinity for {space.value} space")
    qr = quantum_inner(q2, r2)
    if space is Space.MINKOWSKI:
        return -qr / (2.0 * denom)
    return 1.0 - qr * quantum_inner(inf, inf) / denom


def distance(space: Space | str, q2: Multivector, r2: Multivector, imag_tol: float = 1e-9) -> float:
    space = Space(space)
    arg = distance_argument(space, q2, r2)
    if abs(arg.imag) > imag_tol * max(1.0, abs(arg.real)):
        raise DomainError(f"complex distance argument {arg}", arg)
    x = arg.real
    if space is Space.MINKOWSKI:
        return x
    return _real_branch(space, x, arg)


BRANCH_SLACK = 1e-12


def _real_branch(space: Space, x: float, raw) -> float:
    # rounding can land a coincident pair just outside the branch
    if space is Space.DE_SITTER:
        if 1.0 - BRANCH_SLACK <= x < 1.0:
            x = 1.0
        if x < 1.0:
            raise DomainError(f"cosh^-1 argument {x} < 1", raw)
        return math.acosh(x)
    if 1.0 < abs(x) <= 1.0 + BRANCH_SLACK:
        x = math.copysign(1.0, x)
    if abs(x) > 1.0:
        raise DomainError(f"cos^-1 argument {x} outside [-1, 1]", raw)
    return math.acos(x)


def closed_form_distance(space: Space | str, q, r) -> float:
    """Coordinate form of each space's distance, for cross-checking the twistor ratio."""
    space = Space(space)
    q, r = FourVector(*q), FourVector(*r)
    d2 = minkowski_dot(q - r, q - r)
    if space is Space.MINKOWSKI:
        return d2
    if space is Space.DE_SITTER:
        x = 1.0 + 2.0 * d2 / ((1.0 - r.square()) * (1.0 - q.square()))
    else:
        x = 1.0 - 2.0 * d2 / ((1.0 + r.square()) * (1.0 + q.square()))
    return _real_branch(space, x, x)


def frw_point_formula(k: int, r) -> complex:
    """Closed form of ``(I, R_N)_s`` for an observer at ``r`` with unit spin factor."""
    r = FourVector(*r)
    if k == 1:
        return complex(-0.25 * r.t, -0.125 * (1.0 - r.square()))
    if k == -1:
        return complex(0.25 * (-r.t + 0.5 * (1.0 + r.square())), 0.0)
    raise ValueError(f"spatial curvature k must be +1 or -1, got {k!r}")
