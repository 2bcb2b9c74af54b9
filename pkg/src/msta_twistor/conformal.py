"""Two-particle conformal representation of (complexified) Minkowski points.

The origin is ``eps_bar`` and the point at infinity ``eps``.  A point ``k``
is reached by translating the origin in both particle spaces:

    psi_k = scale * T_k^1 T_k^2 eps_bar
          = scale * (-(k k-bar) eps - k^1 eps_bar I gamma_3^1
                     - k^2 eps_bar I gamma_3^2 + eps_bar)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .clifford import Multivector, N_BLADES
from .msta import massless_states, times_complex
from .sta import (
    FourVector,
    as_complex,
    embed_complex_vector,
    gamma,
    i_gamma3,
    ideal_projector,
    pseudoscalar,
)


class ShapeError(ValueError):
    """A multivector does not have the structure an operation expects."""


def translation_generator(k, phi: Multivector, space: int = 1) -> Multivector:
    """``-k phi I gamma_3 (1+sigma_3)/2`` in particle space ``space``; nilpotent."""
    vec = embed_complex_vector(as_complex(k), space)
    if not vec:
        return Multivector()
    return -(vec * phi * i_gamma3(space) * ideal_projector(1, space))


def translate(phi: Multivector, k, space: int = 1) -> Multivector:
    # the generator squares to zero, so the exponential stops at first order
    return phi + translation_generator(k, phi, space)


def translate_both(phi: Multivector, k) -> Multivector:
    """Joint translation in space 1 then space 2."""
    return translate(translate(phi, k, 1), k, 2)


@dataclass(frozen=True)
class ConformalPoint:
    state: Multivector
    scale: float = 1.0

    @property
    def at_infinity(self) -> bool:
        return self.scale == 0


def conformal_point(k, scale: float = 1.0) -> ConformalPoint:
    _, eps_bar = massless_states()
    return ConformalPoint(translate_both(eps_bar, k).scale(scale), float(scale))


# -- 12-term point basis ------------------------------------------------
#
# (alpha + I beta) eps + (theta + I mu) eps_bar
#   + (u^1 - I v^1) eps_bar I gamma_3^1 + (u^2 - I v^2) eps_bar I gamma_3^2


@dataclass(frozen=True)
class PointComponents:
    alpha: float
    beta: float
    theta: float
    mu: float
    u: FourVector
    v: FourVector
    residual: float

    def as_list(self) -> list[float]:
        return [self.alpha, self.beta, self.theta, self.mu, *self.u, *self.v]


@lru_cache(maxsize=None)
def _point_basis() -> tuple[tuple[Multivector, ...], np.ndarray]:
    eps, eps_bar = massless_states()
    i1, i2 = pseudoscalar(1), pseudoscalar(2)
    side1 = eps_bar * i_gamma3(1)
    side2 = eps_bar * i_gamma3(2)
    basis = [eps, i1 * eps, eps_bar, i1 * eps_bar]
    basis += [gamma(mu, 1) * side1 + gamma(mu, 2) * side2 for mu in range(4)]
    basis += [-(i1 * gamma(mu, 1) * side1 + i2 * gamma(mu, 2) * side2) for mu in range(4)]
    matrix = np.array([[b[m] for b in basis] for m in range(N_BLADES)])
    return tuple(basis), matrix


def point_components(m: Multivector, rtol: float = 1e-9) -> PointComponents:
    """Least-squares coordinates of ``m`` in the 12-term point basis.

    Raises :class:`ShapeError` if ``m`` is not in that span.
    """
    _, matrix = _point_basis()
    target = np.array([m[i] for i in range(N_BLADES)])
    coef, *_ = np.linalg.lstsq(matrix, target, rcond=None)
    residual = float(np.max(np.abs(matrix @ coef - target))) if target.size else 0.0
    scale = max(float(np.max(np.abs(target))), 1.0)
    if residual > rtol * scale:
        raise ShapeError(f"multivector is not of point form (residual {residual:.3e})")
    c = [float(x) for x in coef]
    return PointComponents(c[0], c[1], c[2], c[3], FourVector(*c[4:8]), FourVector(*c[8:12]), residual)


@dataclass(frozen=True)
class Coordinates:
    six: tuple[float, float, float, float, float, float]  # T, V, W, X, Y, Z
    four: FourVector | None  # None at infinity

    @property
    def null_cone_residual(self) -> float:
        T, V, W, X, Y, Z = self.six
        return T * T + V * V - W * W - X * X - Y * Y - Z * Z


def extract_coordinates(p: ConformalPoint | Multivector, rtol: float = 1e-9) -> Coordinates:
    state = p.state if isinstance(p, ConformalPoint) else p
    comp = point_components(state, rtol)
    size = max(state.max_abs(), 1.0)
    imag = max(abs(comp.beta), abs(comp.mu), comp.v.norm_inf())
    if imag > rtol * size:
        raise ShapeError(f"point has imaginary components (max {imag:.3e}); not a real point")
    v_minus_w = comp.theta
    T, X, Y, Z = (-c for c in comp.u)
    if v_minus_w == 0 or abs(v_minus_w) <= rtol * size:
        # at infinity the 4-d read-out is undefined
        v_plus_w = comp.alpha
        V, W = 0.5 * (v_plus_w + v_minus_w), 0.5 * (v_plus_w - v_minus_w)
        return Coordinates((T, V, W, X, Y, Z), None)
    v_plus_w = -(T * T - X * X - Y * Y - Z * Z) / v_minus_w
    if abs(v_plus_w - comp.alpha) > rtol * size:
        raise ShapeError("eps coefficient inconsistent with the null cone")
    V, W = 0.5 * (v_plus_w + v_minus_w), 0.5 * (v_plus_w - v_minus_w)
    four = FourVector(T / v_minus_w, X / v_minus_w, Y / v_minus_w, Z / v_minus_w)
    return Coordinates((T, V, W, X, Y, Z), four)


def explicit_point(k, scale: float = 1.0) -> Multivector:
    """The expanded form of a point, independent of the translation route."""
    eps, eps_bar = massless_states()
    k = as_complex(k)
    total = times_complex(eps, -k.square())
    # -k^1 eps_bar I gamma_3^1 - k^2 eps_bar I gamma_3^2
    for space in (1, 2):
        total = total - embed_complex_vector(k, space) * eps_bar * i_gamma3(space)
    return (total + eps_bar).scale(scale)

