"""Space-time algebra vocabulary placed in either particle space.

Frame vectors ``gamma(mu, space)``, relative vectors ``sigma_k = gamma_k gamma_0``,
the pseudoscalar ``I = gamma_0 gamma_1 gamma_2 gamma_3``, the ideal projectors
``(1 +- sigma_3)/2`` and the Weyl-form 4-d spinor built from two Pauli spinors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .clifford import AlgebraError, Multivector, scalar_part

SPACES = (1, 2)


def _check_space(space: int) -> int:
    if space not in SPACES:
        raise AlgebraError(f"particle space must be 1 or 2, got {space!r}")
    return space


@lru_cache(maxsize=None)
def gamma(mu: int, space: int = 1) -> Multivector:
    _check_space(space)
    if not 0 <= mu <= 3:
        raise AlgebraError(f"frame index must be 0..3, got {mu}")
    return Multivector.generator(mu + 4 * (space - 1))


@lru_cache(maxsize=None)
def pseudoscalar(space: int = 1) -> Multivector:
    g = [gamma(mu, space) for mu in range(4)]
    return g[0] * g[1] * g[2] * g[3]


@lru_cache(maxsize=None)
def sigma(k: int, space: int = 1) -> Multivector:
    if not 1 <= k <= 3:
        raise AlgebraError(f"relative vector index must be 1..3, got {k}")
    return gamma(k, space) * gamma(0, space)


@lru_cache(maxsize=None)
def i_sigma(k: int, space: int = 1) -> Multivector:
    """The spatial bivector ``I sigma_k``."""
    return pseudoscalar(space) * sigma(k, space)


@lru_cache(maxsize=None)
def i_gamma3(space: int = 1) -> Multivector:
    return pseudoscalar(space) * gamma(3, space)


@lru_cache(maxsize=None)
def ideal_projector(sign: int, space: int = 1) -> Multivector:
    """``(1 + sign*sigma_3)/2`` in the given particle space."""
    if sign not in (1, -1):
        raise AlgebraError(f"projector sign must be +1 or -1, got {sign!r}")
    return (1.0 + sigma(3, space).scale(sign)).scale(0.5)


class FourVector(NamedTuple):
    t: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __add__(self, other: "FourVector") -> "FourVector":  # type: ignore[override]
        return FourVector(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "FourVector":
        return FourVector(*(-a for a in self))

    def __mul__(self, k: float) -> "FourVector":  # type: ignore[override]
        return FourVector(*(k * a for a in self))

    __rmul__ = __mul__

    def square(self) -> float:
        return minkowski_dot(self, self)

    def norm_inf(self) -> float:
        return max(abs(a) for a in self)


@dataclass(frozen=True)
class ComplexFourVector:
    """``r + I s`` with ``r``, ``s`` real four-vectors."""

    r: FourVector = FourVector()
    s: FourVector = FourVector()

    def __post_init__(self):
        object.__setattr__(self, "r", FourVector(*self.r))
        object.__setattr__(self, "s", FourVector(*self.s))

    def __add__(self, other: "ComplexFourVector") -> "ComplexFourVector":
        return ComplexFourVector(self.r + other.r, self.s + other.s)

    def __sub__(self, other: "ComplexFourVector") -> "ComplexFourVector":
        return ComplexFourVector(self.r - other.r, self.s - other.s)

    def __neg__(self) -> "ComplexFourVector":
        return ComplexFourVector(-self.r, -self.s)

    def conjugate(self) -> "ComplexFourVector":
        return ComplexFourVector(self.r, -self.s)

    def square(self) -> complex:
        """``k k-bar`` read as a complex number: ``(r.r - s.s) + 2 r.s j``."""
        return complex(self.r.square() - self.s.square(), 2.0 * minkowski_dot(self.r, self.s))

    @property
    def is_real(self) -> bool:
        return not any(self.s)

    @classmethod
    def real(cls, t: float = 0.0, x: float = 0.0, y: float = 0.0, z: float = 0.0) -> "ComplexFourVector":
        return cls(FourVector(t, x, y, z))


def as_complex(k) -> ComplexFourVector:
    if isinstance(k, ComplexFourVector):
        return k
    return ComplexFourVector(FourVector(*k))


class PauliSpinor(NamedTuple):
    """``a0 + a1 I sigma_1 + a2 I sigma_2 + a3 I sigma_3``."""

    a0: float = 0.0
    a1: float = 0.0
    a2: float = 0.0
    a3: float = 0.0

    def multivector(self, space: int = 1) -> Multivector:
        out = Multivector.scalar(self.a0)
        for k, a in enumerate(self[1:], start=1):
            if a:
                out = out + i_sigma(k, space).scale(a)
        return out


def embed_vector(v, space: int = 1) -> Multivector:
    v = FourVector(*v)
    out = Multivector()
    for mu, c in enumerate(v):
        if c:
            out = out + gamma(mu, space).scale(c)
    return out


def embed_complex_vector(k, space: int = 1) -> Multivector:
    k = as_complex(k)
    return embed_vector(k.r, space) + pseudoscalar(space) * embed_vector(k.s, space)


def minkowski_dot(q, r) -> float:
    return q[0] * r[0] - q[1] * r[1] - q[2] * r[2] - q[3] * r[3]


def weyl_spinor(omega: PauliSpinor, pi: PauliSpinor, space: int = 1) -> Multivector:
    """``omega (1+sigma_3)/2 + pi I sigma_2 (1-sigma_3)/2``."""
    upper = PauliSpinor(*omega).multivector(space) * ideal_projector(1, space)
    lower = PauliSpinor(*pi).multivector(space) * i_sigma(2, space) * ideal_projector(-1, space)
    return upper + lower


def pauli_coefficients(m: Multivector, space: int = 1) -> PauliSpinor:
    """Read ``(a0, a1, a2, a3)`` off ``m = (a0 + a_k I sigma_k)(1+sigma_3)/2``.

    In that right ideal the scalar and ``I sigma_k`` parts are exactly half
    of the Pauli coefficients.
    """
    coeffs = [2.0 * scalar_part(m)]
    for k in range(1, 4):
        (mask, sign), = i_sigma(k, space).items()
        coeffs.append(2.0 * sign * m[mask])
    return PauliSpinor(*coeffs)


def split_weyl(psi: Multivector, space: int = 1) -> tuple[PauliSpinor, PauliSpinor]:
    """Inverse of :func:`weyl_spinor` for an even single-space element."""
    omega = pauli_coefficients(psi * ideal_projector(1, space), space)
    # pi I sigma_2 (1-sigma_3)/2 = pi (1+sigma_3)/2 I sigma_2
    lower = psi * ideal_projector(-1, space) * (-i_sigma(2, space))
    return omega, pauli_coefficients(lower, space)


def space_of(m: Multivector) -> int | None:
    """Particle space a multivector lives in, or ``None`` for a pure scalar."""
    spaces = set()
    for mask in m.masks():
        if mask & 0x0F:
            spaces.add(1)
        if mask & 0xF0:
            spaces.add(2)
    if len(spaces) > 1:
        raise AlgebraError("multivector mixes particle spaces")
    return spaces.pop() if spaces else None
