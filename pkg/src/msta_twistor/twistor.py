"""1-valence twistors, 2-valence incidence twistors and the incidence solver.

A 1-valence twistor is a 4-d spinor ``psi = omega (1+sigma_3)/2 + pi I sigma_2 (1-sigma_3)/2``
whose value seen by an observer at ``k`` is ``psi + k psi I gamma_3 (1+sigma_3)/2``.
Two of them make the 2-valence twistor ``(Z^1 X^2 - X^1 Z^2) E``, which is
the conformal point of their (possibly complex) intersection times the
spin-frame factor ``{pi, eta}*``.

2-valence twistors are plain :class:`Multivector` values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clifford import Multivector, reverse, scalar_part
from .conformal import PointComponents, ShapeError, point_components
from .linsolve import SingularMatrixError, solve
from .msta import correlator, lift, massless_states, times_complex
from .sta import (
    ComplexFourVector,
    FourVector,
    PauliSpinor,
    as_complex,
    embed_complex_vector,
    i_gamma3,
    i_sigma,
    ideal_projector,
    minkowski_dot,
    pauli_coefficients,
    space_of,
    split_weyl,
    weyl_spinor,
)

TwoValenceTwistor = Multivector


class NoUniqueIncidence(ArithmeticError):
    """The incidence system is singular: parallel rays or degenerate twistors."""


@dataclass(frozen=True)
class Twistor:
    omega: PauliSpinor = PauliSpinor()
    pi: PauliSpinor = PauliSpinor()

    def __post_init__(self):
        object.__setattr__(self, "omega", PauliSpinor(*self.omega))
        object.__setattr__(self, "pi", PauliSpinor(*self.pi))

    @property
    def is_null_through_origin(self) -> bool:
        return not any(self.omega)

    def spinor(self, space: int = 1) -> Multivector:
        return weyl_spinor(self.omega, self.pi, space)

    def value(self, k=None, space: int = 1) -> Multivector:
        return twistor_value(self, k, space)

    @classmethod
    def from_value(cls, m: Multivector, space: int = 1) -> "Twistor":
        """The twistor whose value at the origin is the even element ``m``."""
        omega, pi = split_weyl(m, space)
        return cls(omega, pi)

    def seen_from(self, k) -> "Twistor":
        """Re-anchor so that the new twistor's origin value is this one's value at ``k``."""
        return Twistor.from_value(self.value(k, 1), 1)


def twistor_value(z: Twistor, k=None, space: int = 1) -> Multivector:
    psi = z.spinor(space)
    if k is None:
        return psi
    vec = embed_complex_vector(as_complex(k), space)
    if not vec:
        return psi
    return psi + vec * psi * i_gamma3(space) * ideal_projector(1, space)


def primary_part(zval: Multivector, space: int | None = None) -> Multivector:
    """Right projection onto ``(1+sigma_3)/2``."""
    if space is None:
        space = space_of(zval) or 1
    return zval * ideal_projector(1, space)


def primary_coefficients(zval: Multivector, space: int | None = None) -> PauliSpinor:
    if space is None:
        space = space_of(zval) or 1
    return pauli_coefficients(primary_part(zval, space), space)


def incidence_product(z: Twistor, x: Twistor, k=None, space: int = 1) -> complex:
    """``<X~ Z>_s`` of the two twistor values at the same observer; zero when incident."""
    prod = reverse(twistor_value(x, k, space)) * twistor_value(z, k, space)
    return complex(scalar_part(prod), -scalar_part(prod * i_sigma(3, space)))


def valence2(z: Twistor, x: Twistor, k=None) -> TwoValenceTwistor:
    z1, z2 = twistor_value(z, k, 1), twistor_value(z, k, 2)
    x1, x2 = twistor_value(x, k, 1), twistor_value(x, k, 2)
    return (z1 * x2 - x1 * z2) * correlator()


def valence2_from_values(zval: Multivector, xval: Multivector) -> TwoValenceTwistor:
    """``(Z^1 X^2 - X^1 Z^2) E`` for single-space values already evaluated."""
    z1, z2 = lift(zval, 1), lift(zval, 2)
    x1, x2 = lift(xval, 1), lift(xval, 2)
    return (z1 * x2 - x1 * z2) * correlator()


_SIGN_PAIRS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def ideal_projections(r: TwoValenceTwistor) -> tuple[Multivector, Multivector, Multivector, Multivector]:
    """Projections onto the ideals, ordered ``(++), (+-), (-+), (--)``."""
    return tuple(
        r * ideal_projector(s1, 1) * ideal_projector(s2, 2) for s1, s2 in _SIGN_PAIRS
    )  # type: ignore[return-value]


def spin_frame_factor(r: TwoValenceTwistor, rtol: float = 1e-9) -> complex:
    """``{pi, eta}*``: the complex ``c`` with ``R (--)-projection = eps_bar c``."""
    _, eps_bar = massless_states()
    proj = ideal_projections(r)[3]
    basis_re = eps_bar
    basis_im = eps_bar * i_sigma(3, 1)
    aa, bb, ab = _dot_coef(basis_re, basis_re), _dot_coef(basis_im, basis_im), _dot_coef(basis_re, basis_im)
    pa, pb = _dot_coef(basis_re, proj), _dot_coef(basis_im, proj)
    det = aa * bb - ab * ab
    re = (pa * bb - pb * ab) / det
    im = (pb * aa - pa * ab) / det
    factor = complex(re, im)
    resid = (proj - times_complex(eps_bar, factor)).max_abs()
    if resid > rtol * max(r.max_abs(), 1.0):
        raise ShapeError(f"(--) projection is not a complex multiple of eps_bar (residual {resid:.3e})")
    return factor


def _dot_coef(a: Multivector, b: Multivector) -> float:
    return sum(c * b[m] for m, c in a.items())


def normalize(r: TwoValenceTwistor) -> TwoValenceTwistor:
    """Divide out the spin-frame factor so that ``{pi, eta}* = 1``."""
    c = spin_frame_factor(r)
    if c == 0:
        raise NoUniqueIncidence("spin-frame factor vanishes: parallel rays or point at infinity")
    return times_complex(r, 1.0 / c)


def _primary_system(z: Twistor, x: Twistor):
    def residual(unknowns):
        k = ComplexFourVector(FourVector(*unknowns[:4]), FourVector(*unknowns[4:]))
        return list(primary_coefficients(twistor_value(z, k, 1), 1)) + list(
            primary_coefficients(twistor_value(x, k, 1), 1)
        )

    # the primary parts are affine in (t_r..z_r, t_s..z_s)
    base = residual([0.0] * 8)
    columns = []
    for j in range(8):
        unit = [0.0] * 8
        unit[j] = 1.0
        col = residual(unit)
        columns.append([c - b for c, b in zip(col, base)])
    matrix = [[columns[j][i] for j in range(8)] for i in range(8)]
    return matrix, [-b for b in base]


def solve_incidence(z: Twistor, x: Twistor, rtol: float = 1e-12) -> ComplexFourVector:
    """Complex point ``r + I s`` where the primary parts of both twistors vanish."""
    matrix, rhs = _primary_system(z, x)
    try:
        sol = solve(matrix, rhs, rtol)
    except SingularMatrixError as exc:
        raise NoUniqueIncidence(str(exc)) from exc
    return ComplexFourVector(FourVector(*sol[:4]), FourVector(*sol[4:]))


@dataclass(frozen=True)
class KleinGordon:
    """Coefficients of the spin-0 two-particle wave-function form."""

    alpha: float
    beta: float
    theta: float
    mu: float
    u: FourVector
    v: FourVector

    @property
    def field(self) -> complex:
        return complex(self.alpha, self.beta)

    def charged(self, tol: float = 1e-9) -> bool:
        return abs(self.beta) > tol


def bargmann_wigner_decompose(psi: Multivector, rtol: float = 1e-9) -> KleinGordon:
    comp: PointComponents = point_components(psi, rtol)
    return KleinGordon(comp.alpha, comp.beta, comp.theta, comp.mu, comp.u, comp.v)


def kg_from_incidence(k: ComplexFourVector, factor: complex) -> KleinGordon:
    """Closed-form coefficients of ``R_org`` for intersection ``k`` and spin factor ``c + d j``."""
    r, s = k.r, k.s
    a = -r.square() + s.square()
    b = -2.0 * minkowski_dot(r, s)
    c, d = factor.real, factor.imag
    return KleinGordon(
        alpha=a * c - b * d,
        beta=a * d + b * c,
        theta=c,
        mu=-d,
        u=r * (-c) + s * d,
        v=r * d + s * c,
    )


@dataclass(frozen=True)
class IncidenceDiagnosis:
    event: bool | None  # None when the point is at infinity
    r: FourVector | None
    s: FourVector | None
    factor: complex

    @property
    def at_infinity(self) -> bool:
        return self.event is None


def recover_point(r2: TwoValenceTwistor) -> tuple[ComplexFourVector, complex]:
    """Position encoded by a 2-valence twistor, and its spin-frame factor."""
    factor = spin_frame_factor(r2)
    if factor == 0:
        raise NoUniqueIncidence("spin-frame factor vanishes")
    kg = bargmann_wigner_decompose(r2)
    c, d = factor.real, factor.imag
    n = c * c + d * d
    # invert u = -c r + d s, v = d r + c s
    r = (kg.u * (-c) + kg.v * d) * (1.0 / n)
    s = (kg.u * d + kg.v * c) * (1.0 / n)
    return ComplexFourVector(r, s), factor


def is_event(r2: TwoValenceTwistor, rtol: float = 1e-9) -> IncidenceDiagnosis:
    """Whether the 2-valence twistor is a point of real Minkowski space."""
    factor = spin_frame_factor(r2)
    if abs(factor) <= rtol * max(r2.max_abs(), 1.0):
        return IncidenceDiagnosis(None, None, None, factor)
    k, factor = recover_point(r2)
    real = k.s.norm_inf() < rtol * (1.0 + k.r.norm_inf())
    return IncidenceDiagnosis(real, k.r, k.s, factor)


def charge(r2: TwoValenceTwistor) -> float:
    """``beta`` of the spin-framed (normalised) twistor; zero for an uncharged field."""
    return bargmann_wigner_decompose(normalize(r2)).beta
