"""Two-particle structure: correlator, complex structure, singlets and the
quantum inner product.

Complex scalars are plain Python ``complex`` values; the imaginary unit
stands for right multiplication by ``I sigma_3`` of particle space 1.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .clifford import AlgebraError, Multivector, reverse, scalar_part
from .sta import i_sigma, ideal_projector, pseudoscalar, sigma, space_of

__all__ = [
    "correlator",
    "complex_structure",
    "singlet_chi",
    "singlet_zeta",
    "massless_states",
    "quantum_inner",
    "lift",
    "complex_to_multivector",
    "times_complex",
]


@lru_cache(maxsize=None)
def correlator() -> Multivector:
    """``E = (1 - I sigma_3^1 I sigma_3^2)/2``, an idempotent."""
    return (1.0 - i_sigma(3, 1) * i_sigma(3, 2)).scale(0.5)


@lru_cache(maxsize=None)
def complex_structure() -> Multivector:
    """``J = E I sigma_3^1``; right multiplication by ``J`` is the unit imaginary."""
    return correlator() * i_sigma(3, 1)


@lru_cache(maxsize=None)
def _inverse_e_scalar() -> float:
    return 1.0 / scalar_part(correlator())


def quantum_inner(psi: Multivector, phi: Multivector) -> complex:
    """Two-particle inner product ``(psi, phi)_s``.

    Antilinear in ``psi``, linear in ``phi``, normalised so that ``E`` has
    unit norm.
    """
    prod = reverse(psi) * phi
    norm = _inverse_e_scalar()
    re = scalar_part(prod)
    im = -scalar_part(prod * complex_structure())
    return complex(norm * re, norm * im)


@lru_cache(maxsize=None)
def singlet_chi() -> Multivector:
    return ((i_sigma(2, 1) - i_sigma(2, 2)) * correlator()).scale(1.0 / math.sqrt(2.0))


@lru_cache(maxsize=None)
def singlet_zeta() -> Multivector:
    """Lorentz-invariant singlet ``sqrt(2) chi (1 - I^1 I^2)/2``."""
    boost_proj = (1.0 - pseudoscalar(1) * pseudoscalar(2)).scale(0.5)
    return (singlet_chi() * boost_proj).scale(math.sqrt(2.0))


@lru_cache(maxsize=None)
def massless_states() -> tuple[Multivector, Multivector]:
    """``(eps, eps_bar)``: the two null projections of the relativistic singlet."""
    head = i_sigma(2, 1) - i_sigma(2, 2)
    e = correlator()
    eps = head * ideal_projector(1, 1) * ideal_projector(1, 2) * e
    eps_bar = head * ideal_projector(-1, 1) * ideal_projector(-1, 2) * e
    return eps, eps_bar


def conjugation_operator() -> Multivector:
    """``sigma_1^1 sigma_1^2``, mapping ``eps_bar`` onto ``eps`` by right multiplication."""
    return sigma(1, 1) * sigma(1, 2)


def complex_to_multivector(c: complex) -> Multivector:
    c = complex(c)
    return Multivector.scalar(c.real) + i_sigma(3, 1).scale(c.imag)


def times_complex(m: Multivector, c: complex) -> Multivector:
    """Right multiplication by a complex scalar, ``m (re + im I sigma_3^1)``."""
    return m * complex_to_multivector(c)


def lift(m: Multivector, space: int) -> Multivector:
    """Copy a single-space multivector into particle space ``space``.

    Generator order inside a space is preserved, so the copy is a pure
    4-bit mask shift.
    """
    if space not in (1, 2):
        raise AlgebraError(f"particle space must be 1 or 2, got {space!r}")
    src = space_of(m)
    if src is None or src == space:
        return m
    if space == 2:
        return Multivector({mask << 4: c for mask, c in m.items()})
    return Multivector({mask >> 4: c for mask, c in m.items()})
