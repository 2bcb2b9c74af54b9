"""Seeded random samplers used by the verification harness and the tests."""

from __future__ import annotations

import math
import random

from .clifford import Multivector, exp_series, reverse, scalar_part
from .sta import ComplexFourVector, FourVector, PauliSpinor, gamma, pseudoscalar
from .twistor import Twistor


def four_vector(rng: random.Random, scale: float = 1.0) -> FourVector:
    return FourVector(*(rng.uniform(-scale, scale) for _ in range(4)))


def complex_four_vector(rng: random.Random, scale: float = 1.0) -> ComplexFourVector:
    return ComplexFourVector(four_vector(rng, scale), four_vector(rng, scale))


def pauli(rng: random.Random) -> PauliSpinor:
    return PauliSpinor(*(rng.uniform(-1, 1) for _ in range(4)))


def multivector(rng: random.Random, n_terms: int = 6, space: int | None = None) -> Multivector:
    """Sparse random element; restricted to one particle space if ``space`` is given."""
    if space is None:
        masks = range(256)
    else:
        shift = 4 * (space - 1)
        masks = [m << shift for m in range(16)]
    return Multivector({rng.choice(masks): rng.uniform(-1, 1) for _ in range(n_terms)})


def bivector(rng: random.Random, space: int = 1) -> Multivector:
    out = Multivector()
    for a in range(4):
        for b in range(a + 1, 4):
            out = out + (gamma(a, space) * gamma(b, space)).scale(rng.uniform(-1, 1))
    return out


def even_element(rng: random.Random, space: int = 1) -> Multivector:
    """Random grade 0 + 2 + 4 element of one space-time algebra."""
    return (
        Multivector.scalar(rng.uniform(-1, 1))
        + bivector(rng, space)
        + pseudoscalar(space).scale(rng.uniform(-1, 1))
    )


def rotor(rng: random.Random, space: int = 1) -> Multivector:
    """``exp(B/2)`` for a random bivector, renormalised so ``R R~ = 1``."""
    while True:
        r = exp_series(bivector(rng, space).scale(0.5), 1e-15)
        n = scalar_part(r * reverse(r))
        if n > 0:
            return r.scale(1.0 / math.sqrt(n))


def pauli_rotor(rng: random.Random, space: int = 1) -> Multivector:
    """Unit Pauli-even element ``a0 + a_k I sigma_k``."""
    p = pauli(rng)
    n = math.sqrt(sum(a * a for a in p))
    return PauliSpinor(*(a / n for a in p)).multivector(space)


def null_twistor(rng: random.Random) -> Twistor:
    """Random twistor with ``omega = 0``: a null ray through the origin."""
    return Twistor(PauliSpinor(), pauli(rng))


def incident_pair(rng: random.Random, k) -> tuple[Twistor, Twistor]:
    """Two twistors whose primary parts vanish exactly at ``k``."""
    z, x = null_twistor(rng), null_twistor(rng)
    minus_k = ComplexFourVector(-k.r, -k.s)
    return z.seen_from(minus_k), x.seen_from(minus_k)
