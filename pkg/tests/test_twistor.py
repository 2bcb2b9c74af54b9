import pytest

from msta_twistor import sampling
from msta_twistor.clifford import Multivector
from msta_twistor.conformal import conformal_point, translate
from msta_twistor.msta import massless_states, times_complex
from msta_twistor.sta import (
    ComplexFourVector,
    FourVector,
    PauliSpinor,
    embed_vector,
    gamma,
    i_gamma3,
    i_sigma,
    ideal_projector,
    weyl_spinor,
)
from msta_twistor.twistor import (
    NoUniqueIncidence,
    Twistor,
    bargmann_wigner_decompose,
    charge,
    ideal_projections,
    incidence_product,
    is_event,
    kg_from_incidence,
    normalize,
    primary_coefficients,
    primary_part,
    recover_point,
    solve_incidence,
    spin_frame_factor,
    twistor_value,
    valence2,
    valence2_from_values,
)

EPS, EPS_BAR = massless_states()
P1 = PauliSpinor(1, 0, 0, 0)


def close(a, b, tol=1e-12):
    return (a - b).max_abs() <= tol * max(1.0, b.max_abs())


def vclose(a, b, tol=1e-9):
    return max(abs(x - y) for x, y in zip(a, b)) <= tol


def test_value_examples(rng):
    z = Twistor(PauliSpinor(0.3, 1, 0, -2), PauliSpinor(0, 0.5, 1, 0))
    assert twistor_value(z) == weyl_spinor(z.omega, z.pi, 1)
    assert twistor_value(z, FourVector()) == twistor_value(z)
    n = Twistor(pi=P1)
    psi = i_sigma(2, 1) * ideal_projector(-1, 1)
    want = psi + gamma(0, 1) * psi * i_gamma3(1) * ideal_projector(1, 1)
    assert twistor_value(n, FourVector(1, 0, 0, 0)) == want
    k = sampling.complex_four_vector(rng)
    back = translate(twistor_value(z, k, 2), k, 2)
    assert close(back, twistor_value(z, None, 2))


def test_primary_part():
    assert primary_part(weyl_spinor(P1, PauliSpinor())) == ideal_projector(1, 1)
    assert primary_part(weyl_spinor(PauliSpinor(), PauliSpinor(0.2, 1, -1, 3)), 1) == Multivector()
    z = Twistor(PauliSpinor(0.5, -1, 2, 0.25), PauliSpinor(1, 1, 1, 1))
    assert vclose(primary_coefficients(twistor_value(z)), z.omega, 1e-15)


def test_from_value_round_trip(rng):
    z = Twistor(sampling.pauli(rng), sampling.pauli(rng))
    assert Twistor.from_value(z.spinor()) == z
    k = sampling.four_vector(rng)
    assert close(z.seen_from(k).spinor(), z.value(k))


def test_incidence_product():
    a, b = Twistor(pi=P1), Twistor(pi=PauliSpinor(0, 1, 0, 0))
    assert incidence_product(a, b) == 0
    assert incidence_product(a, a) == 0
    z = Twistor(PauliSpinor(1, 0.2, 0, 0), PauliSpinor(0, 0, 1, 0))
    x = Twistor(PauliSpinor(0, 1, 0.5, 0), PauliSpinor(1, 0, 0, 0.7))
    assert abs(incidence_product(z, x)) > 1e-6


def test_incidence_product_vanishes_for_real_intersections(rng):
    for _ in range(20):
        q = ComplexFourVector(sampling.four_vector(rng))
        z, x = sampling.incident_pair(rng, q)
        assert abs(incidence_product(z, x)) < 1e-12
        k = sampling.four_vector(rng)
        assert abs(incidence_product(z, x, k)) < 1e-12


def test_origin_rays(rng):
    z, x = Twistor(pi=P1), Twistor(pi=PauliSpinor(0, 1, 0, 0))
    r2 = valence2(z, x)
    c = spin_frame_factor(r2)
    assert c != 0
    assert close(r2, times_complex(EPS_BAR, c))
    pp, *_, mm = ideal_projections(r2)
    assert pp.max_abs() < 1e-15
    assert close(mm, times_complex(EPS_BAR, c))


def test_antisymmetry_and_single_space_form(rng):
    z, x = sampling.null_twistor(rng), Twistor(sampling.pauli(rng), sampling.pauli(rng))
    k = sampling.four_vector(rng)
    assert valence2(z, x, k) == -valence2(x, z, k)
    assert close(valence2(z, x, k), valence2_from_values(z.value(k), x.value(k)))


def test_translation_covariance(rng):
    for _ in range(30):
        z, x = sampling.incident_pair(rng, sampling.complex_four_vector(rng))
        k = sampling.four_vector(rng)
        org = valence2(z, x)
        moved = translate(translate(org, -k, 1), -k, 2)
        assert close(valence2(z, x, k), moved, 1e-9)


def test_ideal_projection_closed_forms(rng):
    for _ in range(30):
        z, x = sampling.null_twistor(rng), sampling.null_twistor(rng)
        r = sampling.four_vector(rng)
        r2 = valence2(z, x, r)
        c = spin_frame_factor(r2)
        pp, pm, mp, mm = ideal_projections(r2)
        assert close(pp + pm + mp + mm, r2)
        assert close(pp, times_complex(EPS, -r.square() * c), 1e-10)
        assert close(pm, times_complex(embed_vector(r, 1) * EPS_BAR * i_gamma3(1), c), 1e-10)
        assert close(mp, times_complex(embed_vector(r, 2) * EPS_BAR * i_gamma3(2), c), 1e-10)
        assert close(mm, times_complex(EPS_BAR, c), 1e-10)
        # the observer sees the origin event at -r
        assert close(r2, times_complex(conformal_point(-r).state, c), 1e-10)


def test_spin_frame_factor_examples():
    pi = PauliSpinor(0.3, 1, 0, 0.5)
    parallel = valence2(Twistor(pi=pi), Twistor(pi=pi))
    assert parallel == Multivector()
    assert spin_frame_factor(parallel) == 0
    for s in (1.0, 2.5, -0.7):
        assert spin_frame_factor(conformal_point(FourVector(0.1, 0.2, 0.3, 0.4), s).state) == pytest.approx(s)
    assert spin_frame_factor(times_complex(EPS_BAR, 1 - 2j)) == pytest.approx(1 - 2j)


def test_spin_frame_factor_rejects_wrong_shape():
    from msta_twistor.conformal import ShapeError

    with pytest.raises(ShapeError):
        spin_frame_factor(ideal_projector(-1, 1) * ideal_projector(-1, 2))


def test_normalize():
    r2 = times_complex(conformal_point(FourVector(1, 0, 2, 0)).state, 0.5 + 2j)
    assert spin_frame_factor(normalize(r2)) == pytest.approx(1.0)
    with pytest.raises(NoUniqueIncidence):
        normalize(EPS)


def test_solve_origin():
    z, x = Twistor(pi=P1), Twistor(pi=PauliSpinor(0, 1, 0, 0))
    k = solve_incidence(z, x)
    assert vclose(k.r + k.s, [0.0] * 8, 1e-15)


def test_solve_round_trip_real_and_complex(rng):
    for i in range(100):
        q = sampling.complex_four_vector(rng) if i % 2 else ComplexFourVector(sampling.four_vector(rng))
        z, x = sampling.incident_pair(rng, q)
        k = solve_incidence(z, x)
        assert vclose(k.r + k.s, q.r + q.s)
        assert max(map(abs, primary_coefficients(twistor_value(z, k)))) < 1e-9
        assert max(map(abs, primary_coefficients(twistor_value(x, k)))) < 1e-9


def test_solve_parallel_rays():
    pi = PauliSpinor(0.3, 1, 0, 0.5)
    with pytest.raises(NoUniqueIncidence):
        solve_incidence(Twistor(pi=pi), Twistor(pi=pi))


def test_is_event_examples(rng):
    q = ComplexFourVector(FourVector(0.5, -1, 0.25, 2))
    z, x = sampling.incident_pair(rng, q)
    diag = is_event(valence2(z, x))
    assert diag.event is True
    assert vclose(diag.r, q.r)
    q = ComplexFourVector(FourVector(0.5, -1, 0.25, 2), FourVector(0, 0.3, 0, 0))
    z, x = sampling.incident_pair(rng, q)
    diag = is_event(valence2(z, x))
    assert diag.event is False
    assert vclose(diag.s, q.s)
    assert is_event(EPS).at_infinity


def test_recover_point(rng):
    q = sampling.complex_four_vector(rng)
    r2 = times_complex(conformal_point(q).state, 0.3 - 1.1j)
    k, c = recover_point(r2)
    assert c == pytest.approx(0.3 - 1.1j)
    assert vclose(k.r + k.s, q.r + q.s)


def test_bargmann_wigner_examples():
    kg = bargmann_wigner_decompose(EPS_BAR)
    assert kg.theta == pytest.approx(1.0)
    assert max(map(abs, [kg.alpha, kg.beta, kg.mu, *kg.u, *kg.v])) < 1e-12
    r = FourVector(0.5, 1, -2, 0.25)
    kg = bargmann_wigner_decompose(conformal_point(r).state)
    assert (kg.alpha, kg.beta, kg.theta, kg.mu) == pytest.approx((-r.square(), 0, 1, 0), abs=1e-12)
    assert vclose(kg.u, -r, 1e-12) and vclose(kg.v, [0] * 4, 1e-12)
    assert not kg.charged()
    q = ComplexFourVector(FourVector(), FourVector(1, 0, 0, 0))
    kg = bargmann_wigner_decompose(conformal_point(q).state)
    assert (kg.alpha, kg.beta) == pytest.approx((1.0, 0.0), abs=1e-12)
    assert vclose(kg.u, [0] * 4, 1e-12) and vclose(kg.v, [1, 0, 0, 0], 1e-12)


def test_bargmann_wigner_matches_closed_form(rng):
    for _ in range(30):
        q = sampling.complex_four_vector(rng)
        c = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        got = bargmann_wigner_decompose(times_complex(conformal_point(q).state, c))
        want = kg_from_incidence(q, c)
        assert vclose([got.alpha, got.beta, got.theta, got.mu, *got.u, *got.v],
                      [want.alpha, want.beta, want.theta, want.mu, *want.u, *want.v], 1e-10)


def test_charge_tracks_reality_on_generic_points(rng):
    for i in range(100):
        q = sampling.complex_four_vector(rng) if i % 2 else ComplexFourVector(sampling.four_vector(rng))
        z, x = sampling.incident_pair(rng, q)
        r2 = valence2(z, x)
        assert (abs(charge(r2)) < 1e-9) == q.is_real


def test_charge_is_blind_to_imaginary_parts_orthogonal_to_real_part():
    # beta = -2 r.s after a spin frame, so complex points with r.s = 0 are uncharged
    q = ComplexFourVector(FourVector(1, 0, 0, 0), FourVector(0, 1, 0, 0))
    r2 = times_complex(conformal_point(q).state, 0.7 + 0.2j)
    assert abs(charge(r2)) < 1e-12
    assert is_event(r2).event is False
