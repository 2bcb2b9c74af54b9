"""Registry of identity checks run by ``msta verify``.

Each check returns the largest absolute error it saw; randomised checks
draw from a generator seeded by ``(seed, check id)`` so results do not
depend on which other checks run.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import cosmo, sampling
from .clifford import Multivector, reverse
from .conformal import (
    conformal_point,
    explicit_point,
    extract_coordinates,
    translate,
    translation_generator,
)
from .msta import (
    complex_structure,
    conjugation_operator,
    correlator,
    lift,
    massless_states,
    quantum_inner,
    singlet_chi,
    singlet_zeta,
    times_complex,
)
from .sta import (
    ComplexFourVector,
    FourVector,
    embed_vector,
    gamma,
    i_sigma,
    ideal_projector,
    minkowski_dot,
    pseudoscalar,
)
from .twistor import (
    bargmann_wigner_decompose,
    charge,
    ideal_projections,
    is_event,
    kg_from_incidence,
    solve_incidence,
    spin_frame_factor,
    valence2,
)


@dataclass(frozen=True)
class CheckRecord:
    id: str
    module: str
    paper_ref: str
    lhs: str
    rhs: str
    max_abs_err: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_abs_err <= self.tolerance

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "module": self.module,
            "paper_ref": self.paper_ref,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "max_abs_err": self.max_abs_err,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class Check:
    id: str
    module: str
    identity: str
    lhs: str
    rhs: str
    tolerance: float
    fn: Callable[[random.Random], float]

    def run(self, seed: int, tolerance: float | None = None) -> CheckRecord:
        rng = random.Random(f"{seed}:{self.id}")
        err = float(self.fn(rng))
        if math.isnan(err):
            err = math.inf
        tol = self.tolerance if tolerance is None else tolerance
        return CheckRecord(self.id, self.module, self.identity, self.lhs, self.rhs, err, tol)


REGISTRY: list[Check] = []


def check(module: str, ident: str, identity: str, lhs: str, rhs: str, tol: float):
    def deco(fn):
        REGISTRY.append(Check(f"{module}.{ident}", module, identity, lhs, rhs, tol, fn))
        return fn

    return deco


def err(a, b=0.0) -> float:
    if isinstance(a, Multivector) or isinstance(b, Multivector):
        return (Multivector() + a - b).max_abs()
    return abs(complex(a) - complex(b))


def worst(values: Iterable[float]) -> float:
    return max(values, default=0.0)


E = correlator
J = complex_structure


def EPS():
    return massless_states()[0]


def EPS_BAR():
    return massless_states()[1]


# -- clifford-core --------------------------------------------------------

@check("clifford", "associativity", "(ab)c = a(bc)", "(a*b)*c", "a*(b*c)", 1e-10)
def _assoc(rng):
    out = []
    for _ in range(200):
        a, b, c = (sampling.multivector(rng) for _ in range(3))
        scale = max(1.0, a.max_abs() * b.max_abs() * c.max_abs())
        out.append(err(a * b * c, a * (b * c)) / scale)
    return worst(out)


@check("clifford", "anticommute", "g_mu^1 g_nu^2 + g_nu^2 g_mu^1 = 0", "{g_mu^1, g_nu^2}", "0", 0.0)
def _anti(rng):
    return worst(err(gamma(m, 1) * gamma(n, 2) + gamma(n, 2) * gamma(m, 1)) for m in range(4) for n in range(4))


@check("clifford", "metric", "g_mu g_nu + g_nu g_mu = 2 eta_mu_nu", "{g_mu^i, g_nu^i}", "2 eta", 0.0)
def _metric(rng):
    eta = (1, -1, -1, -1)
    return worst(
        err(gamma(m, s) * gamma(n, s) + gamma(n, s) * gamma(m, s), 2.0 * eta[m] if m == n else 0.0)
        for s in (1, 2) for m in range(4) for n in range(4)
    )


@check("clifford", "reverse_antiautomorphism", "(ab)~ = b~ a~", "rev(a*b)", "rev(b)*rev(a)", 1e-12)
def _rev(rng):
    out = []
    for _ in range(100):
        a, b = sampling.multivector(rng), sampling.multivector(rng)
        out.append(err(reverse(a * b), reverse(b) * reverse(a)))
    return worst(out)


# -- sta ------------------------------------------------------------------

@check("sta", "dot_scalar_part", "<q r> = q.r", "<embed(q) embed(r)>", "minkowski_dot(q, r)", 1e-12)
def _dot(rng):
    out = []
    for _ in range(50):
        q, r = sampling.four_vector(rng), sampling.four_vector(rng)
        out.append(abs((embed_vector(q) * embed_vector(r))[0] - minkowski_dot(q, r)))
    return worst(out)


@check("sta", "projectors", "P+ P+ = P+, P+ P- = 0, P+ + P- = 1", "P+^2, P+P-, P+ + P-", "P+, 0, 1", 0.0)
def _proj(rng):
    out = []
    for s in (1, 2):
        p, m = ideal_projector(1, s), ideal_projector(-1, s)
        out += [err(p * p, p), err(m * m, m), err(p * m), err(p + m, 1.0)]
    return worst(out)


# -- msta -----------------------------------------------------------------

@check("msta", "E_idempotent", "(E)^2 = E", "E*E", "E", 1e-12)
def _e2(rng):
    return err(E() * E(), E())


@check("msta", "J_square", "(J)^2 = -E", "J*J", "-E", 1e-12)
def _j2(rng):
    return err(J() * J(), -E())


@check("msta", "J_from_E", "J = E I sigma_3^1 = E I sigma_3^2", "E*Isig3^1, E*Isig3^2", "J", 1e-12)
def _jdef(rng):
    return max(err(E() * i_sigma(3, 1), J()), err(E() * i_sigma(3, 2), J()),
               err((i_sigma(3, 1) + i_sigma(3, 2)).scale(0.5), J()))


@check("msta", "E_unit_norm", "(E, E)_s = 1", "(E,E)_s", "1", 1e-12)
def _enorm(rng):
    return err(quantum_inner(E(), E()), 1.0)


@check("msta", "singlet_condition", "I sigma_k^1 chi = -I sigma_k^2 chi", "Isig_k^1 chi", "-Isig_k^2 chi", 1e-12)
def _singcond(rng):
    chi = singlet_chi()
    return worst(err(i_sigma(k, 1) * chi, -(i_sigma(k, 2) * chi)) for k in (1, 2, 3))


@check("msta", "chi_norm", "(chi, chi)_s = 1", "(chi,chi)_s", "1", 1e-12)
def _chinorm(rng):
    return err(quantum_inner(singlet_chi(), singlet_chi()), 1.0)


@check("msta", "singlet_rotation", "M^1 chi = M~^2 chi and R^1 R^2 chi = chi", "M^1 chi", "M~^2 chi", 1e-10)
def _singrot(rng):
    chi = singlet_chi()
    out = []
    for _ in range(50):
        m = sampling.pauli_rotor(rng)
        out.append(err(lift(m, 1) * chi, lift(reverse(m), 2) * chi))
        out.append(err(lift(m, 1) * lift(m, 2) * chi, chi))
    return worst(out)


@check("msta", "zeta_norm", "(zeta, zeta)_s = 1", "(zeta,zeta)_s", "1", 1e-12)
def _zetanorm(rng):
    return err(quantum_inner(singlet_zeta(), singlet_zeta()), 1.0)


@check("msta", "zeta_exchange", "M^1 zeta = M~^2 zeta for even M", "M^1 zeta", "M~^2 zeta", 1e-10)
def _zexch(rng):
    z = singlet_zeta()
    return worst(
        err(lift(m, 1) * z, lift(reverse(m), 2) * z)
        for m in (sampling.even_element(rng) for _ in range(50))
    )


@check("msta", "zeta_lorentz", "R^1 R^2 zeta = zeta", "R^1 R^2 zeta", "zeta", 1e-9)
def _zlor(rng):
    z = singlet_zeta()
    return worst(
        err(lift(r, 1) * lift(r, 2) * z, z) for r in (sampling.rotor(rng) for _ in range(50))
    )


@check("msta", "zeta_split", "zeta = eps + eps_bar", "zeta", "eps + eps_bar", 1e-12)
def _zsplit(rng):
    z = singlet_zeta()
    return max(err(z, EPS() + EPS_BAR()),
               err(z * ideal_projector(1, 1), EPS()), err(z * ideal_projector(-1, 1), EPS_BAR()))


@check("msta", "massless_norms", "(eps, eps)_s = (eps_bar, eps_bar)_s = 0", "(eps,eps)_s, (eps_bar,eps_bar)_s", "0", 1e-12)
def _mnorm(rng):
    return max(err(quantum_inner(EPS(), EPS())), err(quantum_inner(EPS_BAR(), EPS_BAR())))


@check("msta", "eps_conjugation", "eps = eps_bar sigma_1^1 sigma_1^2", "eps", "eps_bar s1^1 s1^2", 1e-12)
def _econj(rng):
    return err(EPS(), EPS_BAR() * conjugation_operator())


@check("msta", "eps_imaginary", "eps I sigma_3 = I eps, eps_bar I sigma_3 = -I eps_bar",
       "eps Isig3, eps_bar Isig3", "I eps, -I eps_bar", 1e-12)
def _eimag(rng):
    out = []
    for s in (1, 2):
        out.append(err(EPS() * i_sigma(3, s), pseudoscalar(s) * EPS()))
        out.append(err(EPS_BAR() * i_sigma(3, s), -(pseudoscalar(s) * EPS_BAR())))
    return worst(out)


@check("msta", "eps_lorentz", "R^1 R^2 eps = eps", "R^1 R^2 eps", "eps", 1e-9)
def _elor(rng):
    out = []
    for _ in range(20):
        r = sampling.rotor(rng)
        rr = lift(r, 1) * lift(r, 2)
        out += [err(rr * EPS(), EPS()), err(rr * EPS_BAR(), EPS_BAR())]
    return worst(out)


@check("msta", "inner_conjugate_symmetry", "(phi, psi)_s = conj (psi, phi)_s",
       "(phi,psi)_s", "conj((psi,phi)_s)", 1e-10)
def _csym(rng):
    out = []
    for _ in range(50):
        a = sampling.multivector(rng, 10) * E()
        b = sampling.multivector(rng, 10) * E()
        out.append(err(quantum_inner(b, a), quantum_inner(a, b).conjugate()))
    return worst(out)


# -- conformal ------------------------------------------------------------

@check("conformal", "origin", "psi_0 = eps_bar", "conformal_point(0)", "eps_bar", 0.0)
def _origin(rng):
    return err(conformal_point(FourVector()).state, EPS_BAR())


@check("conformal", "nilpotent", "r^(r^(phi)) = 0", "r^(r^(phi))", "0", 1e-12)
def _nil(rng):
    out = []
    for _ in range(30):
        k = sampling.complex_four_vector(rng)
        phi = sampling.multivector(rng, 10)
        out.append(err(translation_generator(k, translation_generator(k, phi, 1), 1)))
    return worst(out)


@check("conformal", "translation_additive", "T_b T_a = T_(a+b)", "T_b(T_a(phi))", "T_(a+b)(phi)", 1e-12)
def _add(rng):
    out = []
    for _ in range(30):
        a, b = sampling.four_vector(rng), sampling.four_vector(rng)
        phi = sampling.multivector(rng, 10)
        out.append(err(translate(translate(phi, a, 1), b, 1), translate(phi, a + b, 1)))
    return worst(out)


@check("conformal", "explicit_expansion", "T^1 T^2 eps_bar = -kk eps - k^1 eps_bar Ig3^1 - k^2 eps_bar Ig3^2 + eps_bar",
       "conformal_point(k)", "explicit_point(k)", 1e-12)
def _expl(rng):
    out = []
    for i in range(50):
        k = sampling.complex_four_vector(rng) if i % 2 else ComplexFourVector(sampling.four_vector(rng))
        out.append(err(conformal_point(k).state, explicit_point(k)))
    return worst(out)


@check("conformal", "nullity", "(psi_r, psi_r)_s = 0", "(psi_r,psi_r)_s", "0", 1e-10)
def _null(rng):
    return worst(
        err(quantum_inner(p, p))
        for p in (conformal_point(sampling.four_vector(rng)).state for _ in range(50))
    )


@check("conformal", "round_trip", "conformal_point(extract(psi_r)) = psi_r", "rebuilt state", "state", 1e-10)
def _rt(rng):
    out = []
    for _ in range(50):
        p = conformal_point(sampling.four_vector(rng), rng.uniform(0.5, 2.0))
        c = extract_coordinates(p)
        T, V, W = c.six[:3]
        out.append(err(conformal_point(c.four, V - W).state, p.state))
        out.append(abs(c.null_cone_residual))
    return worst(out)


@check("conformal", "flat_kernel", "(P_q, P_r)_s = -1/2 (q-r).(q-r)", "(P_q,P_r)_s", "-(q-r)^2/2", 1e-9)
def _flat(rng):
    out = []
    for _ in range(50):
        q, r = sampling.four_vector(rng), sampling.four_vector(rng)
        val = quantum_inner(conformal_point(q).state, conformal_point(r).state)
        out.append(err(val, -0.5 * minkowski_dot(q - r, q - r)))
    return worst(out)


# -- twistor --------------------------------------------------------------

@check("twistor", "origin_rays", "R_N at origin = eps_bar {pi,eta}*", "valence2(Z_N, X_N)", "eps_bar c", 1e-12)
def _orays(rng):
    out = []
    for _ in range(30):
        z, x = sampling.null_twistor(rng), sampling.null_twistor(rng)
        r2 = valence2(z, x)
        out.append(err(r2, times_complex(EPS_BAR(), spin_frame_factor(r2))))
        out.append(err(2.0 * quantum_inner(EPS(), r2), spin_frame_factor(r2)))
    return worst(out)


@check("twistor", "antisymmetry", "valence2(Z, X) = -valence2(X, Z)", "valence2(Z,X)", "-valence2(X,Z)", 0.0)
def _antisym(rng):
    out = []
    for _ in range(20):
        z = sampling.incident_pair(rng, sampling.complex_four_vector(rng))[0]
        x = sampling.incident_pair(rng, sampling.complex_four_vector(rng))[1]
        k = sampling.four_vector(rng)
        out.append(err(valence2(z, x, k), -valence2(x, z, k)))
    return worst(out)


@check("twistor", "translation_covariance", "R^12 = e^-r^1 e^-r^2 R_org", "valence2 at r", "T_-r^1 T_-r^2 R_org", 1e-9)
def _cov(rng):
    out = []
    for _ in range(30):
        z, x = sampling.incident_pair(rng, sampling.complex_four_vector(rng))
        k = ComplexFourVector(sampling.four_vector(rng), sampling.four_vector(rng) if rng.random() < 0.5 else FourVector())
        minus = ComplexFourVector(-k.r, -k.s)
        org = valence2(z, x)
        moved = translate(translate(org, minus, 1), minus, 2)
        out.append(err(valence2(z, x, k), moved))
    return worst(out)


@check("twistor", "ideal_projections", "R_N projections = -|r|^2 eps c, r^1 eps_bar Ig3^1 c, r^2 eps_bar Ig3^2 c, eps_bar c",
       "R_N P P", "closed forms", 1e-10)
def _iproj(rng):
    from .sta import i_gamma3
    out = []
    for _ in range(30):
        z, x = sampling.null_twistor(rng), sampling.null_twistor(rng)
        r = sampling.four_vector(rng)
        r2 = valence2(z, x, r)
        c = spin_frame_factor(r2)
        pp, pm, mp, mm = ideal_projections(r2)
        out.append(err(pp, times_complex(EPS(), -r.square() * c)))
        out.append(err(pm, times_complex(embed_vector(r, 1) * EPS_BAR() * i_gamma3(1), c)))
        out.append(err(mp, times_complex(embed_vector(r, 2) * EPS_BAR() * i_gamma3(2), c)))
        out.append(err(mm, times_complex(EPS_BAR(), c)))
        out.append(err(pp + pm + mp + mm, r2))
    return worst(out)


@check("twistor", "solve_real", "primary parts vanish at a real intersection", "solve_incidence", "(q, 0)", 1e-9)
def _sreal(rng):
    out = []
    for _ in range(50):
        q = ComplexFourVector(sampling.four_vector(rng))
        z, x = sampling.incident_pair(rng, q)
        k = solve_incidence(z, x)
        out.append(max(err(a, b) for a, b in zip(k.r + k.s, q.r + q.s)))
    return worst(out)


@check("twistor", "solve_complex", "primary parts vanish at a complex intersection", "solve_incidence", "(r, s)", 1e-9)
def _scomplex(rng):
    out = []
    for _ in range(50):
        q = sampling.complex_four_vector(rng)
        z, x = sampling.incident_pair(rng, q)
        k = solve_incidence(z, x)
        out.append(max(err(a, b) for a, b in zip(k.r + k.s, q.r + q.s)))
    return worst(out)


@check("twistor", "kg_coefficients", "R_org = (vs + I nu) eps + V~ terms + (c - I d) eps_bar",
       "bargmann_wigner_decompose(R_org)", "kg_from_incidence(k, c)", 1e-10)
def _kg(rng):
    out = []
    for i in range(30):
        q = sampling.complex_four_vector(rng) if i % 2 else ComplexFourVector(sampling.four_vector(rng))
        z, x = sampling.incident_pair(rng, q)
        r2 = valence2(z, x)
        got = bargmann_wigner_decompose(r2)
        want = kg_from_incidence(q, spin_frame_factor(r2))
        out.append(max(abs(a - b) for a, b in zip(
            [got.alpha, got.beta, got.theta, got.mu, *got.u, *got.v],
            [want.alpha, want.beta, want.theta, want.mu, *want.u, *want.v])))
    return worst(out)


@check("twistor", "uncharged_iff_real", "|beta| < tol <=> |s| < tol", "charged", "complex", 0.0)
def _charge(rng):
    mismatches = 0
    for i in range(100):
        q = sampling.complex_four_vector(rng) if i % 2 else ComplexFourVector(sampling.four_vector(rng))
        z, x = sampling.incident_pair(rng, q)
        r2 = valence2(z, x)
        diag = is_event(r2)
        uncharged = abs(charge(r2)) < 1e-9
        real = diag.s.norm_inf() < 1e-9
        mismatches += (uncharged != real) + (diag.event != real)
    return float(mismatches)


# -- cosmo ----------------------------------------------------------------

def _const(space_a, b, value):
    return err(quantum_inner(space_a, b), value)


@check("cosmo", "I_M_origin", "(I_M, psi_0)_s = 1/2", "(I_M,psi_0)_s", "1/2", 1e-12)
def _imo(rng):
    return _const(cosmo.infinity_twistor("minkowski"), conformal_point(FourVector()).state, 0.5)


@check("cosmo", "I_dS_norm", "(I_dS, I_dS)_s = 1", "(I_dS,I_dS)_s", "1", 1e-12)
def _ids(rng):
    i = cosmo.infinity_twistor("ds")
    return _const(i, i, 1.0)


@check("cosmo", "I_adS_norm", "(I_adS, I_adS)_s = -1", "(I_adS,I_adS)_s", "-1", 1e-12)
def _iads(rng):
    i = cosmo.infinity_twistor("ads")
    return _const(i, i, -1.0)


@check("cosmo", "I_M_B", "(I_M, B)_s = 0", "(I_M,B)_s", "0", 1e-12)
def _imb(rng):
    return _const(cosmo.infinity_twistor("minkowski"), cosmo.bang_twistor(), 0.0)


@check("cosmo", "B_norm", "(B, B)_s = 1/4", "(B,B)_s", "1/4", 1e-12)
def _bb(rng):
    return _const(cosmo.bang_twistor(), cosmo.bang_twistor(), 0.25)


@check("cosmo", "frw_k1", "(I, I)_s = 1/8, (I-bar, I)_s = 0, B = I + I-bar", "k=1 relations", "1/8, 0, B", 1e-12)
def _k1(rng):
    i, ib = cosmo.frw_twistors(1)
    return max(_const(i, i, 0.125), _const(ib, i, 0.0), err(i + ib, cosmo.bang_twistor()))


@check("cosmo", "frw_km1", "(I, J)_s = 1/8, B = I + J", "k=-1 relations", "1/8, B", 1e-12)
def _km1(rng):
    i, j = cosmo.frw_twistors(-1)
    return max(_const(i, j, 0.125), err(i + j, cosmo.bang_twistor()))


@check("cosmo", "finite_point", "(I, R_N)_s = c/2, (1-|r|^2) c/2, -(1+|r|^2) c/2", "(I_X,R_N)_s", "closed forms", 1e-10)
def _finite(rng):
    out = []
    for _ in range(50):
        r = sampling.four_vector(rng)
        r2 = cosmo.null_point(r)
        out.append(err(cosmo.finite_point_condition("minkowski", r2), 0.5))
        out.append(err(cosmo.finite_point_condition("ds", r2), 0.5 * (1 - r.square())))
        out.append(err(cosmo.finite_point_condition("ads", r2), -0.5 * (1 + r.square())))
    return worst(out)


@check("cosmo", "dS_reference", "d_dS(0, 0.5 g0) = ln 3", "distance(ds)", "ln 3", 1e-9)
def _dsref(rng):
    q, r = conformal_point(FourVector()).state, conformal_point(FourVector(0.5, 0, 0, 0)).state
    return max(abs(cosmo.distance("ds", q, r) - math.log(3.0)),
               abs(cosmo.closed_form_distance("ds", (0, 0, 0, 0), (0.5, 0, 0, 0)) - math.log(3.0)))


@check("cosmo", "adS_reference", "d_adS(0, 0.5 g0) = arccos 0.6", "distance(ads)", "acos(0.6)", 1e-9)
def _adsref(rng):
    q, r = conformal_point(FourVector()).state, conformal_point(FourVector(0.5, 0, 0, 0)).state
    return max(abs(cosmo.distance("ads", q, r) - math.acos(0.6)),
               abs(cosmo.closed_form_distance("ads", (0, 0, 0, 0), (0.5, 0, 0, 0)) - math.acos(0.6)))


@check("cosmo", "minkowski_interval", "-(Q,R)_s / (2 (I,Q)*_s (I,R)_s) = (q-r).(q-r)", "distance(minkowski)", "(q-r)^2", 1e-9)
def _mink(rng):
    out = []
    for _ in range(50):
        q, r = sampling.four_vector(rng), sampling.four_vector(rng)
        cq = complex(rng.uniform(0.5, 2), rng.uniform(-1, 1))
        cr = complex(rng.uniform(0.5, 2), rng.uniform(-1, 1))
        d = cosmo.distance("minkowski", cosmo.null_point(q, cq), cosmo.null_point(r, cr))
        out.append(abs(d - minkowski_dot(q - r, q - r)))
    return worst(out)


@check("cosmo", "distance_crosscheck", "twistor ratio = coordinate form", "distance", "closed_form_distance", 1e-8)
def _dcross(rng):
    out = []
    for space in ("ds", "ads"):
        n = 0
        while n < 25:
            q, r = sampling.four_vector(rng, 0.5), sampling.four_vector(rng, 0.5)
            pq, pr = cosmo.null_point(q), cosmo.null_point(r)
            # skip pairs where acosh/acos is ill-conditioned or off the real branch
            x = cosmo.distance_argument(space, pq, pr).real
            if (x < 1 + 1e-6) if space == "ds" else (abs(x) > 1 - 1e-6):
                continue
            want = cosmo.closed_form_distance(space, q, r)
            got = cosmo.distance(space, pq, pr)
            out.append(abs(got - want))
            n += 1
    return worst(out)


@check("cosmo", "bang", "(B, R_N)_s = -t/2", "(B,R_N)_s", "-t/2", 1e-10)
def _bang(rng):
    out = []
    for _ in range(50):
        r = sampling.four_vector(rng, 2.0)
        out.append(err(cosmo.bang_time(cosmo.null_point(r)), -0.5 * r.t))
    return worst(out)


@check("cosmo", "frw_point", "(I, R_N)_s = (-t - (1-|r|^2)/2 j)/4 [k=1], (-t + (1+|r|^2)/2)/4 [k=-1]",
       "(I,R_N)_s", "closed forms", 1e-10)
def _frwp(rng):
    out = []
    for _ in range(50):
        r = sampling.four_vector(rng)
        r2 = cosmo.null_point(r)
        for k in (1, -1):
            val = quantum_inner(cosmo.frw_twistors(k)[0], r2)
            want = cosmo.frw_point_formula(k, r)
            out += [abs(val.real - want.real), abs(val.imag - want.imag)]
    return worst(out)


def select(filter_: str | None = None) -> list[Check]:
    checks = sorted(REGISTRY, key=lambda c: c.id)
    if not filter_:
        return checks
    return [c for c in checks if c.module == filter_ or filter_ in c.id]


def run_all(seed: int, filter_: str | None = None, tolerance: float | None = None) -> list[CheckRecord]:
    return [c.run(seed, tolerance) for c in select(filter_)]
