"""Verification suites: every operator identity, spectrum formula, and norm
law checked at desk scale with explicit deviations and tolerances.

Checks are pure functions of a VerifyConfig; results carry (deviation,
tolerance, passed) so reports stay self-describing.  Exact checks use
tolerance 0 and count mismatches.  A corrupt hook is provided as a negative
control for the reporting pipeline: it inflates the targeted check's
deviation and must flip the exit status.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import algebra, dynamics, ft, imagscale
from .algebra import (
    B1_ANN,
    B1_CRE,
    B2_ANN,
    B2_CRE,
    ExactScalar,
    LadderPoly,
    U_HW,
    U_IHL,
)
from .errors import BatemanError, DomainError, SeriesDivergence
from .fock import (
    build_hamiltonian,
    build_ladder,
    commutator,
    interior_deviation,
    interior_projector,
    matrix_exp,
    position_operators,
)
from .params import PhysicalParams, derive_params

__all__ = ["CheckResult", "VerifyConfig", "SUITE_NAMES", "run_suite", "all_passed"]

SUITE_NAMES = ("algebra", "ft", "is", "dynamics")


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    description: str
    deviation: float
    tolerance: float
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class VerifyConfig:
    params: PhysicalParams
    n_max: int | None = None      # overrides each check's default truncation
    margin: int = 2
    tol_scale: float = 1.0
    theta: float = 0.3            # series-safe rotation angle for vacuum/Gram checks
    seed: int = 20260823
    corrupt_check: str | None = None

    def __post_init__(self):
        if self.n_max is not None and self.n_max < 4:
            raise DomainError(f"verify needs n_max >= 4, got {self.n_max}")
        if self.tol_scale <= 0:
            raise DomainError(f"tol_scale must be positive, got {self.tol_scale}")

    def resolve(self, default_n_max: int) -> int:
        return self.n_max if self.n_max is not None else default_n_max

    def eff_margin(self, n_max: int) -> int:
        return max(1, min(self.margin, n_max - 2))


@lru_cache(maxsize=16)
def _ladder(n_max: int):
    return build_ladder(n_max)


def _finish(cfg: VerifyConfig, check_id: str, description: str, deviation: float,
            tolerance: float, detail: dict | None = None) -> CheckResult:
    tolerance = tolerance * cfg.tol_scale
    if cfg.corrupt_check == check_id:
        deviation = deviation + 10.0 * tolerance + 1.0
        detail = dict(detail or {}, corrupted=True)
    return CheckResult(
        check_id=check_id,
        description=description,
        deviation=float(deviation),
        tolerance=float(tolerance),
        passed=bool(deviation <= tolerance),
        detail=detail or {},
    )


# ---------------------------------------------------------------------------
# algebra suite


def check_params_examples(cfg: VerifyConfig) -> CheckResult:
    dev = 0.0
    mismatch = 0
    p = derive_params(1.0, 1e-9, 1.0)
    dev = max(dev, abs(p.omega - 1.0), abs(p.lam - 5e-10))
    p = derive_params(1.0, 1.0, 1.25)
    dev = max(dev, abs(p.omega - 1.0), abs(p.lam - 0.5))
    try:
        derive_params(1.0, 2.0, 1.0)  # 4mk == gamma^2 boundary must be rejected
        mismatch += 1
    except BatemanError:
        pass
    for q in (cfg.params, derive_params(1.3, 0.7, 2.1)):
        for s in (-q.lam + 1j * q.omega, -q.lam - 1j * q.omega):
            dev = max(dev, abs(q.m * s * s + q.gamma * s + q.k))
        for s in (q.lam + 1j * q.omega, q.lam - 1j * q.omega):
            dev = max(dev, abs(q.m * s * s - q.gamma * s + q.k))
        dev = max(dev, abs(q.omega**2 + q.lam**2 - q.k / q.m) / (q.k / q.m))
    return _finish(cfg, "algebra.params", "parameter derivation and quadratic roots",
                   dev + mismatch, 1e-10)


def check_normal_order(cfg: VerifyConfig) -> CheckResult:
    b1 = LadderPoly.symbol(B1_ANN)
    b1d = LadderPoly.symbol(B1_CRE)
    mismatch = 0
    if (b1 * b1d).normal_order() != (b1d * b1 + LadderPoly.one()):
        mismatch += 1
    if (b1 * LadderPoly.symbol(B2_CRE)).normal_order() != LadderPoly.word((B2_CRE, B1_ANN)):
        mismatch += 1
    quartic = LadderPoly.word((B1_ANN, B1_ANN, B1_CRE, B1_CRE)).normal_order()
    expected = (
        LadderPoly.word((B1_CRE, B1_CRE, B1_ANN, B1_ANN))
        + LadderPoly.word((B1_CRE, B1_ANN), 4)
        + LadderPoly.word((), 2)
    )
    if quartic != expected:
        mismatch += 1
    messy = ft.ft_generator_poly() * ft.ft_hamiltonian_formal("+") + LadderPoly.word(
        (B2_ANN, B1_ANN, B2_CRE, B1_CRE), Fraction(3, 7)
    )
    once = messy.normal_order()
    if once.normal_order() != once:
        mismatch += 1
    return _finish(cfg, "algebra.normal-order", "normal ordering examples and idempotence",
                   mismatch, 0.0)


def check_vacuum_pairing(cfg: VerifyConfig) -> CheckResult:
    one = LadderPoly.one()
    mismatch = 0
    if algebra.vacuum_pairing(one, one) != ExactScalar.of(1):
        mismatch += 1
    if algebra.vacuum_pairing(LadderPoly.symbol(B1_ANN), LadderPoly.symbol(B1_CRE)) != ExactScalar.of(1):
        mismatch += 1
    bra = LadderPoly.word((B1_ANN, B1_ANN, B2_ANN))
    ket = LadderPoly.word((B1_CRE, B1_CRE, B2_CRE))
    if algebra.vacuum_pairing(bra, ket) != ExactScalar.of(2):
        mismatch += 1
    return _finish(cfg, "algebra.vacuum-pairing", "vacuum pairing examples (n1! n2! weights)",
                   mismatch, 0.0)


def check_biorthonormality(cfg: VerifyConfig) -> CheckResult:
    one = LadderPoly.one()
    mismatch = 0
    for m1 in range(4):
        for m2 in range(4):
            for n1 in range(4):
                for n2 in range(4):
                    got = algebra.basis_matrix_element(m1, m2, one, n1, n2)
                    want = ExactScalar.of(1 if (m1, m2) == (n1, n2) else 0)
                    if got != want:
                        mismatch += 1
    return _finish(cfg, "algebra.biorthonormality", "pairing of basis monomials is Kronecker delta",
                   mismatch, 0.0)


def check_matrix_element_examples(cfg: VerifyConfig) -> CheckResult:
    mismatch = 0
    number1 = LadderPoly.word((B1_CRE, B1_ANN))
    if algebra.basis_matrix_element(3, 2, number1, 3, 2) != ExactScalar.of(3):
        mismatch += 1
    h_plus = ft.ft_hamiltonian_formal("+")
    want = ExactScalar.unit(U_HW) + ExactScalar.unit(U_IHL, 2)
    if algebra.basis_matrix_element(1, 0, h_plus, 1, 0) != want:
        mismatch += 1
    if algebra.basis_matrix_element(2, 0, h_plus, 1, 1) != ExactScalar.zero():
        mismatch += 1
    return _finish(cfg, "algebra.matrix-element", "number operator and diagonal H elements",
                   mismatch, 0.0)


def check_commutators_interior(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    space = lad.space
    eye = np.eye(space.dim, dtype=complex)
    a1 = lad.a1
    detail = {}
    if cfg.corrupt_check == "algebra.commutators.interior":
        a1 = a1.copy()
        a1[0, 1] += 1e-3
        detail["corrupted"] = True
    dev = 0.0
    pairs = {
        ("a1", "a1_dag"): (a1, lad.a1_dag, eye),
        ("a2", "a2_dag"): (lad.a2, lad.a2_dag, eye),
        ("a1", "a2_dag"): (a1, lad.a2_dag, 0 * eye),
        ("a2", "a1_dag"): (lad.a2, lad.a1_dag, 0 * eye),
        ("a1", "a2"): (a1, lad.a2, 0 * eye),
        ("a1_dag", "a2_dag"): (lad.a1_dag, lad.a2_dag, 0 * eye),
    }
    for (x, y, want) in pairs.values():
        dev = max(dev, interior_deviation(commutator(x, y), want, space, 1))
    cross = float(np.max(np.abs(commutator(lad.a1, lad.a2_dag))))
    detail["cross_mode_exact"] = cross
    dev = max(dev, cross)
    return _finish(cfg, "algebra.commutators.interior",
                   "ladder commutators on the interior projection", dev, 1e-12, detail)


def _exact_single_mode_defect(n_top: int) -> int:
    """Mismatch count for [a, a+] = I - (N+1)|N><N| in exact radical arithmetic."""
    size = n_top + 1
    zero = ExactScalar.zero()
    low = [[zero] * size for _ in range(size)]
    for m in range(size - 1):
        low[m][m + 1] = ExactScalar.surd(1, m + 1)
    raise_ = [[low[c][r] for c in range(size)] for r in range(size)]

    def mul(a, b):
        return [
            [sum((a[r][k] * b[k][c] for k in range(size)), zero) for c in range(size)]
            for r in range(size)
        ]

    comm_lr = mul(low, raise_)
    comm_rl = mul(raise_, low)
    mismatch = 0
    for r in range(size):
        for c in range(size):
            got = comm_lr[r][c] - comm_rl[r][c]
            if r == c:
                want = ExactScalar.of(-n_top if r == n_top else 1)
            else:
                want = zero
            if got != want:
                mismatch += 1
    return mismatch


def check_boundary_defect(cfg: VerifyConfig) -> CheckResult:
    n_top = cfg.resolve(8)
    mismatch = _exact_single_mode_defect(n_top)
    # float route for the same structure
    low = np.diag(np.sqrt(np.arange(1, n_top + 1, dtype=float)), k=1)
    comm = low @ low.T - low.T @ low
    want = np.eye(n_top + 1)
    want[n_top, n_top] = -n_top
    float_dev = float(np.max(np.abs(comm - want)))
    if float_dev > 1e-13:
        mismatch += 1
    return _finish(cfg, "algebra.boundary-defect",
                   "truncated [a, a+] equals I - (N+1)|N><N| exactly", mismatch, 0.0,
                   {"float_deviation": float_dev})


def check_h_structure(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    ham = build_hamiltonian(lad, cfg.params)
    herm_dev = float(np.max(np.abs(ham.h - ham.h.conj().T)))
    mismatch = 0
    if herm_dev > 1e-13:
        mismatch += 1
    # complex eigenvalues coexist with a Hermitian truncation because the
    # basis change e^{theta X} is non-unitary (X itself is Hermitian)
    x = ft.generator_matrix(lad)
    s = matrix_exp(0.3 * x)
    nonunitary = float(np.max(np.abs(s.conj().T @ s - np.eye(lad.space.dim))))
    if nonunitary < 0.1:
        mismatch += 1
    # H0 and H1 commute on the interior
    comm_dev = interior_deviation(
        commutator(ham.h0, ham.h1), np.zeros_like(ham.h), lad.space, cfg.eff_margin(n_max)
    )
    dev = mismatch + (comm_dev if comm_dev > 1e-10 else 0.0)
    return _finish(cfg, "algebra.h-structure",
                   "H Hermitian when truncated; basis change non-unitary; [H0,H1]=0",
                   dev, 0.0, {"hermiticity": herm_dev, "nonunitarity": nonunitary,
                              "h0_h1_commutator": comm_dev})


def check_oracle_cross_validation(cfg: VerifyConfig) -> CheckResult:
    rng = random.Random(cfg.seed)
    dev = 0.0
    for trial in range(200):
        poly = algebra.random_poly(rng, max_degree=6)
        degree = max(poly.degree(), 0)
        lad = _ladder(max(2, degree + 2))
        exact = algebra.vacuum_pairing(LadderPoly.one(), poly).to_complex()
        numeric = algebra.matrix_vacuum_pairing(poly, lad)
        dev = max(dev, abs(exact - numeric))
        if trial % 10 == 0:
            m = (rng.randint(0, 2), rng.randint(0, 2))
            n = (rng.randint(0, 2), rng.randint(0, 2))
            elem = algebra.basis_matrix_element(m[0], m[1], poly, n[0], n[1]).to_complex()
            big = _ladder(degree + 5)
            mat = algebra.to_matrix(poly, big)
            ket = np.zeros(big.space.dim, dtype=complex)
            ket[big.space.index(*n)] = 1.0
            bra = np.zeros(big.space.dim, dtype=complex)
            bra[big.space.index(*m)] = 1.0
            dev = max(dev, abs(elem - bra @ (mat @ ket)))
    return _finish(cfg, "algebra.cross-validation",
                   "200 random polynomials: exact oracle vs truncated matrices", dev, 1e-12)


ALGEBRA_SUITE = [
    check_params_examples,
    check_normal_order,
    check_vacuum_pairing,
    check_biorthonormality,
    check_matrix_element_examples,
    check_commutators_interior,
    check_boundary_defect,
    check_h_structure,
    check_oracle_cross_validation,
]


# ---------------------------------------------------------------------------
# ft suite


def _ft_spectrum_sweep(branch: int) -> int:
    h = ft.ft_hamiltonian_from_plain(branch)
    mismatch = 0
    states = [(n1, n2) for n1 in range(6) for n2 in range(6) if n1 + n2 <= 5]
    for (n1, n2) in states:
        want = ft.ft_eigenvalue(n1, n2, branch)
        if (want.p, want.q) != (n1 - n2, branch * (n1 + n2 + 1)):
            mismatch += 1
        for (m1, m2) in states:
            got = algebra.basis_matrix_element(m1, m2, h, n1, n2)
            expect = want.exact() if (m1, m2) == (n1, n2) else ExactScalar.zero()
            if got != expect:
                mismatch += 1
    return mismatch


def check_ft_spectrum(cfg: VerifyConfig) -> CheckResult:
    mismatch = _ft_spectrum_sweep(+1) + _ft_spectrum_sweep(-1)
    return _finish(cfg, "ft.spectrum",
                   "exact eigenvalues hw(n1-n2) +- ihl(n1+n2+1), n1+n2 <= 5, both branches",
                   mismatch, 0.0)


def check_ft_derivation(cfg: VerifyConfig) -> CheckResult:
    mismatch = 0
    for branch in (+1, -1):
        if ft.ft_hamiltonian_from_plain(branch) != ft.ft_hamiltonian_formal(branch):
            mismatch += 1
    return _finish(cfg, "ft.h-derivation",
                   "substituted H normal-orders to the diagonal bar form exactly",
                   mismatch, 0.0)


def check_ft_reconstruction(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    t0 = ft.ft_transform(0.0, lad)
    dev0 = max(
        float(np.max(np.abs(t0.ann1 - lad.a1))),
        float(np.max(np.abs(t0.cre2 - lad.a2_dag))),
        float(np.max(np.abs(t0.cre1 - lad.a1_dag))),
        float(np.max(np.abs(t0.ann2 - lad.a2))),
    )
    tq = ft.ft_transform(math.pi / 4, lad)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    devq = float(np.max(np.abs(tq.ann1 - inv_sqrt2 * (lad.a1 - lad.a2_dag))))
    dev = max(dev0, devq)
    return _finish(cfg, "ft.reconstruction",
                   "bar operators at theta=0 and theta=pi/4 match closed combinations",
                   dev, 1e-14)


def check_ft_similarity(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(24)
    lad = _ladder(n_max)
    thetas = sorted({0.1, cfg.theta})
    # top-corner truncation error decays like tan^{2(n_max-1-w)}, so the
    # comparable block shrinks with the resolution
    window = min(6, max(0, (n_max - 8) // 2))
    dev = max(
        ft.similarity_deviation(ft.ft_transform(theta, lad), window=window)
        for theta in thetas
    )
    return _finish(cfg, "ft.similarity",
                   "e^{theta X} a e^{-theta X} matches linear combinations (low block)",
                   dev, 1e-8, detail={"thetas": list(thetas), "window": window,
                                      "n_max": n_max})


def check_exp_inverse(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(8)
    lad = _ladder(n_max)
    x = ft.generator_matrix(lad)
    u = matrix_exp(cfg.theta * x)
    u_inv = matrix_exp(-cfg.theta * x)
    raw = float(np.max(np.abs(u @ u_inv - np.eye(lad.space.dim))))
    # ||e^{theta X}|| grows like e^{theta n_max}; the resolution-independent
    # statement is the residual relative to the factor norms
    kappa = float(np.linalg.norm(u, np.inf) * np.linalg.norm(u_inv, np.inf))
    return _finish(cfg, "ft.exp-inverse", "exp(theta X) exp(-theta X) = identity",
                   raw / kappa, 1e-12, detail={"raw_deviation": raw, "kappa": kappa})


def check_ft_commutators(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    space = lad.space
    eye = np.eye(space.dim, dtype=complex)
    dev = 0.0
    for theta in (cfg.theta, math.pi / 4, -math.pi / 4):
        tr = ft.ft_transform(theta, lad)
        dev = max(dev, interior_deviation(commutator(tr.ann1, tr.cre1), eye, space, 1))
        dev = max(dev, interior_deviation(commutator(tr.ann2, tr.cre2), eye, space, 1))
        dev = max(dev, interior_deviation(commutator(tr.ann1, tr.cre2), 0 * eye, space, 1))
        dev = max(dev, interior_deviation(commutator(tr.ann1, tr.ann2), 0 * eye, space, 1))
    return _finish(cfg, "ft.commutators",
                   "bar-mode commutation relations on the interior", dev, 1e-12)


def check_ft_identity_quarter(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    margin = cfg.eff_margin(n_max)
    dev = 0.0
    for sign in (+1, -1):
        tr = ft.ft_transform(sign * math.pi / 4, lad)
        rep = ft.h1_in_bar(tr, cfg.params, margin=margin)
        dev = max(dev, rep.h0_deviation, rep.h1_deviation, rep.reduced_deviation or 0.0)
    return _finish(cfg, "ft.h-identity.quarter",
                   "H0/H1 equal their bar number-operator forms at theta=+-pi/4",
                   dev, 1e-10 * lad.space.dim)


def check_ft_identity_generic(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    tr = ft.ft_transform(cfg.theta, lad)
    rep = ft.h1_in_bar(tr, cfg.params, margin=cfg.eff_margin(n_max))
    dev = max(rep.h0_deviation, rep.h1_deviation)
    return _finish(cfg, "ft.h-identity.generic",
                   "H0/H1 equal the full cos2theta/sin2theta bar expressions",
                   dev, 1e-10 * lad.space.dim)


def check_ft_vacuum(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(24)
    lad = _ladder(n_max)
    ket, bra = ft.ft_vacuum_series(cfg.theta, lad.space)
    tail = abs(math.tan(cfg.theta)) ** (2 * (n_max + 1))
    dev = abs(bra @ ket - 1.0)
    mismatch = 0
    k0, b0 = ft.ft_vacuum_series(0.0, lad.space)
    unit = np.zeros(lad.space.dim)
    unit[lad.space.index(0, 0)] = 1.0
    if np.max(np.abs(k0 - unit)) != 0.0 or np.max(np.abs(b0 - unit)) != 0.0:
        mismatch += 1
    try:
        ft.ft_vacuum_series(math.pi / 4, lad.space)
        mismatch += 1
    except SeriesDivergence:
        pass
    return _finish(cfg, "ft.vacuum-series",
                   "vacuum pairing telescopes to 1; divergence signaled at pi/4",
                   dev + mismatch, max(1e-12, 2.0 * tail),
                   {"geometric_tail": tail})


def check_ft_gram(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(24)
    lad = _ladder(n_max)
    tr = ft.ft_transform(cfg.theta, lad)
    q_cap = min(3, max(0, (n_max - 2) // 2))
    gram = ft.ft_gram(tr, q_cap)
    dev = float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
    # the series tail per rung is tan^2, but the monomial normalization of the
    # worst pair (2*q_cap rungs up) gives back roughly one power per rung;
    # the single power with a x10 cushion bounds the measured gap at every n_max
    tail = abs(math.tan(cfg.theta)) ** (n_max + 1 - 2 * q_cap)
    return _finish(cfg, "ft.gram",
                   f"biorthonormality Gram is identity for occupations <= {q_cap}",
                   dev, max(1e-10, 10.0 * tail))


def check_ft_two_route(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(24)
    lad = _ladder(n_max)
    tr = ft.ft_transform(cfg.theta, lad)
    cut = n_max - 2
    mask = np.array(
        [1.0 if (n1 <= cut and n2 <= cut) else 0.0 for n1, n2 in lad.space.iter_occupations()]
    )
    dev = 0.0
    for (n1, n2) in ((0, 0), (1, 0), (2, 1)):
        ket_a, bra_a = ft.ft_basis(tr, n1, n2)
        ket_b, bra_b = ft.ft_basis_similarity(tr, n1, n2)
        dev = max(dev, float(np.max(np.abs((ket_a - ket_b) * mask))))
        dev = max(dev, float(np.max(np.abs((bra_a - bra_b) * mask))))
    # both routes truncate the same series; the measured gap decays like a
    # single power of tan per rung (normalization eats the other power)
    tail = abs(math.tan(cfg.theta)) ** (n_max - 2)
    return _finish(cfg, "ft.basis-two-route",
                   "creator-monomial and exponential-map basis vectors agree",
                   dev, max(1e-8, 50.0 * tail))


def _ft_closed_forms(big_theta: float) -> dict[tuple[int, int], float]:
    c = math.cos(big_theta)
    return {
        (0, 0): 1.0 / c,
        (1, 0): 1.0 / c**2,
        (1, 1): (2.0 - c * c) / c**3,
    }


def _ft_norm_series_oracle(big_theta: float, n1: int, n2: int) -> float:
    """Independent finite-sum evaluation from the Gauss factorization of e^{Theta X}."""
    c, t = math.cos(big_theta), math.tan(big_theta)
    total = 0.0
    for j in range(min(n1, n2) + 1):
        total += (
            t ** (2 * j)
            / math.factorial(j) ** 2
            * (math.factorial(n1) / math.factorial(n1 - j))
            * (math.factorial(n2) / math.factorial(n2 - j))
            * c ** -(n1 + n2 - 2 * j + 1)
        )
    return total


def check_ft_norm_closed_forms(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(64)
    dev = 0.0
    worst = {}
    for big_theta in (0.3, 0.6, 1.0, 1.4):
        closed = _ft_closed_forms(big_theta)
        closed[(2, 1)] = _ft_norm_series_oracle(big_theta, 2, 1)
        for (n1, n2), want in closed.items():
            got = ft.ft_standard_norm(big_theta / 2.0, n1, n2, n_max=n_max)
            rel = abs(got - want) / abs(want)
            if rel > dev:
                dev = rel
                worst = {"Theta": big_theta, "n1": n1, "n2": n2, "got": got, "want": want}
    return _finish(cfg, "ft.norm.closed-forms",
                   "standard norms match 1/cos, 1/cos^2, (2-cos^2)/cos^3 closed forms",
                   dev, 1e-8, worst)


def check_ft_norm_fits(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(64)
    dev = 0.0
    slopes = {}
    for (n1, n2) in ((0, 0), (1, 0), (1, 1), (2, 1)):
        slope = ft.ft_norm_exponent_fit(ft.FIT_THETA_GRID, n1, n2, n_max=n_max)
        slopes[f"({n1},{n2})"] = slope
        dev = max(dev, abs(slope - (n1 + n2 + 1)))
    return _finish(cfg, "ft.norm.exponent-fits",
                   "divergence exponents fit to n1+n2+1", dev, 0.1, slopes)


def check_ft_norm_trend(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(64)
    values = [ft.ft_standard_norm(t / 2.0, 0, 0, n_max=n_max) for t in ft.TREND_THETA_GRID]
    mismatch = 0
    for a, b in zip(values, values[1:]):
        if not b > a:
            mismatch += 1
    if not values[-1] > 1e3:
        mismatch += 1
    return _finish(cfg, "ft.norm.trend",
                   "vacuum norm strictly increases toward pi/2 and exceeds 1e3",
                   mismatch, 0.0, {"values": values})


def check_ft_heisenberg(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    margin = cfg.eff_margin(n_max)
    params = cfg.params
    h = build_hamiltonian(lad, params).h
    dev = 0.0
    for branch in (+1, -1):
        tr = ft.ft_transform(branch * math.pi / 4, lad)
        rates = {
            "ann1": (tr.ann1, -1j * params.omega + branch * params.lam),
            "ann2": (tr.ann2, 1j * params.omega + branch * params.lam),
            "cre1": (tr.cre1, 1j * params.omega - branch * params.lam),
            "cre2": (tr.cre2, -1j * params.omega - branch * params.lam),
        }
        for op, rate in rates.values():
            lhs = commutator(op, h) / (1j * params.hbar)
            dev = max(dev, interior_deviation(lhs, rate * op, lad.space, margin))
    return _finish(cfg, "ft.heisenberg",
                   "(i hbar)^-1 [bar op, H] equals the closed-form rate times the op",
                   dev, 1e-10)


def check_ft_xy(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    x_ref, y_ref = position_operators(lad, cfg.params)
    dev = 0.0
    for sign in (+1, -1):
        tr = ft.ft_transform(sign * math.pi / 4, lad)
        x0, y0 = ft.ft_xy_operators(sign, 0.0, tr, cfg.params)
        dev = max(dev, float(np.max(np.abs(x0 - x_ref))), float(np.max(np.abs(y0 - y_ref))))
    return _finish(cfg, "ft.xy-reconstruction",
                   "x(0), y(0) reassemble the rotated position pair", dev, 1e-12)


FT_SUITE = [
    check_ft_spectrum,
    check_ft_derivation,
    check_ft_reconstruction,
    check_ft_similarity,
    check_exp_inverse,
    check_ft_commutators,
    check_ft_identity_quarter,
    check_ft_identity_generic,
    check_ft_vacuum,
    check_ft_gram,
    check_ft_two_route,
    check_ft_norm_closed_forms,
    check_ft_norm_fits,
    check_ft_norm_trend,
    check_ft_heisenberg,
    check_ft_xy,
]


# ---------------------------------------------------------------------------
# is suite


def _is_spectrum_sweep(branch: int) -> int:
    h = imagscale.is_hamiltonian_from_plain(branch)
    mismatch = 0
    states = [(n1, n2) for n1 in range(6) for n2 in range(6) if n1 + n2 <= 5]
    for (n1, n2) in states:
        want = imagscale.is_eigenvalue(n1, n2, branch)
        if (want.p, want.q) != (n1 + n2 + 1, branch * (n1 - n2)):
            mismatch += 1
        if want.p < 1:  # real part bounded below by hbar omega
            mismatch += 1
        for (m1, m2) in states:
            got = algebra.basis_matrix_element(m1, m2, h, n1, n2)
            expect = want.exact() if (m1, m2) == (n1, n2) else ExactScalar.zero()
            if got != expect:
                mismatch += 1
    return mismatch


def check_is_spectrum(cfg: VerifyConfig) -> CheckResult:
    mismatch = _is_spectrum_sweep(+1) + _is_spectrum_sweep(-1)
    return _finish(cfg, "is.spectrum",
                   "exact eigenvalues hw(n1+n2+1) +- ihl(n1-n2), real part >= hw",
                   mismatch, 0.0)


def check_is_derivation(cfg: VerifyConfig) -> CheckResult:
    mismatch = 0
    for branch in (+1, -1):
        if imagscale.is_hamiltonian_from_plain(branch) != imagscale.is_hamiltonian_formal(branch):
            mismatch += 1
    return _finish(cfg, "is.h-derivation",
                   "substituted H normal-orders to the diagonal check form exactly",
                   mismatch, 0.0)


def check_is_closed_form(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    t0 = imagscale.is_transform(0.0, lad)
    dev = max(
        float(np.max(np.abs(t0.ann1 - lad.a1))),
        float(np.max(np.abs(t0.ann2 - (-1j) * lad.a2_dag))),
        float(np.max(np.abs(t0.cre1 - lad.a1_dag))),
        float(np.max(np.abs(t0.cre2 - (-1j) * lad.a2))),
    )
    tq = imagscale.is_transform(1j * math.pi / 4, lad)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    dev = max(dev, float(np.max(np.abs(tq.ann1 - inv_sqrt2 * (lad.a1 - lad.a2_dag)))))
    return _finish(cfg, "is.closed-form",
                   "check operators at chi=0 and chi=i pi/4 match closed combinations",
                   dev, 1e-14)


def check_is_tilde(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    dev_sim = max(
        imagscale.tilde_similarity_deviation(phi) for phi in (0.2j, 0.3j)
    )
    t_ann, t_cre = imagscale.tilde_pair(math.pi / 2, lad)
    dev_cf = max(
        float(np.max(np.abs(t_ann - (-1j) * lad.a2_dag))),
        float(np.max(np.abs(t_cre - (-1j) * lad.a2))),
    )
    z_built = lad.a1_dag @ t_ann + t_cre @ lad.a1
    dev_z = float(np.max(np.abs(z_built - imagscale.generator_z_matrix(lad))))
    dev_chi = imagscale.chi_similarity_deviation(0.3j, _ladder(24), window=6)
    return _finish(cfg, "is.tilde",
                   "mode-2 squeeze: similarity routes, pi/2 closed form, Z composition",
                   max(dev_sim, dev_cf, dev_z, dev_chi), 1e-8,
                   detail={"squeeze_similarity": dev_sim, "closed_form": dev_cf,
                           "z_composition": dev_z, "chi_similarity": dev_chi})


def check_is_commutators(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    space = lad.space
    eye = np.eye(space.dim, dtype=complex)
    dev = 0.0
    for chi in (1j * math.pi / 4, -1j * math.pi / 4, 0.37j):
        tr = imagscale.is_transform(chi, lad)
        dev = max(dev, interior_deviation(commutator(tr.ann1, tr.cre1), eye, space, 1))
        dev = max(dev, interior_deviation(commutator(tr.ann2, tr.cre2), eye, space, 1))
        dev = max(dev, interior_deviation(commutator(tr.ann1, tr.cre2), 0 * eye, space, 1))
        dev = max(dev, float(np.max(np.abs(commutator(tr.ann1, tr.ann2)))))
    return _finish(cfg, "is.commutators",
                   "check-mode commutation relations on the interior", dev, 1e-12)


def check_is_identity_quarter(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    margin = cfg.eff_margin(n_max)
    dev = 0.0
    for sign in (+1, -1):
        rep = imagscale.h_in_check(sign * 1j * math.pi / 4, lad, cfg.params, margin=margin)
        dev = max(dev, rep.h0_deviation, rep.h1_deviation, rep.reduced_deviation or 0.0)
    return _finish(cfg, "is.h-identity.quarter",
                   "H0/H1 equal their check number-operator forms at chi=+-i pi/4",
                   dev, 1e-10 * lad.space.dim)


def check_is_identity_generic(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    rep = imagscale.h_in_check(0.2j, lad, cfg.params, margin=cfg.eff_margin(n_max))
    dev = max(rep.h0_deviation, rep.h1_deviation)
    return _finish(cfg, "is.h-identity.generic",
                   "H0/H1 equal the full cosh/sinh check expressions at generic chi",
                   dev, 1e-10 * lad.space.dim)


def check_is_vacuum(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(8)
    lad = _ladder(n_max)
    t0 = imagscale.is_transform(0.0, lad)
    ket0, bra0 = imagscale.is_vacuum(t0)
    unit = np.zeros(lad.space.dim, dtype=complex)
    unit[lad.space.index(0, n_max)] = 1.0
    dev = max(float(np.max(np.abs(ket0 - unit))), float(np.max(np.abs(bra0 - unit))))
    tq = imagscale.is_transform(1j * math.pi / 4, lad)
    ketq, braq = imagscale.is_vacuum(tq)
    dev = max(dev, float(np.linalg.norm(tq.ann1 @ ketq)), float(np.linalg.norm(tq.ann2 @ ketq)))
    dev = max(dev, float(np.linalg.norm(braq @ tq.cre1)), float(np.linalg.norm(braq @ tq.cre2)))
    dev = max(dev, abs(braq @ ketq - 1.0))
    return _finish(cfg, "is.vacuum",
                   "nullspace vacuum: chi=0 is the mode-2 top state; defining relations at i pi/4",
                   dev, 1e-10)


def check_is_gram(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    rep = imagscale.is_check_rep(1j * math.pi / 4, lad, cfg.params)
    q_cap = min(3, max(0, (n_max - 2) // 2))
    gram = imagscale.is_gram(rep, q_cap)
    dev = float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
    return _finish(cfg, "is.gram",
                   f"bounded-frame Gram is identity for occupations <= {q_cap}",
                   dev, 1e-8)


def check_is_matrix_element(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    params = cfg.params
    dev = 0.0
    witness = 0.0
    states = [s for s in ((0, 0), (1, 0), (1, 1), (2, 1)) if s[0] + s[1] <= n_max - 2]
    for branch in (+1, -1):
        rep = imagscale.is_check_rep(branch * 1j * math.pi / 4, lad, params)
        vacuum = imagscale.is_check_vacuum(rep)
        for (n1, n2) in states:
            ket, bra = imagscale.is_basis(rep, n1, n2, vacuum=vacuum)
            got = bra @ (rep.h @ ket)
            want = imagscale.is_eigenvalue(n1, n2, branch).as_complex(params)
            dev = max(dev, abs(got - want))
        witness = max(
            witness,
            float(np.max(np.abs(rep.h @ rep.h.conj().T - rep.h.conj().T @ rep.h))),
        )
    scale = params.hbar * (params.omega + params.lam)
    if params.gamma > 0 and witness <= 1e-6:
        dev = max(dev, 1.0)  # H must fail to be normal once damping is on
    return _finish(cfg, "is.matrix-element",
                   "bounded-frame H matrix elements match the spectrum (both branches)",
                   dev, 1e-8 * scale,
                   detail={"nonnormality_witness": witness})


def check_is_heisenberg(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    margin = cfg.eff_margin(n_max)
    params = cfg.params
    h = build_hamiltonian(lad, params).h
    dev = 0.0
    for branch in (+1, -1):
        tr = imagscale.is_transform(branch * 1j * math.pi / 4, lad)
        rates = {
            "ann1": (tr.ann1, -1j * params.omega + branch * params.lam),
            "ann2": (tr.ann2, -1j * params.omega - branch * params.lam),
            "cre1": (tr.cre1, 1j * params.omega - branch * params.lam),
            "cre2": (tr.cre2, 1j * params.omega + branch * params.lam),
        }
        for op, rate in rates.values():
            lhs = commutator(op, h) / (1j * params.hbar)
            dev = max(dev, interior_deviation(lhs, rate * op, lad.space, margin))
    return _finish(cfg, "is.heisenberg",
                   "(i hbar)^-1 [check op, H] equals the closed-form rate times the op",
                   dev, 1e-10)


def check_is_xy(cfg: VerifyConfig) -> CheckResult:
    n_max = cfg.resolve(12)
    lad = _ladder(n_max)
    x_ref, y_ref = position_operators(lad, cfg.params)
    dev = 0.0
    for sign in (+1, -1):
        tr = imagscale.is_transform(sign * 1j * math.pi / 4, lad)
        x0, y0 = imagscale.is_xy_operators(sign, 0.0, tr, cfg.params)
        dev = max(dev, float(np.max(np.abs(x0 - x_ref))), float(np.max(np.abs(y0 - y_ref))))
    return _finish(cfg, "is.xy-reconstruction",
                   "x(0), y(0) reassemble the rotated position pair", dev, 1e-12)


def check_is_conjugation(cfg: VerifyConfig) -> CheckResult:
    mismatch = 0
    for sign in (+1, -1):
        x_terms, y_terms = imagscale.is_xy_symbolic(sign)
        if imagscale.conjugate_xy_terms(x_terms) != y_terms:
            mismatch += 1
        if imagscale.conjugate_xy_terms(y_terms) != x_terms:
            mismatch += 1
    return _finish(cfg, "is.xy-conjugation",
                   "symbol conjugation maps the x(t) expression onto y(t)", mismatch, 0.0)


def check_contrast(cfg: VerifyConfig) -> CheckResult:
    mismatch = 0
    for n1 in range(5):
        for n2 in range(5):
            ft_rec = ft.ft_eigenvalue(n1, n2, "+")
            is_rec = imagscale.is_eigenvalue(n1, n2, "+")
            if ft_rec.p != is_rec.q or ft_rec.q != is_rec.p:
                mismatch += 1
    return _finish(cfg, "is.contrast",
                   "integer pairs transpose between the two constructions", mismatch, 0.0)


IS_SUITE = [
    check_is_spectrum,
    check_is_derivation,
    check_is_closed_form,
    check_is_tilde,
    check_is_commutators,
    check_is_identity_quarter,
    check_is_identity_generic,
    check_is_vacuum,
    check_is_gram,
    check_is_matrix_element,
    check_is_heisenberg,
    check_is_xy,
    check_is_conjugation,
    check_contrast,
]


# ---------------------------------------------------------------------------
# dynamics suite


def check_classification(cfg: VerifyConfig) -> CheckResult:
    mismatch = 0
    for n1 in range(7):
        for n2 in range(7):
            for branch in (+1, -1):
                c_ft = dynamics.classify("ft", branch, n1, n2, cfg.params)
                if c_ft == dynamics.StabilityClass.STABLE:
                    mismatch += 1
                want_ft = (
                    dynamics.StabilityClass.GROWING if branch > 0 else dynamics.StabilityClass.DECAYING
                )
                if c_ft != want_ft:
                    mismatch += 1
                c_is = dynamics.classify("is", branch, n1, n2, cfg.params)
                if (n1 == n2) != (c_is == dynamics.StabilityClass.STABLE):
                    mismatch += 1
                if n1 != n2:
                    want_is = (
                        dynamics.StabilityClass.GROWING
                        if branch * (n1 - n2) > 0
                        else dynamics.StabilityClass.DECAYING
                    )
                    if c_is != want_is:
                        mismatch += 1
    return _finish(cfg, "dynamics.classification",
                   "no stable states in the rotation construction; stability on n1=n2 otherwise",
                   mismatch, 0.0)


def check_branch_antisymmetry(cfg: VerifyConfig) -> CheckResult:
    swap = {
        dynamics.StabilityClass.GROWING: dynamics.StabilityClass.DECAYING,
        dynamics.StabilityClass.DECAYING: dynamics.StabilityClass.GROWING,
        dynamics.StabilityClass.STABLE: dynamics.StabilityClass.STABLE,
    }
    mismatch = 0
    for approach in ("ft", "is"):
        for n1 in range(7):
            for n2 in range(7):
                plus = dynamics.classify(approach, "+", n1, n2, cfg.params)
                minus = dynamics.classify(approach, "-", n1, n2, cfg.params)
                if swap[plus] != minus:
                    mismatch += 1
    return _finish(cfg, "dynamics.branch-antisymmetry",
                   "branches swap growing and decaying, stability is shared", mismatch, 0.0)


def check_pairing_norm(cfg: VerifyConfig) -> CheckResult:
    grid = (0.0, 1.0, 10.0)
    mismatch = 0
    for (approach, branch, n1, n2) in (("ft", "-", 1, 0), ("is", "+", 2, 1)):
        values = dynamics.pairing_norm_in_time(approach, branch, n1, n2, grid, cfg.params)
        if values != [1.0, 1.0, 1.0]:
            mismatch += 1
        cross = dynamics.pairing_norm_in_time(
            approach, branch, n1, n2, grid, cfg.params, other=(n1 + 1, n2)
        )
        if cross != [0.0, 0.0, 0.0]:
            mismatch += 1
    return _finish(cfg, "dynamics.pairing-norm",
                   "bra-ket pairing is exactly constant in time", mismatch, 0.0)


def check_eom_residuals(cfg: VerifyConfig) -> CheckResult:
    params = cfg.params
    exps = dynamics.xy_mode_exponents(params)
    dev = 0.0
    for s in exps["damped"]:
        dev = max(dev, abs(dynamics.eom_residual(s, "damped", params)))
    for s in exps["amplified"]:
        dev = max(dev, abs(dynamics.eom_residual(s, "amplified", params)))
    mismatch = 0
    undamped = abs(dynamics.eom_residual(1j * params.omega, "damped", params))
    if undamped <= 0.5 * params.gamma * params.omega:
        mismatch += 1
    return _finish(cfg, "dynamics.eom",
                   "x/y mode exponents satisfy the classical equations of motion",
                   dev + mismatch, 1e-12 * params.k, {"undamped_control": undamped})


def check_factor_examples(cfg: VerifyConfig) -> CheckResult:
    params = cfg.params
    dev = 0.0
    ev = ft.ft_eigenvalue(0, 0, "-").as_complex(params)
    got = dynamics.schrodinger_factor(ev, 1.0 / params.lam, params.hbar)
    dev = max(dev, abs(got - math.exp(-1.0)))
    ev_stable = imagscale.is_eigenvalue(0, 0, "+").as_complex(params)
    for t in (0.0, 1.0, 10.0):
        dev = max(dev, abs(abs(dynamics.schrodinger_factor(ev_stable, t, params.hbar)) - 1.0))
    ev_mixed = imagscale.is_eigenvalue(1, 0, "+").as_complex(params)
    for t in (0.0, 0.7, 3.0):
        prod = dynamics.schrodinger_factor(ev_mixed, t, params.hbar) * dynamics.dual_factor(
            ev_mixed, t, params.hbar
        )
        dev = max(dev, abs(prod - 1.0))
        evo = dynamics.StateEvolution.create("is", "+", 1, 0, params)
        lhs = abs(evo.factor(t)) ** 2
        rhs = math.exp(2.0 * evo.amplitude_rate * t)
        dev = max(dev, abs(lhs - rhs) / max(rhs, 1.0))
    return _finish(cfg, "dynamics.factor",
                   "scalar evolution factors: decay value, unit modulus, reciprocal pair",
                   dev, 1e-12)


DYNAMICS_SUITE = [
    check_classification,
    check_branch_antisymmetry,
    check_pairing_norm,
    check_eom_residuals,
    check_factor_examples,
]


SUITES = {
    "algebra": ALGEBRA_SUITE,
    "ft": FT_SUITE,
    "is": IS_SUITE,
    "dynamics": DYNAMICS_SUITE,
}


def run_suite(name: str, cfg: VerifyConfig) -> list[CheckResult]:
    """Run one suite (or 'all'); a crashing check is reported, not raised."""
    if name == "all":
        checks = [fn for suite in SUITE_NAMES for fn in SUITES[suite]]
    elif name in SUITES:
        checks = SUITES[name]
    else:
        raise DomainError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
    results = []
    for fn in checks:
        try:
            results.append(fn(cfg))
        except BatemanError as exc:
            results.append(
                CheckResult(
                    check_id=fn.__name__.replace("check_", "", 1).replace("_", "-"),
                    description="check raised an error",
                    deviation=math.inf,
                    tolerance=0.0,
                    passed=False,
                    detail={"error": f"{type(exc).__name__}: {exc}"},
                )
            )
    return results


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)
