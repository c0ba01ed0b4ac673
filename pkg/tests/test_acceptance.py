"""End-to-end acceptance gate.

Every guarantee the package makes is rechecked here at its stated tolerance
and runtime budget, one printed line per guarantee. Run with -s (or rely on
capsys.disabled) to see the lines.
"""

import math
import random
import time

import numpy as np
import pytest

from bateman import algebra, dynamics, ft, imagscale
from bateman.algebra import LadderPoly
from bateman.errors import BatemanError
from bateman.fock import (
    build_ladder,
    commutator,
    interior_deviation,
    position_operators,
)
from bateman.params import derive_params
from bateman.verify import VerifyConfig, _exact_single_mode_defect, check_ft_heisenberg, check_is_heisenberg

PARAMS = derive_params(m=1.0, gamma=1.0, k=1.25)


def _gate(capsys, label, budget_s, body):
    t0 = time.perf_counter()
    try:
        detail = body()
    except BaseException:
        elapsed = time.perf_counter() - t0
        with capsys.disabled():
            print(f"FAIL {label} [{elapsed:.2f}s]")
        raise
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        print(f"PASS {label}: {detail} [{elapsed:.2f}s]")
    assert elapsed < budget_s, f"{label} took {elapsed:.2f}s, budget {budget_s}s"


def test_exact_spectra_first_mixing(capsys):
    def body():
        checked = 0
        for branch in (1, -1):
            h = ft.ft_hamiltonian_formal(branch)
            for n1 in range(6):
                for n2 in range(6 - n1):
                    got = algebra.basis_matrix_element(n1, n2, h, n1, n2)
                    assert got.as_integer_pair() == (n1 - n2, branch * (n1 + n2 + 1))
                    checked += 1
        return f"{checked} diagonal elements exact, zero tolerance"

    _gate(capsys, "spectrum, rotation route", 5.0, body)


def test_exact_spectra_second_mixing(capsys):
    def body():
        checked = 0
        for branch in (1, -1):
            h = imagscale.is_hamiltonian_formal(branch)
            for n1 in range(6):
                for n2 in range(6 - n1):
                    got = algebra.basis_matrix_element(n1, n2, h, n1, n2)
                    want = (n1 + n2 + 1, branch * (n1 - n2))
                    assert got.as_integer_pair() == want
                    assert want[0] >= 1  # real part never dips below hbar*omega
                    checked += 1
        return f"{checked} diagonal elements exact, real parts >= hbar*omega"

    _gate(capsys, "spectrum, imaginary-scale route", 5.0, body)


def test_operator_identities_at_split_angles(capsys):
    def body():
        lad = build_ladder(12)
        bound = 1e-10 * lad.space.dim
        worst = 0.0
        for sign in (1, -1):
            rep = ft.h1_in_bar(ft.ft_transform(sign * math.pi / 4, lad), PARAMS)
            for dev in (rep.h0_deviation, rep.h1_deviation, rep.reduced_deviation):
                assert dev <= bound
                worst = max(worst, dev)
            rep = imagscale.h_in_check(sign * 1j * math.pi / 4, lad, PARAMS)
            for dev in (rep.h0_deviation, rep.h1_deviation, rep.reduced_deviation):
                assert dev <= bound
                worst = max(worst, dev)
        return f"max deviation {worst:.2e} <= {bound:.2e} (n_max=12, margin=2)"

    _gate(capsys, "operator identities at the split angles", 10.0, body)


def test_commutator_algebra_and_boundary_defect(capsys):
    def body():
        lad = build_ladder(12)
        space = lad.space
        eye = np.eye(space.dim)
        worst = 0.0
        pairs = [
            (lad.a1, lad.a1_dag, eye),
            (lad.a2, lad.a2_dag, eye),
            (lad.a1, lad.a2_dag, 0 * eye),
            (lad.a1, lad.a2, 0 * eye),
            (lad.a1_dag, lad.a2_dag, 0 * eye),
        ]
        for a, b, want in pairs:
            dev = interior_deviation(commutator(a, b), want, space, 1)
            assert dev <= 1e-12
            worst = max(worst, dev)
        mismatches = _exact_single_mode_defect(8)
        assert mismatches == 0
        return f"interior commutators {worst:.2e} <= 1e-12; boundary defect exact"

    _gate(capsys, "commutator algebra", 5.0, body)


def test_norm_closed_forms_and_exponent_fits(capsys):
    def body():
        worst = 0.0
        for big in (0.3, 0.6, 1.0, 1.4):
            c = math.cos(big)
            forms = {(0, 0): 1.0 / c, (1, 0): 1.0 / c**2, (1, 1): (2.0 - c * c) / c**3}
            for (n1, n2), want in forms.items():
                got = ft.ft_standard_norm(big / 2.0, n1, n2, n_max=64)
                rel = abs(got - want) / abs(want)
                assert rel <= 1e-8
                worst = max(worst, rel)
        worst_fit = 0.0
        for (n1, n2) in ((0, 0), (1, 0), (1, 1), (2, 1)):
            fit = ft.ft_norm_exponent_fit(ft.FIT_THETA_GRID, n1, n2)
            err = abs(fit - (n1 + n2 + 1))
            assert err <= 0.1
            worst_fit = max(worst_fit, err)
        return f"closed forms rel {worst:.2e} <= 1e-8; fit error {worst_fit:.3f} <= 0.1"

    _gate(capsys, "standard-norm closed forms and divergence fits", 10.0, body)


def test_biorthonormality_grams(capsys):
    def body():
        tr = ft.ft_transform(0.3, build_ladder(24))
        g1 = ft.ft_gram(tr, 3)
        dev1 = float(np.max(np.abs(g1 - np.eye(g1.shape[0]))))
        assert dev1 <= 1e-8
        rep = imagscale.is_check_rep(1j * math.pi / 4, build_ladder(12), PARAMS)
        g2 = imagscale.is_gram(rep, 3)
        dev2 = float(np.max(np.abs(g2 - np.eye(g2.shape[0]))))
        assert dev2 <= 1e-8
        return f"rotation {dev1:.2e}, imaginary-scale {dev2:.2e}, both <= 1e-8"

    _gate(capsys, "biorthonormality Grams", 10.0, body)


def test_heisenberg_derivative_form(capsys):
    def body():
        cfg = VerifyConfig(params=PARAMS)
        worst = 0.0
        for check in (check_ft_heisenberg, check_is_heisenberg):
            result = check(cfg)
            assert result.passed
            assert result.deviation <= 1e-10
            worst = max(worst, result.deviation)
        return f"rate-constant form, interior deviation {worst:.2e} <= 1e-10"

    _gate(capsys, "Heisenberg derivative form", 5.0, body)


def test_eom_certification(capsys):
    def body():
        worst_res = 0.0
        for sign, roots in dynamics.xy_mode_exponents(PARAMS).items():
            for s in roots:
                res = abs(dynamics.eom_residual(s, sign, PARAMS))
                assert res <= 1e-12 * PARAMS.k
                worst_res = max(worst_res, res)
        lad = build_ladder(12)
        xp, yp = position_operators(lad, PARAMS)
        worst_xy = 0.0
        for sign in (1, -1):
            x, y = ft.ft_xy_operators(sign, 0.0, ft.ft_transform(sign * math.pi / 4, lad), PARAMS)
            worst_xy = max(worst_xy, interior_deviation(x, xp, lad.space, 2),
                           interior_deviation(y, yp, lad.space, 2))
            x, y = imagscale.is_xy_operators(sign, 0.0, imagscale.is_transform(sign * 1j * math.pi / 4, lad), PARAMS)
            worst_xy = max(worst_xy, interior_deviation(x, xp, lad.space, 2),
                           interior_deviation(y, yp, lad.space, 2))
        assert worst_xy <= 1e-10
        return f"residuals {worst_res:.2e} <= 1e-12*k; t=0 x,y deviation {worst_xy:.2e} <= 1e-10"

    _gate(capsys, "equations of motion", 5.0, body)


def test_stability_classification(capsys):
    def body():
        for branch in ("+", "-"):
            for n1 in range(7):
                for n2 in range(7):
                    assert dynamics.classify("ft", branch, n1, n2) is not dynamics.StabilityClass.STABLE
                    got = dynamics.classify("is", branch, n1, n2)
                    assert (got is dynamics.StabilityClass.STABLE) == (n1 == n2)
        norms = dynamics.pairing_norm_in_time("ft", "+", 2, 1, (0.0, 1.0, 10.0), PARAMS)
        assert norms == [1.0, 1.0, 1.0]
        norms = dynamics.pairing_norm_in_time("is", "-", 1, 1, (0.0, 1.0, 10.0), PARAMS)
        assert norms == [1.0, 1.0, 1.0]
        return "98 classifications; pairing norm exactly constant on {0,1,10}"

    _gate(capsys, "stability classification and pairing conservation", 2.0, body)


def test_oracle_matrix_cross_validation(capsys):
    def body():
        rng = random.Random(20260823)
        worst = 0.0
        for _ in range(200):
            poly = algebra.random_poly(rng, max_degree=6)
            lad = build_ladder(max(2, poly.degree() + 2))
            exact = algebra.vacuum_pairing(LadderPoly.one(), poly).to_complex()
            numeric = algebra.matrix_vacuum_pairing(poly, lad)
            dev = abs(exact - numeric)
            assert dev <= 1e-12
            worst = max(worst, dev)
        return f"200 random polynomials, worst gap {worst:.2e} <= 1e-12"

    _gate(capsys, "exact-oracle vs matrix cross-validation", 30.0, body)
