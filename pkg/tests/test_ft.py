"""First mixing route: real-angle mixing, its eigenbasis, norms, dynamics."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bateman import algebra
from bateman.errors import DomainError, FitError, SeriesDivergence
from bateman.fock import FockSpace, build_ladder, position_operators
from bateman.ft import (
    FIT_THETA_GRID,
    TREND_THETA_GRID,
    ft_basis,
    ft_basis_similarity,
    ft_eigenvalue,
    ft_gram,
    ft_hamiltonian_formal,
    ft_hamiltonian_from_plain,
    ft_heisenberg_factor,
    ft_norm_exponent_fit,
    ft_plain_in_bars,
    ft_standard_norm,
    ft_transform,
    ft_vacuum_series,
    ft_xy_operators,
    generator_matrix,
    h1_in_bar,
    normalize_branch,
    similarity_deviation,
)


# --- transform ---------------------------------------------------------------

def test_transform_identity_at_zero(ladder8):
    ft = ft_transform(0.0, ladder8)
    assert np.array_equal(ft.ann1, ladder8.a1)
    assert np.array_equal(ft.cre2, ladder8.a2_dag)


def test_transform_quarter_turn(ladder8):
    c, s = math.cos(math.pi / 4), math.sin(math.pi / 4)
    ft = ft_transform(math.pi / 4, ladder8)
    assert np.array_equal(ft.ann1, c * ladder8.a1 - s * ladder8.a2_dag)
    assert np.array_equal(ft.cre1, c * ladder8.a1_dag + s * ladder8.a2)
    assert np.array_equal(ft.ann2, c * ladder8.a2 - s * ladder8.a1_dag)
    assert np.array_equal(ft.cre2, c * ladder8.a2_dag + s * ladder8.a1)


def test_transform_rejects_nonfinite(ladder8):
    with pytest.raises(DomainError):
        ft_transform(float("nan"), ladder8)


def test_generator_matrix(ladder8):
    want = ladder8.a1 @ ladder8.a2 + ladder8.a1_dag @ ladder8.a2_dag
    assert np.array_equal(generator_matrix(ladder8), want)


def test_similarity_on_low_window():
    # margin-style comparison diverges with n_max for this conjugation;
    # the low-occupation window is the convergent statement
    lad = build_ladder(24)
    for theta in (0.1, 0.3):
        assert similarity_deviation(ft_transform(theta, lad)) <= 1e-10


# --- eigenvalues -------------------------------------------------------------

def test_eigenvalue_examples(params):
    assert (ft_eigenvalue(0, 0, "+").p, ft_eigenvalue(0, 0, "+").q) == (0, 1)
    assert (ft_eigenvalue(0, 0, "-").p, ft_eigenvalue(0, 0, "-").q) == (0, -1)
    e = ft_eigenvalue(2, 1, "+")
    assert (e.p, e.q) == (1, 4)
    assert e.as_complex(params) == 1.0 + 2.0j


def test_eigenvalue_matches_formal_element():
    for branch in ("+", "-"):
        h = ft_hamiltonian_formal(branch)
        for n1 in range(4):
            for n2 in range(4 - n1):
                want = ft_eigenvalue(n1, n2, branch).exact()
                got = algebra.basis_matrix_element(n1, n2, h, n1, n2)
                assert got == want


def test_formal_two_routes_agree():
    for branch in ("+", "-"):
        assert ft_hamiltonian_formal(branch) == ft_hamiltonian_from_plain(branch)


def test_plain_in_bars_inverts():
    # substituting the bar expansion back must reproduce the plain symbols
    d = ft_plain_in_bars("+")
    assert sorted(d.keys()) == ["a1", "a1_dag", "a2", "a2_dag"]
    for expr in d.values():
        assert expr.degree() == 1


def test_branch_normalization():
    assert normalize_branch("+") == normalize_branch(1) == 1
    assert normalize_branch("-") == normalize_branch(-1) == -1
    with pytest.raises(DomainError):
        normalize_branch("x")


# --- reduced structure at the decoupling angle -------------------------------

@pytest.mark.parametrize("sign", [+1, -1])
def test_h1_reduces_at_quarter_turn(sign, params):
    lad = build_ladder(12)
    rep = h1_in_bar(ft_transform(sign * math.pi / 4, lad), params)
    bound = 1e-10 * lad.space.dim
    assert rep.h0_deviation <= bound
    assert rep.h1_deviation <= bound
    assert rep.reduced_deviation <= bound


# --- vacuum series and basis -------------------------------------------------

def test_vacuum_series_at_zero():
    space = FockSpace(8)
    ket, bra = ft_vacuum_series(0.0, space)
    e00 = np.zeros(space.dim)
    e00[space.index(0, 0)] = 1.0
    assert np.allclose(ket, e00)
    assert abs(bra @ ket - 1.0) == 0.0


def test_vacuum_series_pairing_normalized():
    ket, bra = ft_vacuum_series(0.3, FockSpace(12))
    assert abs(bra @ ket - 1.0) <= 1e-10


def test_vacuum_series_diverges_at_wall():
    with pytest.raises(SeriesDivergence):
        ft_vacuum_series(math.pi / 4, FockSpace(8))


def test_basis_two_routes():
    ft = ft_transform(0.3, build_ladder(24))
    for n1, n2 in ((0, 0), (1, 0), (1, 1), (2, 1)):
        k1, b1 = ft_basis(ft, n1, n2)
        k2, b2 = ft_basis_similarity(ft, n1, n2)
        assert np.max(np.abs(k1 - k2)) <= 1e-10
        assert np.max(np.abs(b1 - b2)) <= 1e-10
        assert abs(b1 @ k1 - 1.0) <= 1e-12


def test_gram_is_identity():
    ft = ft_transform(0.3, build_ladder(24))
    g = ft_gram(ft, 3)
    assert g.shape == (16, 16)
    assert np.max(np.abs(g - np.eye(16))) <= 1e-8


# --- standard norms ----------------------------------------------------------

def test_standard_norm_closed_forms():
    # Theta = 2 * Re(theta); closed forms 1/cos, 1/cos^2, (2-cos^2)/cos^3
    assert ft_standard_norm(0.0, 0, 0) == 1.0
    assert abs(ft_standard_norm(math.pi / 6, 0, 0) - 2.0) <= 1e-12
    assert abs(ft_standard_norm(math.pi / 6, 1, 1) - 14.0) <= 1e-11
    big = math.cos(1.0)
    assert abs(ft_standard_norm(0.5, 1, 0) - 1.0 / big**2) <= 1e-12 / big**2


def test_standard_norm_diverges_past_wall():
    with pytest.raises(SeriesDivergence):
        ft_standard_norm(math.pi / 4, 0, 0)


def test_norm_trend_grows_toward_wall():
    vals = [ft_standard_norm(t / 2, 0, 0) for t in TREND_THETA_GRID]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[0] > 5.0 and vals[-1] > 1e3


@pytest.mark.parametrize("n1,n2,want", [(0, 0, 1.0), (1, 0, 2.0), (1, 1, 3.0)])
def test_norm_exponent_fit(n1, n2, want):
    got = ft_norm_exponent_fit(FIT_THETA_GRID, n1, n2)
    assert abs(got - want) <= 0.1


def test_norm_fit_needs_three_samples():
    with pytest.raises(FitError):
        ft_norm_exponent_fit(FIT_THETA_GRID[:2], 0, 0)


# --- Heisenberg factors and coordinate reconstruction ------------------------

def test_heisenberg_factor_at_zero(params):
    for mode in (1, 2):
        for kind in ("ann", "cre"):
            for branch in (1, -1):
                assert ft_heisenberg_factor(mode, kind, branch, 0.0, params) == 1.0


def test_heisenberg_factor_closed_form(params):
    t = 0.7
    got = ft_heisenberg_factor(1, "ann", -1, t, params)
    want = np.exp((-1j * params.omega - params.lam) * t)
    assert abs(got - want) <= 1e-12


def test_heisenberg_conjugate_product(params):
    # matched ann/cre factors carry opposite exponents
    t = 0.7
    prod = ft_heisenberg_factor(1, "ann", 1, t, params) * ft_heisenberg_factor(
        1, "cre", 1, t, params
    )
    assert abs(prod - 1.0) <= 1e-12


@settings(max_examples=20, deadline=None)
@given(st.floats(0.0, 5.0), st.sampled_from([1, 2]), st.sampled_from([1, -1]))
def test_heisenberg_modulus(params, t, mode, branch):
    # modulus is set by branch and kind alone; mode only moves the phase
    rate = branch * params.lam
    for kind, s in (("ann", +1), ("cre", -1)):
        got = abs(ft_heisenberg_factor(mode, kind, branch, t, params))
        assert abs(got - math.exp(s * rate * t)) <= 1e-9 * math.exp(abs(rate) * t)


@pytest.mark.parametrize("sign", [+1, -1])
def test_xy_reconstruction_at_zero(sign, params):
    lad = build_ladder(12)
    ft = ft_transform(sign * math.pi / 4, lad)
    x, y = ft_xy_operators(sign, 0.0, ft, params)
    xp, yp = position_operators(lad, params)
    assert np.max(np.abs(x - xp)) <= 1e-10
    assert np.max(np.abs(y - yp)) <= 1e-10


def test_xy_requires_decoupling_angle(params):
    lad = build_ladder(8)
    with pytest.raises(DomainError):
        ft_xy_operators(+1, 0.0, ft_transform(0.3, lad), params)
