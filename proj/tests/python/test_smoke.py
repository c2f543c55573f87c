"""Smoke tests for the Python bindings."""

import math

import numpy as np
import pytest

import hardytk as htk


def test_bounds_values():
    assert htk.hardy_lower_bound(3, 3) == pytest.approx(1.0 / (1.0 + math.sqrt(7.0) / 2.0))
    assert htk.gaussian_upper_bound(3, 3) == pytest.approx(3.0 * math.pi**2 / 8.0)
    assert htk.fermi_bound(1, 2) == htk.one_d_constant() == 0.5
    assert htk.naive_bound(3, 2) == 0.5
    with pytest.raises(Exception):
        htk.hardy_lower_bound(2, 3)


def test_magnetic_constant():
    assert htk.magnetic_constant(2, "1/2") == 0.25
    assert htk.magnetic_constant(3, "1/3") == pytest.approx(1.0 / 36.0)
    assert htk.magnetic_constant(5, 2) == 0.0
    assert htk.magnetic_constant_float(2, 0.5) == pytest.approx(0.25)


def test_geometry_kernels():
    square = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    assert htk.pair_density(square) == pytest.approx(5.0)
    assert htk.triple_density(square) == pytest.approx(8.0)
    # equilateral side 1: 1/R^2 = 3, b = 3/2
    h = math.sqrt(3.0) / 2.0
    assert htk.circumradius_inv_sq([0, 0], [1, 0], [0.5, h]) == pytest.approx(3.0)
    assert htk.menger_b([0, 0], [1, 0], [0.5, h]) == pytest.approx(1.5)
    with pytest.raises(htk.CoincidentPointsError):
        htk.pair_density(np.zeros((2, 2)))


def test_field_identities():
    rng = np.random.default_rng(1)
    pts = rng.normal(size=(5, 2))
    lhs, rhs = htk.complex_sum_identity(pts)
    assert lhs == pytest.approx(rhs, rel=1e-10)
    xi = rng.normal(size=(6, 3))
    lhs_norm = 6 * float((xi**2).sum())
    assert abs(htk.gradient_split_residual(xi)) <= 1e-12 * lhs_norm
    f = htk.field_pairwise(pts)
    assert f.shape == (5, 2)
    assert htk.field_pairwise_norm_sq(pts) == pytest.approx(float((f**2).sum()), rel=1e-10)


def test_k_objective_and_search():
    eq = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3.0) / 2.0]])
    w = [1.0 / 3.0] * 3
    assert htk.k_objective(eq, w) == pytest.approx(1.0, abs=1e-12)
    res = htk.maximize_K(2, 3, iters=200, restarts=2, seed=3)
    assert res["value"] >= 0.999
    assert res["atoms"].shape == (3, 2)


def test_quotient_runs():
    q = htk.hardy_quotient("gaussian", 3, 3, samples=20000, seed=5)
    assert q["quotient"]["mean"] > htk.hardy_lower_bound(3, 3)
    assert q["quotient"]["stderr"] > 0.0
    # reproducible under the same seed
    q2 = htk.hardy_quotient("gaussian", 3, 3, samples=20000, seed=5)
    assert q["quotient"]["mean"] == q2["quotient"]["mean"]
    # closed forms carried alongside
    cf = htk.gaussian_closed_forms(3, 3)
    assert cf["quotient"] == pytest.approx(1.5)


def test_odd_and_mode_quotients():
    assert htk.odd_quotient(3) == pytest.approx(15.0 / 4.0, rel=1e-9)
    q = htk.ab_mode_quotient(0.3, 0, kind="power_exp", a=1.0, b=1.0)
    assert q >= 0.09 - 1e-12


def test_degenerate_orbitals_guard():
    # coincident centers make the determinant vanish identically
    with pytest.raises(RuntimeError):
        htk.hardy_quotient("slater", 2, 2, samples=100, seed=1, spacing=0.0)
