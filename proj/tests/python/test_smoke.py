"""Smoke tests for the python extension module."""

import math

import numpy as np
import pytest

try:
    import _curvlab as cl
except ImportError:  # installed-package layout
    from curvlab import _curvlab as cl

PI2 = math.pi * math.pi


def test_functionals_round_sphere():
    rep = cl.functionals("s4", alpha=0.5, radius=1.0)
    assert rep["functionals_pi2"]["F_Rm"] == pytest.approx(16.0, rel=1e-12)
    assert rep["functionals_pi2"]["F_R"] == pytest.approx(384.0, rel=1e-12)
    assert abs(rep["functionals"]["gb_residual"]) <= 1e-8
    assert rep["pinching"]["small_energy"]["holds"]


def test_kulkarni_nomizu_and_inner():
    g = np.eye(4)
    gg = cl.kulkarni_nomizu(g, g)
    assert gg[0, 1, 0, 1] == pytest.approx(2.0)
    assert cl.df_inner(gg, gg, g) == pytest.approx(24.0, rel=1e-12)


def test_decompose_constant_curvature():
    g = np.eye(4)
    rm = 0.5 * cl.kulkarni_nomizu(g, g)
    parts = cl.decompose(rm, g)
    assert parts["scal"] == pytest.approx(12.0, rel=1e-12)
    assert np.abs(parts["weyl"]).max() <= 1e-12
    assert np.abs(parts["ric0"]).max() <= 1e-12


def test_psmajor_fuzz():
    for seed in range(200):
        lhs, rhs = cl.psmajor_sides(seed)
        assert lhs <= rhs + 1e-12 * (1.0 + rhs)


def test_classify_trichotomy():
    assert cl.classify(4, 0.1)["class"] == "strongly_elliptic"
    assert cl.classify(4, 1.0 / 6.0)["class"] == "not_elliptic"
    assert cl.classify(4, 0.4)["class"] == "not_strongly_elliptic"
    assert cl.flow_coefficient(1.0, 4) == pytest.approx(0.0)
    assert cl.flow_coefficient(0.5, 3) == pytest.approx(0.125)
    ev = cl.symbol_eigenvalues(4, 1.0 / 12.0, [1.0, 0.0, 0.0, 0.0])
    assert min(ev) == pytest.approx(-0.5, rel=1e-12)
    assert max(ev) == pytest.approx(-0.25, rel=1e-12)


def test_sphere_jet_curvature():
    rm = cl.sphere_jet_curvature(3, 1.0)
    assert rm[0, 1, 0, 1] == pytest.approx(1.0, rel=1e-10)


def test_identities():
    for rep in cl.verify_identities(3, n=4, degree=6):
        assert rep["residual"] <= 1e-8, rep["name"]
    for rep in cl.verify_first_variations(3, n=3, degree=6):
        assert rep["residual"] <= 1e-8, rep["name"]


def test_flow_oracle():
    out = cl.integrate_flow("s3-round", 0.1, [1.0], horizon=10.0)
    assert out["event"] == "horizon_reached"
    states = out["states"]
    t_final, c_final = states[-1, 0], states[-1, 1]
    assert t_final == pytest.approx(10.0)
    assert c_final == pytest.approx(math.sqrt(1.0 + 12.0 * 0.1 * 10.0), rel=1e-6)
    assert out["summary"]["monitors"]["dissipation_residual"] <= 1e-6 * (1 + states[0, 2])
    assert "s2xs2" in cl.family_names()


def test_estimates():
    r = cl.interpolation_ratio(5, n=1, grid=64, band=8, k=1, m=2, alpha=0.5, beta=0.5)
    assert 0.0 < r <= 10.0
    seq = [math.exp(k * k * 0.1) for k in range(5)]
    chk = cl.hamilton_sequence_check(seq, 1.0)
    assert chk["hypothesis_ok"] and chk["conclusion_ok"]
