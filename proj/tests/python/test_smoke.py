import cmath
import math

import numpy as np
import pytest

import hslab


def test_registry():
    fams = hslab.families()
    assert len(fams) >= 40
    ids = {f["id"] for f in fams}
    assert {"cn.warped.a", "cp3.nullity.5", "ch3.nullity.10", "control.graph"} <= ids
    assert all(f["tier"] == "A" for f in hslab.families(tier="A"))
    assert hslab.describe("cp2.type2.sech")["ambient"] == "spherical-lift"
    with pytest.raises(hslab.NotFoundError):
        hslab.describe("no.such.family")


def test_evaluate_and_geometry():
    z = hslab.evaluate("cn.warped.a", [0.0, 0.5], {"n": 2, "l": 1, "a1": 2.0})
    assert np.allclose(z, [2.0, 0.5])
    g = hslab.geometry("cn.warped.a", [0.3, 0.5], {"n": 2, "l": 2, "a1": 1.5, "a2": 1.5})
    assert np.allclose(g["metric"], np.diag([2.25, 2.25]))
    assert g["lagrangian_residual"] < 1e-12
    assert g["nullity"] == 0
    rp3 = hslab.geometry("cp3.nullity.1", [0.5, 0.1, 0.2])
    assert rp3["h_norm"] < 1e-10 and rp3["nullity"] == 3
    with pytest.raises(hslab.AdmissibilityError):
        hslab.evaluate("cp2.type2.sech", [0.0, 0.0], {"m": 1.0})


def test_verify_reports():
    reports = hslab.verify("cp2.type2.sech", {"m": 3.0}, grid=40, nested=10)
    assert len(reports) == 1
    r = reports[0]
    assert r["family"] == "cp2.type2.sech" and r["params"] == {"m": 3.0}
    assert all(c["pass"] for c in r["checks"])
    assert hslab.exit_status(reports) == 0

    control = hslab.verify("control.graph", grid=40, nested=10)
    div = next(c for c in control[0]["checks"] if c["name"] == "div-jh")
    assert div["expected_fail"] and not div["pass"]
    assert hslab.exit_status(control) == 0

    with pytest.raises(hslab.ConfigError):
        hslab.verify("cp2.type2.sech", {"q": 1.0})


def test_sweep_is_deterministic():
    cfg = {"families": ["ch2.type2.e", "cn.warped.b"], "grid": {"count": 30, "nested": 8}, "draws": 1}
    a, b = hslab.sweep(cfg), hslab.sweep(dict(cfg, workers=2))
    assert a == b and len(a) == 4
    with pytest.raises(hslab.ConfigError):
        hslab.sweep({"colour": "blue"})


def test_twistor_and_variation():
    reports = hslab.twistor_residuals("6.11", grid=200)
    assert len(reports) == 1 and all(c["pass"] for c in reports[0]["checks"])
    fv = hslab.first_variation("control.graph", [0.2, 0.1], 0.5, 2.0)
    assert abs(fv["dvol_dt"] - fv["predicted"]) < 0.05 * abs(fv["predicted"])
    with pytest.raises(hslab.SupportError):
        hslab.first_variation("control.graph", [0.9, 0.1], 0.5)


def test_special_functions():
    assert abs(hslab.gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    assert abs(hslab.gamma(1 + 1j) - (0.4980156681183560 - 0.1549498283018106j)) < 1e-14
    with pytest.raises(hslab.PoleError):
        hslab.gamma(-2.0)
    value, err, terms = hslab.bessel_j(0.5, 2.0)
    assert abs(value - math.sqrt(2 / (math.pi * 2.0)) * math.sin(2.0)) < 1e-12
    assert terms > 0 and err < 1e-14
    value, err, _ = hslab.fresnel_bessel(0.5, 1.5, 1e-12)
    assert abs(value - (0.1967486804353188556 + 0.4834204527564032358j)) < 1e-11
    assert cmath.isfinite(value)
