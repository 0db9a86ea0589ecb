import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tunable_cnot.errors import TimeOutOfRange
from tunable_cnot.pulses import (CNOT_AREA, PulseProfile, SampledProfile, area_analytic,
                                 area_numeric, evaluate, inverted_poly, landau_hat,
                                 profile_from_dict, pulse_area, rectangular, sinusoidal,
                                 solve_gate_time, solve_gate_time_bisect, solved,
                                 table_gate_times, trapezoidal)

GOLDEN_TABLE = [1.0000, 1.0256, 1.2500, 2.0000, 1.5000, 1.2500, 1.1667, 1.1250, 2.0000, 1.8750]


def gauss_legendre_area(profile, order=64):
    """Independent oracle: fixed high-order Gauss-Legendre on each smooth piece."""
    x, w = np.polynomial.legendre.leggauss(order)
    total = 0.0
    pts = profile.breakpoints
    for lo, hi in zip(pts[:-1], pts[1:]):
        if hi > lo:
            t = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
            total += 0.5 * (hi - lo) * np.dot(w, evaluate(profile, t))
    return total


def all_families(g=1.0, t1=1.0):
    return [rectangular(g, t1), trapezoidal(0.2, g, t1), trapezoidal(0.5, g, t1),
            trapezoidal(0.0, g, t1), inverted_poly(1, g, t1), inverted_poly(3, g, t1),
            sinusoidal(g, t1), landau_hat(g, t1)]


def test_evaluate_examples():
    assert evaluate(landau_hat(2.0, 3.0), 1.5) == 2.0
    assert evaluate(sinusoidal(2.0, 3.0), 0.0) == 0.0
    assert evaluate(inverted_poly(1, 2.0, 1.0), 0.25) == pytest.approx(1.5, abs=1e-15)
    assert evaluate(rectangular(1.5, 2.0), 0.0) == 1.5


def test_trapezoid_pieces():
    p = trapezoidal(0.2, 2.0, 10.0)
    assert evaluate(p, 1.0) == pytest.approx(1.0)
    assert evaluate(p, 2.0) == pytest.approx(2.0)
    assert evaluate(p, 5.0) == 2.0
    assert evaluate(p, 9.0) == pytest.approx(1.0)
    tri = trapezoidal(0.5, 1.0, 1.0)
    assert evaluate(tri, 0.5) == pytest.approx(1.0)
    assert evaluate(tri, 0.25) == pytest.approx(0.5)
    assert np.all(evaluate(trapezoidal(0.0, 1.0, 1.0), np.linspace(0, 1, 7)) == 1.0)


def test_endpoints_and_bounds():
    for p in all_families(1.7, 2.3):
        t = np.linspace(0, p.t1, 1001)
        g = evaluate(p, t)
        assert np.all(g >= -1e-15) and np.all(g <= p.g_peak * (1 + 1e-15))
        if p.family == "rectangular" or (p.family == "trapezoidal" and p.epsilon == 0):
            assert g[0] == g[-1] == p.g_peak
        else:
            assert abs(g[0]) < 1e-14 and abs(g[-1]) < 1e-14


def test_continuity():
    for p in all_families():
        t = np.linspace(0, 1, 4001)
        # every family is Lipschitz with constant <= 16 g / t1 for n <= 3
        assert np.max(np.abs(np.diff(evaluate(p, t)))) <= 16 * p.g_peak / 4000
        for b in p.breakpoints[1:-1]:
            d = 1e-9
            assert abs(evaluate(p, b + d) - evaluate(p, b - d)) < 1e-6


def test_time_out_of_range():
    p = sinusoidal(1.0, 2.0)
    with pytest.raises(TimeOutOfRange):
        evaluate(p, -0.1)
    with pytest.raises(TimeOutOfRange):
        evaluate(p, 2.01)
    with pytest.raises(TimeOutOfRange):
        evaluate(p, np.array([0.5, 3.0]))


@pytest.mark.parametrize("kwargs", [
    dict(family="trapezoidal", g_peak=1, t1=1, epsilon=0.6),
    dict(family="trapezoidal", g_peak=1, t1=1),
    dict(family="inverted_poly", g_peak=1, t1=1, n=0),
    dict(family="inverted_poly", g_peak=1, t1=1, n=1.5),
    dict(family="sinusoidal", g_peak=1, t1=1, n=2),
    dict(family="landau_hat", g_peak=-1, t1=1),
    dict(family="landau_hat", g_peak=1, t1=0),
    dict(family="gaussian", g_peak=1, t1=1),
])
def test_invalid_profiles(kwargs):
    with pytest.raises(ValueError):
        PulseProfile(**kwargs)


def test_area_analytic_examples():
    assert area_analytic(trapezoidal(0.2, 1.0, 1.0)) == pytest.approx(0.8, abs=1e-15)
    assert area_analytic(landau_hat(1.0, 1.0)) == pytest.approx(8 / 15, abs=1e-15)
    assert area_analytic(inverted_poly(2, 1.0, 1.0)) == pytest.approx(0.8, abs=1e-15)
    assert area_analytic(sinusoidal(2.0, 1.0)) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(TypeError):
        area_analytic(SampledProfile([0, 1], [0, 1]))


@pytest.mark.parametrize("profile", all_families(1.3, 0.9), ids=lambda p: f"{p.family}-{p.epsilon}-{p.n}")
def test_area_analytic_matches_gauss_legendre(profile):
    assert area_analytic(profile) == pytest.approx(gauss_legendre_area(profile), abs=1e-13)


def test_area_numeric_examples():
    assert area_numeric(rectangular(1.0, math.pi / 2), 1e-12) == pytest.approx(math.pi / 2, abs=1e-12)
    assert area_numeric(sinusoidal(2.0, 1.0), 1e-12) == pytest.approx(1.0, abs=1e-12)
    assert area_numeric(landau_hat(1.0, 15 / 8), 1e-12) == pytest.approx(1.0, abs=1e-12)


def test_area_numeric_rejects_bad_tol():
    with pytest.raises(ValueError):
        area_numeric(sinusoidal(1.0, 1.0), 0.0)


@st.composite
def profiles(draw):
    fam = draw(st.sampled_from(["rectangular", "trapezoidal", "inverted_poly", "sinusoidal", "landau_hat"]))
    g = draw(st.floats(0.05, 10))
    t1 = draw(st.floats(0.05, 10))
    kw = {}
    if fam == "trapezoidal":
        kw["epsilon"] = draw(st.floats(0, 0.5))
    if fam == "inverted_poly":
        kw["n"] = draw(st.integers(1, 6))
    return PulseProfile(fam, g, t1, **kw)


@settings(max_examples=150, deadline=None)
@given(profiles())
def test_numeric_area_agrees_with_closed_form(p):
    assert abs(area_numeric(p) - area_analytic(p)) < 1e-10


@settings(max_examples=100, deadline=None)
@given(profiles())
def test_solve_round_trip(p):
    s = solved(p)
    assert abs(area_analytic(s) - CNOT_AREA) < 1e-12
    assert s.with_t1(p.t1) == p


def test_solve_gate_time_examples():
    unit = math.pi / 2
    assert solve_gate_time("trapezoidal", 1.0, epsilon=0.025) / unit == pytest.approx(1.0256, abs=5e-5)
    assert solve_gate_time("inverted_poly", 1.0, n=3) / unit == pytest.approx(1.1667, abs=5e-5)
    assert solve_gate_time("sinusoidal", 1.0) / unit == pytest.approx(2.0, abs=1e-15)
    # t1 scales as 1/g
    assert solve_gate_time("landau_hat", 4.0) == pytest.approx(solve_gate_time("landau_hat", 1.0) / 4)
    with pytest.raises(ValueError):
        solve_gate_time("sinusoidal", 0.0)


def test_table_matches_printed_values():
    rows = table_gate_times(1.0)
    assert [f"{r.t1_units:.4f}" for r in rows] == [f"{v:.4f}" for v in GOLDEN_TABLE]
    assert (rows[3].label, rows[3].profile, f"{rows[3].t1_units:.4f}") == ("slow", "triangular", "2.0000")
    assert (rows[7].profile, f"{rows[7].t1_units:.4f}") == ("inverted octagonic", "1.1250")
    assert (rows[9].label, rows[9].profile, f"{rows[9].t1_units:.4f}") == ("soft quartic", "Landau's hat", "1.8750")


def test_table_independent_of_g():
    a = [r.t1_units for r in table_gate_times(1.0)]
    b = [r.t1_units for r in table_gate_times(7.3)]
    assert np.allclose(a, b, rtol=1e-14)


def test_limits():
    unit = math.pi / 2
    assert solve_gate_time("trapezoidal", 1.0, epsilon=1e-9) / unit == pytest.approx(1.0, abs=1e-8)
    factors = [solve_gate_time("inverted_poly", 1.0, n=n) / unit for n in range(1, 40)]
    assert all(a > b for a, b in zip(factors, factors[1:]))
    assert factors[-1] == pytest.approx(1.0, abs=0.02)


def test_sampled_profile():
    times = np.linspace(0, 2, 41)
    values = np.sin(np.pi * times / 2)
    p = SampledProfile(times, values)
    assert p.t1 == 2.0 and p.family == "sampled"
    assert evaluate(p, 0.025) == pytest.approx(0.5 * (values[0] + values[1]))
    # trapezoid rule over the samples is exact for a piecewise-linear trace
    trap = np.sum(0.5 * (values[1:] + values[:-1]) * np.diff(times))
    assert area_numeric(p) == pytest.approx(trap, abs=1e-12)
    assert pulse_area(p) == area_numeric(p)
    with pytest.raises(ValueError):
        SampledProfile([0, 1, 1], [0, 1, 0])
    with pytest.raises(ValueError):
        SampledProfile([0, 1], [0, -1])


def test_sampled_bisection_solve():
    p = SampledProfile([0.0, 0.3, 0.7, 1.0], [0.0, 1.0, 1.0, 0.0])
    s = solved(p)
    assert abs(area_numeric(s) - CNOT_AREA) <= 1e-12
    # shape 0.7 of the hull area -> t1 = (pi/2) / 0.7
    assert s.t1 == pytest.approx(CNOT_AREA / 0.7, rel=1e-11)
    t1, prof = solve_gate_time_bisect(lambda t: landau_hat(1.0, t))
    assert t1 == pytest.approx(solve_gate_time("landau_hat", 1.0), rel=1e-11)


def test_profile_json_round_trip():
    for p in all_families(1.2, 0.8):
        assert profile_from_dict(p.to_dict()) == p
    assert trapezoidal(0.2, 1.0, 2.0).to_dict() == {"family": "trapezoidal", "epsilon": 0.2, "g_peak": 1.0, "t1": 2.0}
    s = profile_from_dict({"family": "sampled", "times": [0, 1], "values": [1, 1]})
    assert isinstance(s, SampledProfile)
    with pytest.raises(ValueError):
        profile_from_dict({"family": "sinusoidal", "g_peak": 1, "t1": 1, "width": 3})
