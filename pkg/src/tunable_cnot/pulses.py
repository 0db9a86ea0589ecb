"""Coupling switching profiles g(t), their areas, and CNOT gate times.

Every analytic family has an area linear in the duration,
``theta = g_peak * t1 * area_factor``, so the gate time that gives
``theta = pi/2`` (hbar = 1) is found in closed form. Measured traces are
supported through :class:`SampledProfile`, whose area is only available by
quadrature.
"""
import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple

import numpy as np

from .errors import TimeOutOfRange
from .quadrature import integrate_piecewise
from .tolerances import BISECT_TOL, QUAD_TOL

FAMILIES = ("rectangular", "trapezoidal", "inverted_poly", "sinusoidal", "landau_hat")
CNOT_AREA = math.pi / 2

# relative slack when checking that t lies inside [0, t1]
_T_SLACK = 1e-12


@dataclass(frozen=True)
class PulseProfile:
    """One member of an analytic switching family.

    ``epsilon`` is the ramp fraction of a trapezoid (0 <= epsilon <= 1/2) and
    ``n`` the order of an inverted ``2n``-polynomial; other families take
    neither.
    """

    family: str
    g_peak: float
    t1: float
    epsilon: float | None = None
    n: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown pulse family {self.family!r}")
        if not (math.isfinite(self.g_peak) and self.g_peak > 0):
            raise ValueError("g_peak must be positive and finite")
        if not (math.isfinite(self.t1) and self.t1 > 0):
            raise ValueError("t1 must be positive and finite")
        if self.family == "trapezoidal":
            if self.epsilon is None or not 0.0 <= self.epsilon <= 0.5:
                raise ValueError("trapezoidal pulses need 0 <= epsilon <= 1/2")
        elif self.epsilon is not None:
            raise ValueError(f"{self.family} takes no epsilon")
        if self.family == "inverted_poly":
            if self.n is None or int(self.n) != self.n or self.n < 1:
                raise ValueError("inverted_poly needs an integer n >= 1")
            object.__setattr__(self, "n", int(self.n))
        elif self.n is not None:
            raise ValueError(f"{self.family} takes no n")

    @property
    def area_factor(self):
        """Ratio ``theta / (g_peak * t1)``."""
        return area_factor(self.family, epsilon=self.epsilon, n=self.n)

    @property
    def breakpoints(self):
        """Times where g(t) may fail to be smooth, including both ends."""
        if self.family == "trapezoidal" and self.epsilon * self.t1 > 0:
            ramp = self.epsilon * self.t1
            return (0.0, ramp, self.t1 - ramp, self.t1)
        return (0.0, self.t1)

    def pieces(self):
        """Smooth pieces ``(f, lo, hi)`` covering ``[0, t1]``.

        Each ``f`` is the analytic branch valid on its piece, so quadrature
        never straddles a corner.
        """
        if self.family != "trapezoidal" or self.epsilon * self.t1 == 0:
            return [(self._scalar, 0.0, self.t1)]
        g, t1 = self.g_peak, self.t1
        ramp = self.epsilon * t1
        return [(lambda t: g * t / ramp, 0.0, ramp),
                (lambda t: g, ramp, t1 - ramp),
                (lambda t: g * (t1 - t) / ramp, t1 - ramp, t1)]

    def _scalar(self, t):
        return float(_shape(self, t))

    def with_t1(self, t1):
        return replace(self, t1=t1)

    def __call__(self, t):
        return evaluate(self, t)

    def to_dict(self):
        out = {"family": self.family}
        if self.epsilon is not None:
            out["epsilon"] = self.epsilon
        if self.n is not None:
            out["n"] = self.n
        out["g_peak"] = self.g_peak
        out["t1"] = self.t1
        return out


@dataclass(frozen=True, eq=False)
class SampledProfile:
    """A measured coupling trace, linearly interpolated between samples."""

    times: np.ndarray
    values: np.ndarray
    family: str = field(default="sampled", init=False)

    def __post_init__(self):
        times = np.array(self.times, dtype=float)
        values = np.array(self.values, dtype=float)
        if times.ndim != 1 or times.shape != values.shape or times.size < 2:
            raise ValueError("times and values must be 1-D arrays of equal length >= 2")
        if times[0] != 0.0 or np.any(np.diff(times) <= 0):
            raise ValueError("times must start at 0 and increase strictly")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise ValueError("sampled coupling values must be finite and non-negative")
        times.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    @property
    def t1(self):
        return float(self.times[-1])

    @property
    def g_peak(self):
        return float(self.values.max())

    @property
    def breakpoints(self):
        return tuple(self.times)

    def pieces(self):
        t, v = self.times, self.values
        return [(_line(t[i], t[i + 1], v[i], v[i + 1]), t[i], t[i + 1]) for i in range(len(t) - 1)]

    def with_t1(self, t1):
        """Stretch the trace in time so it ends at ``t1``."""
        return SampledProfile(self.times * (t1 / self.t1), self.values)

    def __call__(self, t):
        return evaluate(self, t)

    def to_dict(self):
        return {"family": "sampled", "times": self.times.tolist(),
                "values": self.values.tolist()}


def _line(t0, t1, v0, v1):
    slope = (v1 - v0) / (t1 - t0)
    return lambda t: v0 + slope * (t - t0)


def rectangular(g_peak, t1):
    return PulseProfile("rectangular", g_peak, t1)


def trapezoidal(epsilon, g_peak, t1):
    return PulseProfile("trapezoidal", g_peak, t1, epsilon=epsilon)


def inverted_poly(n, g_peak, t1):
    return PulseProfile("inverted_poly", g_peak, t1, n=n)


def sinusoidal(g_peak, t1):
    return PulseProfile("sinusoidal", g_peak, t1)


def landau_hat(g_peak, t1):
    return PulseProfile("landau_hat", g_peak, t1)


def profile_from_dict(data):
    """Build a profile from its JSON form (see ``to_dict``)."""
    data = dict(data)
    family = data.pop("family", None)
    if family == "sampled":
        return SampledProfile(data["times"], data["values"])
    if family not in FAMILIES:
        raise ValueError(f"unknown pulse family {family!r}")
    unknown = set(data) - {"g_peak", "t1", "epsilon", "n"}
    if unknown:
        raise ValueError(f"unexpected profile fields: {sorted(unknown)}")
    return PulseProfile(family, float(data["g_peak"]), float(data["t1"]),
                        epsilon=data.get("epsilon"), n=data.get("n"))


def area_factor(family, epsilon=None, n=None):
    """theta / (g_peak t1) for an analytic family."""
    if family == "rectangular":
        return 1.0
    if family == "trapezoidal":
        return 1.0 - epsilon
    if family == "inverted_poly":
        return 1.0 - 1.0 / (2 * n + 1)
    if family == "sinusoidal":
        return 0.5
    if family == "landau_hat":
        return 8.0 / 15.0
    raise ValueError(f"no closed-form area for family {family!r}")


def evaluate(profile, t):
    """Coupling strength g(t); ``t`` may be a scalar or an array.

    Raises :class:`TimeOutOfRange` for ``t`` outside ``[0, t1]``.
    """
    t_arr = np.asarray(t, dtype=float)
    t1 = profile.t1
    slack = _T_SLACK * t1
    if np.any(t_arr < -slack) or np.any(t_arr > t1 + slack) or np.any(np.isnan(t_arr)):
        raise TimeOutOfRange(f"t must lie in [0, {t1!r}]")
    t_arr = np.clip(t_arr, 0.0, t1)
    out = _shape(profile, t_arr)
    return float(out) if np.ndim(out) == 0 else out


def _shape(profile, t):
    if profile.family == "sampled":
        return np.interp(t, profile.times, profile.values)
    g, t1 = profile.g_peak, profile.t1
    s = t / t1
    fam = profile.family
    if fam == "rectangular":
        return g * np.ones_like(s)
    if fam == "trapezoidal":
        ramp = profile.epsilon * t1
        if ramp == 0:
            return g * np.ones_like(s)
        # t1 - t is exact for t >= t1/2; 1 - t/t1 would cancel badly for small eps
        return g * np.minimum(1.0, np.minimum(t, t1 - t) / ramp)
    if fam == "inverted_poly":
        return g * (1.0 - (2.0 * s - 1.0) ** (2 * profile.n))
    if fam == "sinusoidal":
        return 0.5 * g * (1.0 - np.cos(2.0 * np.pi * s))
    if fam == "landau_hat":
        x2 = (2.0 * s - 1.0) ** 2
        return g * (1.0 + x2 * x2 - 2.0 * x2)
    raise AssertionError(fam)


def area_analytic(profile):
    """Closed-form pulse area theta = integral of g over [0, t1] (hbar = 1)."""
    if profile.family == "sampled":
        raise TypeError("sampled profiles have no closed-form area; use area_numeric")
    return profile.g_peak * profile.t1 * profile.area_factor


def area_numeric(profile, tol=QUAD_TOL):
    """Pulse area by adaptive Simpson quadrature, split at the profile's kinks."""
    if not tol > 0:
        raise ValueError("tol must be positive")

    return integrate_piecewise(profile.pieces(), tol)


def pulse_area(profile, tol=QUAD_TOL):
    """Analytic area when the family has one, quadrature otherwise."""
    if profile.family == "sampled":
        return area_numeric(profile, tol)
    return area_analytic(profile)


def solve_gate_time(family, g_peak, epsilon=None, n=None, target=CNOT_AREA):
    """Duration t1 for which the pulse area equals ``target`` (pi/2 by default)."""
    if not g_peak > 0:
        raise ValueError("g_peak must be positive")
    return target / (g_peak * area_factor(family, epsilon=epsilon, n=n))


def solved(profile, target=CNOT_AREA):
    """Copy of ``profile`` with its duration set so the area is ``target``."""
    if profile.family == "sampled":
        return solve_gate_time_bisect(profile.with_t1, target)[1]
    t1 = solve_gate_time(profile.family, profile.g_peak, profile.epsilon, profile.n, target)
    return profile.with_t1(t1)


def solve_gate_time_bisect(make_profile, target=CNOT_AREA, t_guess=1.0, tol=BISECT_TOL):
    """Find t1 with ``area_numeric(make_profile(t1)) == target`` by bisection.

    ``make_profile(t1)`` must return a non-negative profile whose area grows
    monotonically with ``t1``. Returns ``(t1, profile)``.
    """
    quad_tol = 0.1 * tol

    def area(t1):
        return area_numeric(make_profile(t1), quad_tol)

    lo, hi = 0.0, float(t_guess)
    for _ in range(200):
        if area(hi) >= target:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise ValueError("could not bracket the target area")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        a = area(mid)
        if abs(a - target) <= tol:
            return mid, make_profile(mid)
        if a < target:
            lo = mid
        else:
            hi = mid
    raise ValueError("bisection did not reach the requested area tolerance")


class TableRow(NamedTuple):
    label: str
    profile: str
    family: str
    param: str
    t1_units: float


_POLY_NAMES = {1: "inverted quadratic", 2: "inverted quartic",
               3: "inverted hexagonic", 4: "inverted octagonic"}


def table_gate_times(g_peak=1.0):
    """CNOT gate times for the standard switching profiles.

    ``t1_units`` is the gate time in units of ``pi hbar / (2 g_peak)``.
    """
    unit = CNOT_AREA / g_peak
    rows = []
    for eps, label, name in [(0.0, "none", "rectangular"), (0.025, "fast", "trapezoidal"),
                             (0.2, "moderate", "trapezoidal"), (0.5, "slow", "triangular")]:
        t1 = solve_gate_time("trapezoidal", g_peak, epsilon=eps)
        rows.append(TableRow(label, name, "trapezoidal", f"epsilon={eps:.4f}", t1 / unit))
    for n in (1, 2, 3, 4):
        t1 = solve_gate_time("inverted_poly", g_peak, n=n)
        rows.append(TableRow(f"n={n}", _POLY_NAMES[n], "inverted_poly", f"n={n}", t1 / unit))
    rows.append(TableRow("sinusoidal", "inverted cosine", "sinusoidal", "",
                         solve_gate_time("sinusoidal", g_peak) / unit))
    rows.append(TableRow("soft quartic", "Landau's hat", "landau_hat", "",
                         solve_gate_time("landau_hat", g_peak) / unit))
    return rows
