"""Time-ordered numerical propagation of gate schedules.

Each coupled segment is cut into steps, and each step contributes
``exp(-i H(t_mid) dt)`` with ``H`` rebuilt from the full rotating-frame
Hamiltonian at the step midpoint. Nothing here assumes that ``H(t)``
commutes with itself at different times; that property is what the
results are compared against.
"""
import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .equivalence import phase_invariant_fidelity
from .operators import CNOT, I4, X, XX, YY, ZZ, dagger, expm_hermitian, max_norm_diff, on_qubit
from .pulses import evaluate
from .steering import CoupledEvolution, cnot_schedule, compose, lambda_coeffs

DEFAULT_STEPS = 4096
METHODS = ("midpoint-exponential",)


@dataclass(frozen=True)
class PropagationConfig:
    steps: int = DEFAULT_STEPS
    method: str = "midpoint-exponential"
    tracking_perturbation: tuple = (0.0, 0.0)

    def __post_init__(self):
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError("steps must be an integer >= 2")
        if self.method not in METHODS:
            raise ValueError(f"unknown propagation method {self.method!r}")
        d = tuple(float(x) for x in self.tracking_perturbation)
        if len(d) != 2 or not all(math.isfinite(x) for x in d):
            raise ValueError("tracking_perturbation must be two finite numbers")
        object.__setattr__(self, "steps", int(self.steps))
        object.__setattr__(self, "tracking_perturbation", d)


def step_grid(breakpoints, steps):
    """Step edges covering the breakpoints, with every breakpoint an edge.

    Steps are shared among the smooth pieces in proportion to their length,
    at least one per piece. If there are more pieces than steps, the grid
    falls back to uniform spacing.
    """
    pts = np.unique(np.asarray(breakpoints, dtype=float))
    lengths = np.diff(pts)
    span = pts[-1] - pts[0]
    if len(lengths) > steps:
        return np.linspace(pts[0], pts[-1], steps + 1)
    counts = np.maximum(1, np.round(steps * lengths / span).astype(int))
    # hand surplus / deficit to the longest pieces
    while counts.sum() > steps:
        i = int(np.argmax(np.where(counts > 1, lengths / counts, -1.0)))
        counts[i] -= 1
    while counts.sum() < steps:
        counts[int(np.argmax(lengths / counts))] += 1
    edges = [np.linspace(lo, hi, n + 1)[:-1] for lo, hi, n in zip(pts[:-1], pts[1:], counts)]
    return np.concatenate(edges + [pts[-1:]])


def segment_factors(segment, config):
    """Per-step propagators of a coupled segment, in time order."""
    edges = step_grid(segment.profile.breakpoints, config.steps)
    dt = np.diff(edges)
    t_mid = 0.5 * (edges[:-1] + edges[1:])
    g = np.asarray(evaluate(segment.profile, t_mid), dtype=float)
    c1, c2 = segment.drive_scales(config.tracking_perturbation)
    k = segment.params.k
    omega1, omega2 = c1 * g, c2 * g
    x1, x2 = on_qubit(X, 1), on_qubit(X, 2)
    coupling = XX + YY + k * ZZ
    h = (0.5 * omega1[:, None, None] * x1 + 0.5 * omega2[:, None, None] * x2
         + 0.5 * g[:, None, None] * coupling)
    return expm_hermitian(h, dt)


def _polar_step(f):
    # one Newton-Schulz iteration towards the nearest unitary; step factors
    # share eigenvectors under tracking, so their round-off adds coherently
    return 0.5 * f @ (3.0 * np.eye(f.shape[-1]) - dagger(f) @ f)


def ordered_product(factors):
    """``F[n-1] @ ... @ F[1] @ F[0]`` by pairwise reduction.

    Partial products are re-unitarised after every level, which keeps
    ``|U^+U - I|`` at round-off for 1e5 and more factors.
    """
    f = _polar_step(np.asarray(factors))
    if len(f) == 0:
        return I4.copy()
    while len(f) > 1:
        if len(f) % 2:
            tail = f[-1:]
            f = f[:-1]
        else:
            tail = None
        f = _polar_step(f[1::2] @ f[0::2])
        if tail is not None:
            f = np.concatenate([f, tail])
    return f[0]


def propagate(schedule, config=None):
    """Numerically propagated unitary of ``schedule``."""
    config = config or PropagationConfig()
    u = I4.copy()
    for seg in schedule.segments:
        if isinstance(seg, CoupledEvolution):
            u = ordered_product(segment_factors(seg, config)) @ u
        else:
            u = seg.unitary() @ u
    return u


def convergence_scan(schedule, steps_list, tracking_perturbation=(0.0, 0.0)):
    """``[(steps, max|U_numeric - U_exact|), ...]`` for ascending ``steps_list``."""
    steps_list = list(steps_list)
    if steps_list != sorted(steps_list):
        raise ValueError("steps_list must be ascending")
    exact = compose(schedule, tracking_perturbation)
    out = []
    for n in steps_list:
        config = PropagationConfig(n, tracking_perturbation=tracking_perturbation)
        out.append((n, max_norm_diff(propagate(schedule, config), exact)))
    return out


def _ordered_map(fn, items, workers):
    items = list(items)
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def tracking_sensitivity(k, profile, delta_grid, steps=DEFAULT_STEPS, workers=None):
    """Fidelity to CNOT of the full gate with drives ``Lambda_i (1 + delta_i) g``.

    ``profile`` must already have area pi/2. Returns
    ``[(delta1, delta2, fidelity), ...]`` in the order of ``delta_grid``.
    """
    schedule = cnot_schedule(lambda_coeffs(k), profile)

    def point(delta):
        d1, d2 = float(delta[0]), float(delta[1])
        u = propagate(schedule, PropagationConfig(steps, tracking_perturbation=(d1, d2)))
        return d1, d2, phase_invariant_fidelity(u, CNOT)

    return _ordered_map(point, delta_grid, workers)


def area_sweep(k, profile, factors, steps=DEFAULT_STEPS, workers=None):
    """Fidelity to CNOT when the pulse area is ``factor * area(profile)``.

    The area is scaled by stretching the duration. Returns
    ``[(factor, fidelity), ...]``.
    """
    params = lambda_coeffs(k)

    def point(factor):
        factor = float(factor)
        if not factor > 0:
            raise ValueError("area factors must be positive")
        sched = cnot_schedule(params, profile.with_t1(profile.t1 * factor), check_area=False)
        u = propagate(sched, PropagationConfig(steps))
        return factor, phase_invariant_fidelity(u, CNOT)

    return _ordered_map(point, factors, workers)


def sweep_csv(rows, header, out=None):
    """Write sweep rows as CSV with 12 significant digits.

    Returns the CSV text; ``out`` may be an open text stream to write to.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{x:.12g}" for x in row])
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text
