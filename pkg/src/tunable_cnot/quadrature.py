"""Adaptive Simpson quadrature with explicit splitting at kinks."""
import math
import sys

from .errors import QuadratureNonConvergence
from .tolerances import QUAD_TOL

MAX_DEPTH = 50
MAX_INTERVALS = 200_000
_NOISE = 64 * sys.float_info.epsilon


def adaptive_simpson(f, a, b, tol=QUAD_TOL, max_depth=MAX_DEPTH):
    """Integrate scalar ``f`` over ``[a, b]`` to absolute error ``tol``.

    Classic Richardson-corrected adaptive Simpson rule, run with an explicit
    stack. Raises :class:`QuadratureNonConvergence` when an interval would
    need refining past ``max_depth`` or the interval budget is spent.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if a == b:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    # local tolerances are halved per split; tol/2 at the root leaves slack
    # for the accumulated round-off of the Richardson correction
    stack = [(a, b, fa, fm, fb, whole, 0.5 * tol, 0)]
    total = 0.0
    comp = 0.0  # Kahan compensation
    n_done = 0
    while stack:
        lo, hi, flo, fmid, fhi, s, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - s
        # below this the difference is evaluation round-off, not truncation
        noise = _NOISE * (hi - lo) * max(abs(flo), abs(flm), abs(fmid), abs(frm), abs(fhi))
        if abs(delta) <= max(15.0 * eps, noise):
            piece = left + right + delta / 15.0
            y = piece - comp
            t = total + y
            comp = (t - total) - y
            total = t
            n_done += 1
            continue
        if depth >= max_depth or n_done + len(stack) > MAX_INTERVALS:
            raise QuadratureNonConvergence(
                f"refinement limit reached on [{lo!r}, {hi!r}] (depth {depth})")
        stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * eps, depth + 1))
        stack.append((lo, mid, flo, flm, fmid, left, 0.5 * eps, depth + 1))
    return total


def integrate_piecewise(pieces, tol=QUAD_TOL):
    """Sum of adaptive integrals over ``pieces``, an iterable of ``(f, lo, hi)``.

    The tolerance is shared equally among the non-empty pieces.
    """
    pieces = [(f, float(lo), float(hi)) for f, lo, hi in pieces if hi > lo]
    if not pieces:
        return 0.0
    share = tol / len(pieces)
    return math.fsum(adaptive_simpson(f, lo, hi, share) for f, lo, hi in pieces)
