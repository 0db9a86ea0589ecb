"""Local-equivalence tests for two-qubit gates.

Three views of "is this gate a CNOT":

* :func:`phase_invariant_fidelity` compares to a target up to global phase;
* :func:`makhlin_invariants` gives (G1, G2), unchanged by local rotations;
* :func:`weyl_coordinates` gives the canonical class vector (c1, c2, c3) with
  ``U ~ exp(i (c1 XX + c2 YY + c3 ZZ))`` folded into
  ``pi/4 >= c1 >= c2 >= |c3|`` (and ``c3 >= 0`` when ``c1 = pi/4``).
  CNOT sits at (pi/4, 0, 0).

References: Makhlin, Quant. Inf. Proc. 1, 243 (2002); Zhang et al.,
Phys. Rev. A 67, 042313 (2003).
"""
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonUnitaryInput
from .operators import dagger, unitarity_error
from .tolerances import FIDELITY_TOL, INVARIANT_TOL, UNITARY_INPUT_TOL

# Bell ("magic") basis: canonical gates are diagonal and local gates real
MAGIC = np.array([[1, 0, 0, 1j],
                  [0, 1j, 1, 0],
                  [0, 1j, -1, 0],
                  [1, 0, 0, -1j]], dtype=complex) / math.sqrt(2)

_CHAMBER_TOL = 1e-9

EXACT = "exact-up-to-phase"
LOCAL = "locally-equivalent"
INEQUIVALENT = "inequivalent"


def _require_unitary(u, name="u"):
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise ValueError(f"{name} must be a 4x4 matrix, got shape {u.shape}")
    err = unitarity_error(u)
    if not err < UNITARY_INPUT_TOL:
        raise NonUnitaryInput(f"{name} is not unitary (max|U^+U - I| = {err:.3e})")
    return u


def phase_invariant_fidelity(u, v):
    """``|tr(v^dagger u)| / 4``; equals 1 iff ``u = exp(i phi) v``."""
    u = _require_unitary(u, "u")
    v = _require_unitary(v, "v")
    return float(abs(np.trace(dagger(v) @ u)) / 4.0)


def _magic_square(u):
    ub = dagger(MAGIC) @ u @ MAGIC
    return ub.T @ ub


def makhlin_invariants(u):
    """Return ``(G1, G2)`` with G1 complex and G2 real."""
    u = _require_unitary(u)
    m = _magic_square(u)
    det = np.linalg.det(u)
    tr = np.trace(m)
    g1 = tr * tr / (16.0 * det)
    g2 = (tr * tr - np.trace(m @ m)) / (4.0 * det)
    return complex(g1), float(g2.real)


def to_su4(u):
    """Divide out ``det(u)^(1/4)`` using the principal branch."""
    det = np.linalg.det(u)
    return u * np.exp(-0.25j * np.angle(det))


def weyl_coordinates(u):
    """Canonical class vector ``(c1, c2, c3)`` in radians."""
    u = to_su4(_require_unitary(u))
    eig = np.linalg.eigvals(_magic_square(u))
    # eigenphases of the canonical part, each known modulo pi
    lam = np.sort(0.5 * np.angle(eig))
    # pick the lift whose sum is zero, as det = 1 requires
    shift = int(round(lam.sum() / math.pi))
    if shift > 0:
        lam[len(lam) - shift:] -= math.pi
    elif shift < 0:
        lam[:-shift] += math.pi
    c = 0.5 * np.array([lam[0] + lam[1], lam[1] + lam[3], lam[0] + lam[3]])
    return fold_weyl(c)


def fold_weyl(c):
    """Map any coordinate triple to its representative in the Weyl chamber.

    Uses the moves that preserve local equivalence: shifting one coordinate
    by pi/2, permuting coordinates, and negating two at once.
    """
    q = 0.25 * math.pi
    c = np.mod(np.asarray(c, dtype=float) + q, 2 * q) - q
    # treat the -pi/4 edge as +pi/4 so near-boundary values sort stably
    c[np.isclose(c, -q, rtol=0.0, atol=_CHAMBER_TOL)] = q
    c = c[np.argsort(-np.abs(c), kind="stable")]
    if c[0] < 0:
        c[0], c[2] = -c[0], -c[2]
    if c[1] < 0:
        c[1], c[2] = -c[1], -c[2]
    if c[2] < 0 and abs(c[0] - q) < _CHAMBER_TOL:
        c[2] = -c[2]
    c[np.abs(c) < 1e-15] = 0.0
    return tuple(float(x) for x in c)


def canonical_gate(c1, c2, c3):
    """``exp(i (c1 XX + c2 YY + c3 ZZ))`` built in the magic basis."""
    lam = np.array([c1 - c2 + c3, c1 + c2 - c3, -c1 - c2 - c3, -c1 + c2 + c3])
    return MAGIC @ np.diag(np.exp(1j * lam)) @ dagger(MAGIC)


@dataclass(frozen=True)
class EquivalenceReport:
    fidelity: float
    makhlin_g1: complex
    makhlin_g2: float
    weyl_coords: tuple
    verdict: str

    def to_dict(self):
        return {
            "fidelity": float(f"{self.fidelity:.12g}"),
            "makhlin_g1": [self.makhlin_g1.real, self.makhlin_g1.imag],
            "makhlin_g2": self.makhlin_g2,
            "weyl_coords": list(self.weyl_coords),
            "verdict": self.verdict,
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def classify(u, target, fidelity_tol=FIDELITY_TOL, invariant_tol=INVARIANT_TOL):
    """Compare ``u`` against ``target``.

    The verdict is ``exact-up-to-phase`` when the phase-invariant fidelity
    exceeds ``1 - fidelity_tol``, ``locally-equivalent`` when both Makhlin
    invariants agree to ``invariant_tol``, and ``inequivalent`` otherwise.
    """
    fid = phase_invariant_fidelity(u, target)
    g1, g2 = makhlin_invariants(u)
    t1, t2 = makhlin_invariants(target)
    if fid > 1.0 - fidelity_tol:
        verdict = EXACT
    elif abs(g1 - t1) < invariant_tol and abs(g2 - t2) < invariant_tol:
        verdict = LOCAL
    else:
        verdict = INEQUIVALENT
    return EquivalenceReport(fid, g1, g2, weyl_coordinates(u), verdict)
