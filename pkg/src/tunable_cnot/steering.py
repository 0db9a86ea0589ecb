"""Tracked-drive steering of two coupled qubits onto the CNOT class.

In the doubly rotating frame (hbar = 1) the pair evolves under

    H(t) = sum_i Omega_i(t)/2 X_i + g(t)/2 (XX + YY + k ZZ).

Slaving the drives to the coupling, ``Omega_i(t) = Lambda_i g(t)``, turns
this into ``g(t) * Hfix`` with a constant generator ``Hfix``. The evolution
then depends on the pulse only through its area ``theta``, and
``theta = pi/2`` lands exactly on ``exp(-i pi/4 XX)``.

Local rotations follow ``R_a(phi) = exp(-i phi/2 sigma_a)`` and are
treated as instantaneous, applied with the coupling switched off.
"""
import json
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import AreaMismatch, KOutOfRange
from .operators import I4, X, XX, Y, YY, ZZ, expm_hermitian, kron, on_qubit, pauli
from .pulses import CNOT_AREA, profile_from_dict, pulse_area
from .tolerances import AREA_TOL

K_MAX = 7.0


@dataclass(frozen=True)
class CouplingParams:
    k: float
    lambda1: float
    lambda2: float


def lambda_coeffs(k):
    """Tracking coefficients for anisotropy ``k``; valid for ``|k| <= 7``."""
    k = float(k)
    if not (math.isfinite(k) and abs(k) <= K_MAX):
        raise KOutOfRange(f"k = {k!r} outside [-7, 7]")
    s_minus = math.sqrt(16.0 - ((k - 1.0) / 2.0) ** 2)
    s_plus = math.sqrt(16.0 - ((k + 1.0) / 2.0) ** 2)
    return CouplingParams(k, s_minus + s_plus, s_minus - s_plus)


def _coupling_part(k):
    return 0.5 * (XX + YY + k * ZZ)


def hamiltonian(omega1, omega2, g, k):
    """Rotating-frame Hamiltonian for drives ``omega1, omega2`` and coupling ``g``."""
    return (0.5 * omega1 * on_qubit(X, 1) + 0.5 * omega2 * on_qubit(X, 2)
            + g * _coupling_part(k))


@dataclass(frozen=True, eq=False)
class SteeringGenerator:
    matrix: np.ndarray
    params: CouplingParams


def steering_generator(params, delta=(0.0, 0.0)):
    """Fixed generator ``Hfix`` with ``H(t) = g(t) Hfix`` under tracking.

    ``delta`` scales the drives to ``Lambda_i (1 + delta_i) g(t)``, a model
    of imperfect tracking; the default is exact tracking.
    """
    m = hamiltonian(params.lambda1 * (1.0 + delta[0]), params.lambda2 * (1.0 + delta[1]),
                    1.0, params.k)
    m.flags.writeable = False
    return SteeringGenerator(m, params)


def steered_evolution(params, theta, delta=(0.0, 0.0)):
    """``exp(-i theta Hfix)``: the tracked evolution for pulse area ``theta``."""
    return expm_hermitian(steering_generator(params, delta).matrix, theta)


def rotation(axis, angle, qubit):
    """Single-qubit rotation ``exp(-i angle/2 sigma_axis)`` embedded on ``qubit``."""
    half = 0.5 * angle
    r = math.cos(half) * np.eye(2) - 1j * math.sin(half) * pauli(axis)
    return on_qubit(r, qubit)


@dataclass(frozen=True)
class LocalRotation:
    """Instantaneous local rotation with the coupling off.

    ``qubit`` is 1, 2 or ``"both"``; for ``"both"`` the ``angle`` is a pair
    ``(angle on qubit 1, angle on qubit 2)`` about the same axis.
    """

    qubit: object
    axis: str
    angle: object

    def unitary(self):
        if self.qubit == "both":
            a1, a2 = self.angle
            return rotation(self.axis, a1, 1) @ rotation(self.axis, a2, 2)
        return rotation(self.axis, self.angle, self.qubit)

    def to_dict(self):
        angle = list(self.angle) if self.qubit == "both" else self.angle
        return {"type": "local", "qubit": self.qubit, "axis": self.axis, "angle": angle}


@dataclass(frozen=True)
class CoupledEvolution:
    """Coupling pulse ``profile`` with the drives slaved to it.

    ``tracking`` is ``"on"`` (``Omega_i = Lambda_i g``), ``"off"``
    (``Omega_i = 0``) or a pair ``(delta1, delta2)`` for drives
    ``Lambda_i (1 + delta_i) g``.
    """

    profile: object
    params: CouplingParams
    tracking: object = "on"

    def drive_scales(self, extra=(0.0, 0.0)):
        """Multipliers (c1, c2) with Omega_i(t) = c_i g(t)."""
        if self.tracking == "off":
            return 0.0, 0.0
        d = (0.0, 0.0) if self.tracking == "on" else self.tracking
        return (self.params.lambda1 * (1.0 + d[0] + extra[0]),
                self.params.lambda2 * (1.0 + d[1] + extra[1]))

    def generator(self, extra=(0.0, 0.0)):
        c1, c2 = self.drive_scales(extra)
        return hamiltonian(c1, c2, 1.0, self.params.k)

    def unitary(self, extra=(0.0, 0.0)):
        """Exact evolution; the generator is time independent up to g(t)."""
        return expm_hermitian(self.generator(extra), pulse_area(self.profile))

    def to_dict(self):
        tracking = self.tracking if isinstance(self.tracking, str) else list(self.tracking)
        return {"type": "coupled", "profile": self.profile.to_dict(), "tracking": tracking}


@dataclass(frozen=True)
class GateSchedule:
    """Segments in execution order (first applied first)."""

    params: CouplingParams
    segments: tuple

    def __post_init__(self):
        if not self.segments:
            raise ValueError("a gate schedule needs at least one segment")
        object.__setattr__(self, "segments", tuple(self.segments))

    def to_dict(self):
        return {"k": self.params.k, "segments": [s.to_dict() for s in self.segments]}

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def schedule_from_dict(data):
    params = lambda_coeffs(data["k"])
    segments = []
    for seg in data["segments"]:
        if seg["type"] == "local":
            qubit = seg["qubit"]
            angle = tuple(seg["angle"]) if qubit == "both" else float(seg["angle"])
            segments.append(LocalRotation(qubit, seg["axis"], angle))
        elif seg["type"] == "coupled":
            tracking = seg.get("tracking", "on")
            if not isinstance(tracking, str):
                tracking = tuple(float(d) for d in tracking)
            segments.append(CoupledEvolution(profile_from_dict(seg["profile"]), params, tracking))
        else:
            raise ValueError(f"unknown segment type {seg['type']!r}")
    return GateSchedule(params, tuple(segments))


def schedule_from_json(text):
    return schedule_from_dict(json.loads(text))


def cnot_schedule(params, profile, tracking="on", check_area=True):
    """Four-step CNOT: R_y(-pi/2)_1, tracked pulse, R_x(-pi/2)_1 R_x(pi/2)_2, R_y(pi/2)_1.

    The composed unitary equals ``exp(-i pi/4) CNOT``. With ``check_area``
    the pulse must have area pi/2 to within 1e-9, otherwise
    :class:`AreaMismatch` is raised.
    """
    if check_area:
        area = pulse_area(profile)
        if abs(area - CNOT_AREA) > AREA_TOL:
            raise AreaMismatch(f"pulse area {area!r} differs from pi/2 by {area - CNOT_AREA:.3e}")
    half_pi = 0.5 * math.pi
    segments = (
        LocalRotation(1, "y", -half_pi),
        CoupledEvolution(profile, params, tracking),
        LocalRotation("both", "x", (-half_pi, half_pi)),
        LocalRotation(1, "y", half_pi),
    )
    return GateSchedule(params, segments)


def compose(schedule, extra_delta=(0.0, 0.0)):
    """Analytic unitary of a schedule (later segments multiply on the left)."""
    return reduce(lambda acc, seg: _segment_unitary(seg, extra_delta) @ acc,
                  schedule.segments, I4.copy())


def _segment_unitary(seg, extra_delta):
    if isinstance(seg, CoupledEvolution):
        return seg.unitary(extra_delta)
    return seg.unitary()


def cnot_local_factors():
    """Local factors of the CNOT construction as single exponentials, in execution order."""
    q = 0.25 * math.pi
    first = expm_hermitian(kron(Y, np.eye(2)), -q)
    middle = expm_hermitian(kron(X, np.eye(2)) - kron(np.eye(2), X), -q)
    last = expm_hermitian(kron(Y, np.eye(2)), q)
    return first, middle, last

