"""CNOT gates for resonantly driven qubits with tunable coupling.

Drives slaved to the coupling (``Omega_i = Lambda_i g``) make the two-qubit
Hamiltonian a fixed matrix times ``g(t)``. Any switching profile with area
pi/2 then produces the CNOT class, and four steps give the CNOT itself.
"""
from .equivalence import (EquivalenceReport, classify, makhlin_invariants,
                          phase_invariant_fidelity, weyl_coordinates)
from .errors import (AreaMismatch, KOutOfRange, NonHermitianInput, NonUnitaryInput,
                     QuadratureNonConvergence, TimeOutOfRange)
from .operators import CNOT, CNOT_WEYL, expm_hermitian, kron, max_norm_diff, pauli
from .propagator import (PropagationConfig, area_sweep, convergence_scan, propagate,
                         tracking_sensitivity)
from .pulses import (PulseProfile, SampledProfile, area_analytic, area_numeric, evaluate,
                     inverted_poly, landau_hat, rectangular, sinusoidal, solve_gate_time,
                     solved, table_gate_times, trapezoidal)
from .steering import (CouplingParams, GateSchedule, cnot_schedule, compose, hamiltonian,
                       lambda_coeffs, steered_evolution, steering_generator)

__version__ = "0.1.0"
