"""Numerical tolerances shared across modules."""

#: max-norm of ``M - M^dagger`` accepted as Hermitian
HERMITIAN_TOL = 1e-13
#: max-norm of ``M^dagger M - I`` accepted as unitary
UNITARY_TOL = 1e-12
#: max-norm for gate identity checks
IDENTITY_TOL = 1e-10
#: hard rejection threshold in :func:`expm_hermitian`
NON_HERMITIAN_REJECT = 1e-10
#: unitarity precondition for equivalence routines
UNITARY_INPUT_TOL = 1e-10
#: allowed deviation of a CNOT pulse area from pi/2
AREA_TOL = 1e-9
#: default absolute tolerance of the adaptive quadrature
QUAD_TOL = 1e-12
#: tolerance on the pulse area in the bisection gate-time solver
BISECT_TOL = 1e-12
#: fidelity above 1 - FIDELITY_TOL counts as equal up to global phase
FIDELITY_TOL = 1e-9
#: Makhlin invariant agreement for local equivalence
INVARIANT_TOL = 1e-8
#: propagated-vs-analytic agreement at the default step count
PROPAGATION_TOL = 1e-7
