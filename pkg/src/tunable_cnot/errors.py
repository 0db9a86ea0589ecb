"""Exception types raised by the package."""


class NonHermitianInput(ValueError):
    """A generator passed to a matrix exponential is not Hermitian."""


class NonUnitaryInput(ValueError):
    """A gate passed to an equivalence routine is not unitary."""


class KOutOfRange(ValueError):
    """Coupling anisotropy outside the range where the tracking
    coefficients are defined (|k| <= 7)."""


class AreaMismatch(ValueError):
    """Pulse area differs from the pi/2 required for the CNOT."""


class TimeOutOfRange(ValueError):
    """Pulse evaluated outside its support [0, t1]."""


class QuadratureNonConvergence(ArithmeticError):
    """Adaptive quadrature hit its refinement limit."""
