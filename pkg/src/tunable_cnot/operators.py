"""Dense 2x2 / 4x4 operator algebra for two qubits.

Basis convention: two-qubit states are ordered |q1 q2> in
{|00>, |01>, |10>, |11>}, with qubit 1 the left (slow) Kronecker factor.
Operators are plain complex ``numpy`` arrays; nothing here mutates its
inputs.
"""
import numpy as np

from .errors import NonHermitianInput
from .tolerances import HERMITIAN_TOL, NON_HERMITIAN_REJECT, UNITARY_TOL

_PAULI = {
    "i": np.array([[1, 0], [0, 1]], dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli(axis):
    """Return the Pauli matrix for ``axis`` in {'x', 'y', 'z'} ('i' gives the identity)."""
    try:
        return _PAULI[axis.lower()].copy()
    except (KeyError, AttributeError):
        raise ValueError(f"unknown Pauli axis {axis!r}") from None


def kron(a, b):
    """Kronecker product with ``a`` acting on qubit 1."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


I2 = pauli("i")
X = pauli("x")
Y = pauli("y")
Z = pauli("z")
I4 = np.eye(4, dtype=complex)
XX = kron(X, X)
YY = kron(Y, Y)
ZZ = kron(Z, Z)

CNOT = np.array([[1, 0, 0, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1],
                 [0, 0, 1, 0]], dtype=complex)

# exp(-i pi/4 XX), the Weyl-chamber representative of the CNOT class
CNOT_WEYL = np.array([[1, 0, 0, -1j],
                      [0, 1, -1j, 0],
                      [0, -1j, 1, 0],
                      [-1j, 0, 0, 1]], dtype=complex) / np.sqrt(2)


def on_qubit(op, qubit):
    """Embed a single-qubit operator on qubit 1 or 2 of the pair."""
    if qubit == 1:
        return kron(op, I2)
    if qubit == 2:
        return kron(I2, op)
    raise ValueError(f"qubit must be 1 or 2, got {qubit!r}")


def dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def max_norm_diff(a, b):
    """Largest entrywise modulus of ``a - b``."""
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def hermiticity_error(m):
    return max_norm_diff(m, dagger(m))


def unitarity_error(m):
    m = np.asarray(m)
    eye = np.eye(m.shape[-1])
    return float(np.max(np.abs(dagger(m) @ m - eye)))


def is_hermitian(m, tol=HERMITIAN_TOL):
    return hermiticity_error(m) < tol


def is_unitary(m, tol=UNITARY_TOL):
    return unitarity_error(m) < tol


def commutator(a, b):
    return a @ b - b @ a


def expm_hermitian(h, angle):
    """Return ``exp(-i * angle * h)`` for Hermitian ``h``.

    Uses the eigendecomposition ``h = V diag(w) V^dagger`` so the result is
    unitary to round-off. ``h`` may be a stack of shape ``(..., n, n)``;
    ``angle`` is then broadcast against the leading axes.

    Raises
    ------
    NonHermitianInput
        If ``max|h - h^dagger| >= 1e-10``.
    """
    h = np.asarray(h, dtype=complex)
    err = hermiticity_error(h)
    if not err < NON_HERMITIAN_REJECT:
        raise NonHermitianInput(f"generator is not Hermitian (max|h - h^+| = {err:.3e})")
    # symmetrise so eigh sees an exactly Hermitian matrix
    w, v = np.linalg.eigh(0.5 * (h + dagger(h)))
    # unit-norm eigenvectors stop round-off from piling up coherently
    # when the same factor is applied many times
    v = v / np.linalg.norm(v, axis=-2, keepdims=True)
    angle = np.asarray(angle, dtype=float)[..., None]
    phases = np.exp(-1j * angle * w)
    return (v * phases[..., None, :]) @ dagger(v)
