"""Fixed-size complex linear algebra for two-qubit gate characterization.

All routines operate on dense numpy arrays of dimension 2, 4, or 16 in the
computational basis.  Four-qubit basis states are indexed project-wide as
``idx = 8a + 4b + 2c + d`` with qubit 1 the most significant bit; the
permutation that exchanges qubits 1 and 3 of such a register, needed by the
entangling-power trace formulas, is built here once as an exact 0/1 matrix.
"""

import numpy as np

from .errors import DimensionError, NumericError, PreconditionError

#: max-norm tolerance for accepting a matrix as unitary
UNITARITY_TOL = 1e-10
#: tolerance for algebraic identities checked in double precision
ALGEBRAIC_TOL = 1e-12
#: tolerance on |eigenvalue| - 1 during eigenphase extraction
EIGENPHASE_TOL = 1e-9

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def is_unitary(matrix, tol=UNITARITY_TOL):
    """True if matrix†·matrix equals the identity within ``tol`` (max norm)."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    eye = np.eye(matrix.shape[0])
    return bool(np.max(np.abs(matrix.conj().T @ matrix - eye)) <= tol)


def require_unitary(matrix, tol=UNITARITY_TOL, name="matrix"):
    """Return ``matrix`` as a complex array, raising if it is not unitary."""
    matrix = np.asarray(matrix, dtype=complex)
    if not is_unitary(matrix, tol):
        raise PreconditionError("%s is not unitary within %g" % (name, tol))
    return matrix


def tensor_product(a, b):
    """Kronecker product, the left factor acting on the more-significant qubits.

    Only the sizes the gate formulas need are supported: 2x2 pairs (giving
    4x4) and 4x4 pairs (giving 16x16).  With this convention
    ``(A1 @ A2) (x) (B1 @ B2) == (A1 (x) B1) @ (A2 (x) B2)``.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape or a.shape not in ((2, 2), (4, 4)):
        raise DimensionError(
            "unsupported dimension pair %r x %r; need two 2x2 or two 4x4 factors"
            % (a.shape, b.shape))
    return np.kron(a, b)


def _build_transposition_13():
    t = np.zeros((16, 16), dtype=int)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    src = 8 * a + 4 * b + 2 * c + d
                    dst = 8 * c + 4 * b + 2 * a + d
                    t[dst, src] = 1
    return t


_T13 = _build_transposition_13()


def transposition_13():
    """Permutation sending |a b c d> to |c b a d> on a four-qubit register.

    Returned as an exact integer 0/1 matrix; it is both its own inverse and
    its own transpose.
    """
    return _T13.copy()


def unitary_eigenphases(matrix, tol=UNITARITY_TOL):
    """Eigenvalue phases of a unitary matrix, sorted ascending, each in (-pi, pi].

    Robust to repeated eigenvalues.  Raises :class:`NumericError` if the QR
    iteration fails or any eigenvalue modulus strays from 1 by more than
    ``EIGENPHASE_TOL``.
    """
    matrix = require_unitary(matrix, tol)
    try:
        values = np.linalg.eigvals(matrix)
    except np.linalg.LinAlgError as exc:
        raise NumericError("eigenvalue iteration did not converge: %s" % exc) from exc
    if np.max(np.abs(np.abs(values) - 1.0)) > EIGENPHASE_TOL:
        raise NumericError("eigenvalues of a unitary must lie on the unit circle")
    phases = np.angle(values)
    phases = np.where(phases <= -np.pi, np.pi, phases)
    return np.sort(phases)
