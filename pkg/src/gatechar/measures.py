"""Pure-state two-qubit entanglement measures: concurrence and linear entropy."""

import numpy as np

from .errors import PreconditionError

NORMALIZATION_TOL = 1e-10


def normalized_amplitudes(amplitudes, size, tol=NORMALIZATION_TOL, name="state"):
    """Return the amplitudes as a flat complex array, checking length and norm."""
    vec = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if vec.size != size:
        raise PreconditionError("%s must have %d amplitudes" % (name, size))
    if abs(np.vdot(vec, vec).real - 1.0) > tol:
        raise PreconditionError("%s is not normalized within %g" % (name, tol))
    return vec


def product_state(qubit1, qubit2, tol=NORMALIZATION_TOL):
    """Amplitudes (ae, af, be, bf) of (a|0> + b|1>) (x) (e|0> + f|1>)."""
    q1 = normalized_amplitudes(qubit1, 2, tol, "qubit 1")
    q2 = normalized_amplitudes(qubit2, 2, tol, "qubit 2")
    return np.kron(q1, q2)


def concurrence(state, tol=NORMALIZATION_TOL):
    """C = 2 |alpha*delta - beta*gamma|: 0 on product states, 1 on Bell states."""
    s = normalized_amplitudes(state, 4, tol)
    return float(2.0 * abs(s[0] * s[3] - s[1] * s[2]))


def reduced_density(state, keep=0, tol=NORMALIZATION_TOL):
    """Density matrix of qubit ``keep`` (0 or 1) after tracing out the other."""
    psi = normalized_amplitudes(state, 4, tol).reshape(2, 2)
    if keep == 0:
        return psi @ psi.conj().T
    if keep == 1:
        return psi.T @ psi.conj()
    raise PreconditionError("keep must be 0 or 1")


def linear_entropy(state, keep=0, tol=NORMALIZATION_TOL):
    """1 - tr(rho^2) of the reduced state: 0 on product states, 1/2 maximal.

    For pure two-qubit states the value does not depend on which qubit is
    kept, and equals half the squared concurrence.
    """
    rho = reduced_density(state, keep, tol)
    return float(1.0 - np.trace(rho @ rho).real)
