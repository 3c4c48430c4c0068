"""Entangling power of a two-qubit gate by three routes: the exact
Hilbert-Schmidt trace formula, an equivalent single-trace kernel form, and a
seeded Monte-Carlo average over Haar-random product inputs.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NumericError, PreconditionError
from .gates import SWAP
from .linalg import UNITARITY_TOL, require_unitary, tensor_product, transposition_13
from .sampling import product_amplitudes

#: largest entangling power any two-qubit gate can reach
EP_MAX = 2.0 / 9.0
_ENVELOPE_SLACK = 1e-10

_T13 = transposition_13()
_SWAP_INT = np.array([[1, 0, 0, 0],
                      [0, 0, 1, 0],
                      [0, 1, 0, 0],
                      [0, 0, 0, 1]], dtype=int)
_PAIR_SWAP = np.kron(_SWAP_INT, _SWAP_INT)
# Combined kernel T + S T S, kept in exact integer arithmetic.
_KERNEL = _T13 + _PAIR_SWAP @ _T13 @ _PAIR_SWAP


def transposition_kernel():
    """Integer kernel combining the two partial-transposition sandwiches."""
    return _KERNEL.copy()


@dataclass(frozen=True)
class EPResult:
    """Entangling power value together with the method that produced it."""
    value: float
    method: str
    samples: int | None = None
    std_error: float | None = None
    seed: int | None = None


def _check_envelope(value):
    if not (-_ENVELOPE_SLACK <= value <= EP_MAX + _ENVELOPE_SLACK):
        raise NumericError("entangling power %r escaped the [0, 2/9] envelope" % value)


def ep_exact(gate, tol=UNITARITY_TOL):
    """Exact entangling power via the two-term trace formula.

    EP(U) = 5/9 - ( <A, TAT> + <B, TBT> ) / 36 with A = U (x) U,
    B = (SWAP U) (x) (SWAP U), T the outer-qubit transposition, and
    <X, Y> = tr(X† Y).
    """
    u = require_unitary(gate, tol, name="gate")
    a = tensor_product(u, u)
    b = tensor_product(SWAP @ u, SWAP @ u)
    term_a = np.trace(a.conj().T @ _T13 @ a @ _T13).real
    term_b = np.trace(b.conj().T @ _T13 @ b @ _T13).real
    value = 5.0 / 9.0 - (term_a + term_b) / 36.0
    _check_envelope(value)
    return EPResult(value=float(value), method="exact")


def ep_single_trace(gate, tol=UNITARITY_TOL):
    """Entangling power via the rearranged single trace over the combined
    transposition kernel; algebraically identical to :func:`ep_exact` for
    every unitary."""
    u = require_unitary(gate, tol, name="gate")
    a = tensor_product(u, u)
    value = 5.0 / 9.0 - np.trace(a.conj().T @ _KERNEL @ a @ _T13).real / 36.0
    _check_envelope(value)
    return EPResult(value=float(value), method="single_trace")


def ep_monte_carlo(gate, samples, seed, tol=UNITARITY_TOL):
    """Monte-Carlo estimate of the defining average.

    Mean output linear entropy over ``samples`` Haar product inputs, with the
    standard error of the mean.  Deterministic for fixed (samples, seed):
    sample ``i`` is derived from draws 8i..8i+7 of the Philox stream keyed by
    ``seed``, so the result does not depend on how evaluation is batched.
    """
    samples = int(samples)
    if samples < 100:
        raise PreconditionError("need at least 100 samples")
    u = require_unitary(gate, tol, name="gate")
    q1, q2 = product_amplitudes(samples, seed)
    states = np.einsum("ni,nj->nij", q1, q2).reshape(samples, 4)
    out = (states @ u.T).reshape(samples, 2, 2)
    rho = np.einsum("nij,nkj->nik", out, out.conj())
    purity = np.einsum("nik,nki->n", rho, rho).real
    entropy = 1.0 - purity
    value = float(entropy.mean())
    std_error = float(entropy.std(ddof=1) / np.sqrt(samples))
    _check_envelope(value)
    return EPResult(value=value, method="monte_carlo", samples=samples,
                    std_error=std_error, seed=int(seed))
