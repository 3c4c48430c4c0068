"""The swap-power and controlled-unitary gate families.

Constructors, closed-form entangling power and local invariants, closed-form
output concurrences on product inputs, and a multistart search for the
largest output concurrence of an arbitrary gate.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import NumericError, PreconditionError
from .invariants import LocalInvariants
from .linalg import UNITARITY_TOL, require_unitary
from .measures import NORMALIZATION_TOL, concurrence, normalized_amplitudes, product_state
from .sampling import philox_generator


def _require_family_parameter(m):
    if not m >= 1:
        raise PreconditionError("family parameter m must be >= 1")


def swap_power(alpha):
    """Fractional power of SWAP: identity on |00> and |11>, phase-controlled
    mixing of |01> and |10>.  Unitary for every real exponent; alpha = 0 gives
    the identity and alpha = 1 gives SWAP."""
    phase = np.exp(1j * np.pi * alpha)
    p = (1.0 + phase) / 2.0
    q = (1.0 - phase) / 2.0
    return np.array([[1, 0, 0, 0],
                     [0, p, q, 0],
                     [0, q, p, 0],
                     [0, 0, 0, 1]], dtype=complex)


def swap_root(m):
    """swap_power(1/m), the m-th root of SWAP, for m >= 1."""
    _require_family_parameter(m)
    return swap_power(1.0 / m)


def ep_swap_power_closed(alpha):
    """Closed-form entangling power of swap_power(alpha)."""
    return (1.0 - math.cos(2.0 * math.pi * alpha)) / 12.0


@dataclass(frozen=True)
class GateCountResult:
    """Least count n with n * EP(swap_root(m)) >= EP(CNOT); n is None when the
    per-gate entangling power vanishes and no count is feasible."""
    m: float
    n: int | None


def cnot_gate_count(m):
    """Entangling-power budget: least n with n (1 - cos(2 pi / m)) >= 8/3."""
    _require_family_parameter(m)
    per_gate = 1.0 - math.cos(2.0 * math.pi / m)
    if per_gate <= 1e-15:
        return GateCountResult(m=float(m), n=None)
    return GateCountResult(m=float(m), n=int(math.ceil(8.0 / 3.0 / per_gate - 1e-12)))


def swap_root_invariants_closed(m):
    """Closed-form local invariants of swap_root(m)."""
    _require_family_parameter(m)
    w = math.pi / m
    g1 = (9.0 * np.exp(-1j * w) + np.exp(3j * w) + 6.0 * np.exp(1j * w)) / 16.0
    return LocalInvariants(complex(g1), float(3.0 * math.cos(w)))


def cu_gate(alpha, beta, theta, delta):
    """Controlled unitary: identity when the control qubit is |0>, a
    parameterized unitary on the target when it is |1>.  Unitary for all real
    angles."""
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    gate = np.zeros((4, 4), dtype=complex)
    gate[0, 0] = 1.0
    gate[1, 1] = 1.0
    gate[2, 2] = np.exp(1j * (delta + alpha / 2.0 + beta / 2.0)) * c
    gate[2, 3] = np.exp(1j * (delta + alpha / 2.0 - beta / 2.0)) * s
    gate[3, 2] = -np.exp(1j * (delta - alpha / 2.0 + beta / 2.0)) * s
    gate[3, 3] = np.exp(1j * (delta - alpha / 2.0 - beta / 2.0)) * c
    return gate


def ep_cu_closed(alpha, beta, theta):
    """Closed-form entangling power of cu_gate; independent of delta."""
    return 2.0 / 9.0 - math.cos(theta / 2.0) ** 2 * (1.0 + math.cos(alpha + beta)) / 9.0


def cu_invariants_closed(alpha, beta, theta):
    """Closed-form local invariants of cu_gate; independent of delta."""
    g1 = math.cos(theta / 2.0) ** 2 * math.cos((alpha + beta) / 2.0) ** 2
    return LocalInvariants(complex(g1), float(2.0 * g1 + 1.0))


def is_cnot_class(alpha, beta, theta, tol=1e-10):
    """True when the controlled unitary is locally equivalent to CNOT, which
    forces its entangling power to the 2/9 maximum."""
    return bool(math.cos(theta / 2.0) ** 2 * (1.0 + math.cos(alpha + beta)) <= tol)


def swap_root_output_concurrence(m, qubit1, qubit2, tol=NORMALIZATION_TOL):
    """Closed-form concurrence of swap_root(m) applied to a product state."""
    _require_family_parameter(m)
    a, b = normalized_amplitudes(qubit1, 2, tol, "qubit 1")
    e, f = normalized_amplitudes(qubit2, 2, tol, "qubit 2")
    amp = -(1.0 - np.exp(2j * np.pi / m)) * (a * f - b * e) ** 2 / 4.0
    return float(2.0 * abs(amp))


def cu_output_concurrence(alpha, beta, theta, delta, qubit1, qubit2,
                          tol=NORMALIZATION_TOL):
    """Concurrence of cu_gate applied to a product state.

    Closed forms cover the two maximal-entangling regimes (theta = pi mod
    2 pi, and alpha + beta = pi mod 2 pi); all other parameters fall back to
    the direct computation.  Neither regime depends on delta.
    """
    q1 = normalized_amplitudes(qubit1, 2, tol, "qubit 1")
    q2 = normalized_amplitudes(qubit2, 2, tol, "qubit 2")
    a, b = q1
    e, f = q2
    if abs(math.cos(theta / 2.0)) <= 1e-12:
        amp = a * b * (e ** 2 * np.exp(-0.5j * (alpha - beta))
                       + f ** 2 * np.exp(0.5j * (alpha - beta)))
        return float(2.0 * abs(amp))
    if abs(math.cos((alpha + beta) / 2.0)) <= 1e-12:
        amp = (-2j * a * b * e * f * math.cos(theta / 2.0)
               - 1j * a * b * math.sin(theta / 2.0)
               * (e ** 2 * np.exp(-1j * alpha) - f ** 2 * np.exp(1j * alpha)))
        return float(2.0 * abs(amp))
    return concurrence(cu_gate(alpha, beta, theta, delta) @ product_state(q1, q2))


def max_output_concurrence(gate, restarts=16, seed=0, tol=UNITARITY_TOL):
    """Largest concurrence the gate can produce from any product input.

    Multistart simplex maximization over two Bloch angles per qubit (polar
    angle and relative phase; global phases drop out of the concurrence).
    Deterministic for fixed (restarts, seed).
    """
    u = require_unitary(gate, tol, name="gate")
    if restarts < 1:
        raise PreconditionError("restarts must be >= 1")

    def bloch(t, phi):
        return np.array([math.cos(t), math.sin(t) * np.exp(1j * phi)])

    def objective(x):
        state = u @ product_state(bloch(x[0], x[1]), bloch(x[2], x[3]))
        return -concurrence(state)

    rng = philox_generator(seed)
    best = None
    converged = False
    for _ in range(restarts):
        x0 = rng.uniform(0.0, 2.0 * np.pi, 4)
        res = minimize(objective, x0, method="Nelder-Mead",
                       options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 2000})
        res = minimize(objective, res.x, method="Nelder-Mead",
                       options={"xatol": 1e-11, "fatol": 1e-13, "maxiter": 2000})
        converged = converged or bool(res.success)
        value = -float(res.fun)
        if best is None or value > best:
            best = value
    if not converged:
        raise NumericError("no restart converged; best concurrence so far %r" % best)
    return float(best)
