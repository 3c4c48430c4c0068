"""Magic-basis transform, local invariants, Weyl-chamber coordinates, and the
two perfect-entangler criteria for two-qubit gates.

Conventions
-----------
Local invariants are computed from the gate in the magic (Bell) basis as
``g1 = tr^2(M) / (16 det U)`` and ``g2 = (tr^2(M) - tr(M^2)) / (4 det U)``
with ``M`` the symmetric product of the transformed gate with itself; two
gates are locally equivalent exactly when their invariants coincide.

Weyl coordinates are canonicalized into the tetrahedron

    c1 >= c2 >= c3 >= 0,   c1 + c2 <= pi   (and c1 <= pi/2 when c3 = 0),

additionally identifying every gate with its complex-conjugate class, so the
reported coordinates always lie in [0, pi/2].  Because of that identification
the first invariant reconstructed from the coordinates may be the complex
conjugate of the one computed from the gate; comparisons in this package
therefore accept either sign of Im(g1).
"""

from itertools import permutations
from typing import NamedTuple

import numpy as np

from .errors import NumericError, PreconditionError
from .linalg import UNITARITY_TOL, require_unitary, unitary_eigenphases

#: tolerance on the residual imaginary part of g2
G2_IMAG_TOL = 1e-9
#: tolerance for reproducing (g1, g2) from canonical coordinates
ROUNDTRIP_TOL = 1e-8
#: default boundary tolerance for the perfect-entangler tests
PE_BOUNDARY_TOL = 1e-9

MAGIC_BASIS = np.array([[1, 0, 0, 1j],
                        [0, 1j, 1, 0],
                        [0, 1j, -1, 0],
                        [1, 0, 0, -1j]], dtype=complex) / np.sqrt(2.0)


class LocalInvariants(NamedTuple):
    """The local invariant pair (g1 complex, g2 real) of a two-qubit gate."""
    g1: complex
    g2: float


class WeylPoint(NamedTuple):
    """Canonical Weyl-chamber coordinates, in radians."""
    c1: float
    c2: float
    c3: float


def to_magic_basis(gate):
    """The gate rewritten in the magic (Bell) basis."""
    gate = np.asarray(gate, dtype=complex)
    return MAGIC_BASIS.conj().T @ gate @ MAGIC_BASIS


def magic_gram(gate, tol=UNITARITY_TOL):
    """Symmetric unitary M = (U_B)^T U_B, with U_B the gate in the magic basis.

    After removing the determinant phase, the spectrum of M carries the entire
    nonlocal content of the gate.
    """
    u = require_unitary(gate, tol, name="gate")
    ub = to_magic_basis(u)
    return ub.T @ ub


def local_invariants(gate, tol=UNITARITY_TOL):
    """Local invariants (g1, g2) of a two-qubit unitary.

    The gate need not be special-unitary: the determinant division removes any
    global phase.  The residual imaginary part of g2 is checked against
    ``G2_IMAG_TOL`` before it is discarded.
    """
    u = require_unitary(gate, tol, name="gate")
    ub = to_magic_basis(u)
    det = np.linalg.det(ub)
    if abs(abs(det) - 1.0) > 1e-9:
        raise PreconditionError("gate determinant modulus deviates from 1 by more than 1e-9")
    m = ub.T @ ub
    tr = np.trace(m)
    g1 = tr * tr / (16.0 * det)
    g2 = (tr * tr - np.trace(m @ m)) / (4.0 * det)
    if abs(g2.imag) > G2_IMAG_TOL:
        raise NumericError("g2 has a non-negligible imaginary part %g" % g2.imag)
    return LocalInvariants(complex(g1), float(g2.real))


def invariants_from_coordinates(point):
    """Evaluate (g1, g2) at a coordinate triple; any real values are accepted."""
    c = np.asarray(tuple(point), dtype=float)
    cos2 = float(np.prod(np.cos(c) ** 2))
    sin2 = float(np.prod(np.sin(c) ** 2))
    g1 = cos2 - sin2 + 0.25j * float(np.prod(np.sin(2.0 * c)))
    g2 = 4.0 * cos2 - 4.0 * sin2 - float(np.prod(np.cos(2.0 * c)))
    return LocalInvariants(complex(g1), float(g2))


def in_weyl_chamber(point, tol=1e-9):
    """Membership test for the canonical tetrahedron, with ``tol`` slack."""
    c1, c2, c3 = (float(x) for x in point)
    ordered = (c1 + tol >= c2) and (c2 + tol >= c3) and (c3 >= -tol)
    inside = c1 + c2 <= np.pi + tol
    face = (c3 > tol) or (c1 <= np.pi / 2.0 + tol)
    return bool(ordered and inside and face)


def invariants_match(found, target, tol=ROUNDTRIP_TOL):
    """Agreement of two invariant pairs, allowing conjugation of g1."""
    dg1 = min(abs(found.g1 - target.g1), abs(found.g1.conjugate() - target.g1))
    return bool(dg1 <= tol and abs(found.g2 - target.g2) <= tol)


def _coordinates_from_phases(phases):
    """Solve the eigenphase relations for a coordinate triple and fold it.

    The eigenphases of the normalized magic-basis product are, in some order,
    {c1-c2+c3, c1+c2-c3, -c1+c2+c3, -c1-c2-c3} mod 2pi; any three of them
    determine a solution.  The fold reduces each coordinate mod pi, reflects
    it into [0, pi/2], and sorts in decreasing order.  All of these are
    symmetry moves of the coordinate torus (pi shifts, pairwise sign flips,
    permutations, conjugation), so the result is the lexicographically
    smallest chamber image of the solution orbit.
    """
    p = np.sort(phases)[::-1]
    raw = np.array([(p[0] + p[1]) / 2.0,
                    (p[1] + p[2]) / 2.0,
                    (p[0] + p[2]) / 2.0])
    c = np.mod(raw, np.pi)
    c = np.minimum(c, np.pi - c)
    return np.sort(c)[::-1]


def _normalized_gram_phases(gate, tol):
    """Eigenphases of the magic-basis product of the determinant-normalized gate."""
    su = gate * np.exp(-0.25j * np.angle(np.linalg.det(gate)))
    return unitary_eigenphases(magic_gram(su, tol), tol)


def weyl_coordinates(gate, tol=UNITARITY_TOL):
    """Canonical Weyl coordinates [c1, c2, c3] of the gate.

    Extracted from the eigenphases of the magic-basis symmetric product of the
    determinant-normalized gate, then folded into the canonical chamber.  The
    result is validated by chamber membership and by reproducing the gate
    invariants (up to conjugation of g1); failure raises
    :class:`NumericError` carrying the raw eigenphases.
    """
    u = require_unitary(gate, tol, name="gate")
    target = local_invariants(u, tol)
    phases = _normalized_gram_phases(u, tol)
    # The two determinant square-root branches shift every phase by pi; the
    # fold absorbs the shift, but try both in case of boundary rounding.
    for shift in (0.0, np.pi):
        c = _coordinates_from_phases(phases + shift)
        point = WeylPoint(float(c[0]), float(c[1]), float(c[2]))
        if in_weyl_chamber(point) and invariants_match(
                invariants_from_coordinates(point), target):
            return point
    raise NumericError(
        "Weyl canonicalization failed; raw eigenphases %r" % (phases.tolist(),))


def is_perfect_entangler_hull(gate, tol=PE_BOUNDARY_TOL, unitarity_tol=UNITARITY_TOL):
    """Hull criterion: a gate entangles perfectly exactly when the origin lies
    in the closed convex hull of the eigenvalues of its normalized magic-basis
    product.

    For points on the unit circle the closed hull contains the origin exactly
    when no open half-circle holds all of them, i.e. when the largest circular
    gap between consecutive eigenphases is at most pi (within ``tol``).
    """
    u = require_unitary(gate, unitarity_tol, name="gate")
    p = _normalized_gram_phases(u, unitarity_tol)
    gaps = np.diff(np.append(p, p[0] + 2.0 * np.pi))
    return bool(np.max(gaps) <= np.pi + tol)


def is_perfect_entangler_coords(point, tol=PE_BOUNDARY_TOL):
    """Coordinate criterion on a canonicalized Weyl point.

    True when, for some permutation (i, j, k) of the coordinates, the chain
    pi/2 <= ci + ck <= ci + cj + pi/2 <= pi holds, or the same chain shifted
    up by pi.  Inequalities are non-strict within ``tol`` so boundary gates
    count as perfect entanglers.
    """
    c = tuple(float(x) for x in point)
    half = np.pi / 2.0
    for i, j, k in permutations((0, 1, 2)):
        s_ik = c[i] + c[k]
        upper = c[i] + c[j] + half
        if half - tol <= s_ik <= upper + tol and upper <= np.pi + tol:
            return True
        if 3.0 * half - tol <= s_ik <= upper + tol and upper <= 2.0 * np.pi + tol:
            return True
    return False
