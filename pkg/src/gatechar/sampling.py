"""Seeded sampling of Haar-random product states and unitaries.

All streams run on numpy's counter-based Philox generator, so a (seed, index)
pair pins down every draw independent of batching: row ``i`` of
``product_amplitudes(n, seed)`` equals the ``i``-th draw of
``ProductStateSampler(seed)``.
"""

import numpy as np


def philox_generator(seed):
    """A numpy Generator running on the counter-based Philox stream for ``seed``."""
    return np.random.Generator(np.random.Philox(key=int(seed)))


def product_amplitudes(n, seed):
    """``n`` Haar product-state samples as two (n, 2) arrays with unit rows.

    Each sample consumes eight standard normals from the stream: both qubit
    amplitude pairs are independent standard complex Gaussians, normalized
    per qubit.
    """
    block = philox_generator(seed).standard_normal((int(n), 8))
    z = block[:, 0::2] + 1j * block[:, 1::2]
    q1 = z[:, :2]
    q2 = z[:, 2:]
    q1 = q1 / np.linalg.norm(q1, axis=1, keepdims=True)
    q2 = q2 / np.linalg.norm(q2, axis=1, keepdims=True)
    return q1, q2


class ProductStateSampler:
    """Deterministic stream of Haar-random single-qubit state pairs."""

    def __init__(self, seed):
        self.seed = int(seed)
        self._rng = philox_generator(seed)

    def draw(self):
        """Next pair (q1, q2) of normalized two-amplitude arrays."""
        r = self._rng.standard_normal(8)
        z = r[0::2] + 1j * r[1::2]
        q1 = z[:2]
        q2 = z[2:]
        return q1 / np.linalg.norm(q1), q2 / np.linalg.norm(q2)


def haar_random_unitary(dim, rng):
    """Haar-distributed unitary of size ``dim``.

    Complex Ginibre draw with orthonormalized columns, phases fixed so the
    triangular factor of the decomposition has a positive diagonal.  ``rng``
    may be a numpy Generator or an integer seed.
    """
    if isinstance(rng, (int, np.integer)):
        rng = philox_generator(rng)
    z = (rng.standard_normal((dim, dim))
         + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
