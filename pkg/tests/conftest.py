"""Shared helpers for the test suite."""

import numpy as np

from gatechar.sampling import haar_random_unitary, philox_generator
from gatechar.synthesis import local_unitary_pair


def rng(seed):
    return philox_generator(seed)


def random_unitary(generator, dim=4):
    return haar_random_unitary(dim, generator)


def random_state(generator):
    z = generator.standard_normal(8)
    vec = z[:4] + 1j * z[4:]
    return vec / np.linalg.norm(vec)


def random_qubit(generator):
    z = generator.standard_normal(4)
    vec = z[:2] + 1j * z[2:]
    return vec / np.linalg.norm(vec)


def random_local(generator):
    """Random u (x) v local unitary."""
    return local_unitary_pair(generator.uniform(0.0, 2.0 * np.pi, 6))
