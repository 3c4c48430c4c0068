import itertools

import numpy as np
import pytest

from conftest import random_unitary, rng
from gatechar.errors import DimensionError, NumericError, PreconditionError
from gatechar.gates import CNOT
from gatechar.invariants import magic_gram
from gatechar.linalg import (PAULIS, SIGMA_X, is_unitary, tensor_product,
                             transposition_13, unitary_eigenphases)


def test_pauli_constants():
    for sigma in PAULIS:
        assert np.allclose(sigma @ sigma, np.eye(2))
        assert abs(np.trace(sigma)) == 0.0
        assert is_unitary(sigma)


def test_tensor_identity():
    assert np.array_equal(tensor_product(np.eye(2), np.eye(2)), np.eye(4))


def test_tensor_mixed_product_property():
    g = rng(101)
    for _ in range(10):
        a1, a2, b1, b2 = (random_unitary(g, 2) for _ in range(4))
        lhs = tensor_product(a1 @ a2, b1 @ b2)
        rhs = tensor_product(a1, b1) @ tensor_product(a2, b2)
        assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_tensor_on_vectors():
    g = rng(102)
    for _ in range(10):
        a = random_unitary(g, 2)
        b = random_unitary(g, 2)
        x = g.standard_normal(2) + 1j * g.standard_normal(2)
        y = g.standard_normal(2) + 1j * g.standard_normal(2)
        lhs = tensor_product(a, b) @ np.kron(x, y)
        rhs = np.kron(a @ x, b @ y)
        assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_tensor_double_bit_flip():
    out = tensor_product(SIGMA_X, SIGMA_X)[:, 0]
    expected = np.zeros(4)
    expected[3] = 1.0
    assert np.array_equal(out, expected)


def test_tensor_rejects_unsupported_dimensions():
    with pytest.raises(DimensionError):
        tensor_product(np.eye(2), np.eye(4))
    with pytest.raises(DimensionError):
        tensor_product(np.eye(3), np.eye(3))


def test_transposition_13_action():
    t = transposition_13()
    # |1000> (index 8) -> |0010> (index 2)
    assert t[2, 8] == 1
    assert t[:, 8].sum() == 1


def test_transposition_13_is_involution_and_symmetric():
    t = transposition_13()
    assert np.array_equal(t @ t, np.eye(16, dtype=int))
    assert np.array_equal(t, t.T)


def test_transposition_13_trace_by_enumeration():
    fixed = sum(1 for a, b, c, d in itertools.product(range(2), repeat=4) if a == c)
    assert fixed == 8
    assert np.trace(transposition_13()) == fixed


def test_eigenphases_identity():
    assert np.allclose(unitary_eigenphases(np.eye(4)), np.zeros(4))


def test_eigenphases_diagonal():
    phases = unitary_eigenphases(np.diag([1j, 1j, -1j, -1j]))
    assert np.allclose(phases, [-np.pi / 2, -np.pi / 2, np.pi / 2, np.pi / 2])


def _char_poly_roots(matrix):
    """Quartic characteristic polynomial by the trace recursion, then roots."""
    a = np.asarray(matrix, dtype=complex)
    coeffs = [1.0 + 0j]
    m = np.eye(4, dtype=complex)
    for k in range(1, 5):
        m = a @ m
        c = -np.trace(m) / k
        coeffs.append(c)
        m = m + c * np.eye(4)
    return np.roots(coeffs)


def test_eigenphases_of_degenerate_cnot_product():
    su = CNOT * np.exp(-0.25j * np.angle(np.linalg.det(CNOT)))
    m = magic_gram(su)
    phases = unitary_eigenphases(m)
    # independent oracle: characteristic polynomial from the trace recursion
    oracle = np.sort(np.angle(_char_poly_roots(m)))
    assert np.max(np.abs(phases - oracle)) <= 1e-9
    assert np.allclose(phases, [-np.pi / 2, -np.pi / 2, np.pi / 2, np.pi / 2],
                       atol=1e-9)


def test_eigenphases_reconstruct_determinant():
    g = rng(103)
    for _ in range(20):
        u = random_unitary(g)
        phases = unitary_eigenphases(u)
        assert abs(np.prod(np.exp(1j * phases)) - np.linalg.det(u)) <= 1e-9


def test_eigenphases_rejects_non_unitary():
    with pytest.raises(PreconditionError):
        unitary_eigenphases(np.diag([2.0, 1.0, 1.0, 1.0]))


def test_numeric_error_is_distinct_from_precondition():
    assert not issubclass(NumericError, PreconditionError)
