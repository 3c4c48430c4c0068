import numpy as np
import pytest

from conftest import random_local, random_unitary, rng
from gatechar.entangling_power import (EP_MAX, ep_exact, ep_monte_carlo,
                                       ep_single_trace, transposition_kernel)
from gatechar.errors import PreconditionError
from gatechar.families import ep_swap_power_closed, swap_root
from gatechar.gates import CNOT, IDENTITY, SWAP
from gatechar.linalg import transposition_13
from gatechar.sampling import ProductStateSampler, product_amplitudes


def test_ep_exact_reference_values():
    assert ep_exact(CNOT).value == pytest.approx(2.0 / 9.0, abs=1e-12)
    assert ep_exact(swap_root(2)).value == pytest.approx(1.0 / 6.0, abs=1e-12)
    assert ep_exact(IDENTITY).value == pytest.approx(0.0, abs=1e-12)
    # the closed form at exponent 1 vanishes, so SWAP itself entangles nothing
    assert ep_swap_power_closed(1.0) == pytest.approx(0.0, abs=1e-15)
    assert ep_exact(SWAP).value == pytest.approx(0.0, abs=1e-12)


def test_kernel_trace_is_twenty_exactly():
    product = transposition_kernel() @ transposition_13()
    assert int(np.trace(product)) == 20


def test_single_trace_equals_exact():
    assert ep_single_trace(CNOT).value == pytest.approx(2.0 / 9.0, abs=1e-12)
    assert ep_single_trace(IDENTITY).value == pytest.approx(0.0, abs=1e-12)
    g = rng(401)
    for _ in range(100):
        u = random_unitary(g)
        assert abs(ep_single_trace(u).value - ep_exact(u).value) <= 1e-12


def test_ep_envelope_on_random_unitaries():
    g = rng(402)
    for _ in range(300):
        value = ep_exact(random_unitary(g)).value
        assert -1e-10 <= value <= EP_MAX + 1e-10


def test_ep_is_locally_invariant_on_tested_gates():
    g = rng(403)
    for base in (CNOT, swap_root(3), random_unitary(g)):
        reference = ep_exact(base).value
        for _ in range(10):
            dressed = random_local(g) @ base @ random_local(g)
            assert abs(ep_exact(dressed).value - reference) <= 1e-10


def test_ep_is_symmetric_under_swap_composition():
    g = rng(404)
    for _ in range(50):
        u = random_unitary(g)
        assert abs(ep_exact(SWAP @ u).value - ep_exact(u).value) <= 1e-12


def test_monte_carlo_matches_exact_for_cnot():
    result = ep_monte_carlo(CNOT, samples=100000, seed=11)
    assert result.method == "monte_carlo"
    assert result.samples == 100000
    band = max(3.0 * result.std_error, 5e-3)
    assert abs(result.value - 2.0 / 9.0) <= band


def test_monte_carlo_matches_exact_for_half_swap():
    result = ep_monte_carlo(swap_root(2), samples=100000, seed=12)
    band = max(3.0 * result.std_error, 5e-3)
    assert abs(result.value - 1.0 / 6.0) <= band


def test_monte_carlo_identity_is_zero():
    result = ep_monte_carlo(IDENTITY, samples=1000, seed=3)
    assert abs(result.value) <= 1e-13
    assert result.std_error <= 1e-13


def test_monte_carlo_is_deterministic():
    a = ep_monte_carlo(CNOT, samples=2000, seed=9)
    b = ep_monte_carlo(CNOT, samples=2000, seed=9)
    assert a == b


def test_monte_carlo_rejects_tiny_sample_counts():
    with pytest.raises(PreconditionError):
        ep_monte_carlo(CNOT, samples=99, seed=0)


def test_product_sampler_rows_are_normalized():
    sampler = ProductStateSampler(21)
    for _ in range(200):
        q1, q2 = sampler.draw()
        assert abs(np.vdot(q1, q1).real - 1.0) <= 1e-12
        assert abs(np.vdot(q2, q2).real - 1.0) <= 1e-12


def test_product_sampler_is_deterministic():
    first = [ProductStateSampler(5).draw() for _ in range(3)]
    second = [ProductStateSampler(5).draw() for _ in range(3)]
    for (a1, a2), (b1, b2) in zip(first, second):
        assert np.array_equal(a1, b1)
        assert np.array_equal(a2, b2)


def test_sampler_stream_matches_vectorized_block():
    q1, q2 = product_amplitudes(5, seed=42)
    sampler = ProductStateSampler(42)
    for i in range(5):
        d1, d2 = sampler.draw()
        assert np.array_equal(d1, q1[i])
        assert np.array_equal(d2, q2[i])


def test_sampled_population_mean():
    q1, _ = product_amplitudes(100000, seed=8)
    mean = float(np.mean(np.abs(q1[:, 0]) ** 2))
    assert abs(mean - 0.5) <= 0.01
