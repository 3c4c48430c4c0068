import numpy as np
import pytest

from conftest import random_local, random_unitary, rng
from gatechar.errors import PreconditionError
from gatechar.families import swap_root
from gatechar.gates import CNOT, IDENTITY, SWAP
from gatechar.invariants import (MAGIC_BASIS, LocalInvariants, WeylPoint,
                                 in_weyl_chamber, invariants_from_coordinates,
                                 invariants_match, is_perfect_entangler_coords,
                                 is_perfect_entangler_hull, local_invariants,
                                 magic_gram, weyl_coordinates)
from gatechar.linalg import is_unitary

PI = np.pi


def test_magic_basis_is_unitary():
    assert is_unitary(MAGIC_BASIS, 1e-12)


def test_magic_gram_identity():
    assert np.max(np.abs(magic_gram(IDENTITY) - np.eye(4))) <= 1e-12


def test_magic_gram_is_symmetric():
    g = rng(301)
    for _ in range(100):
        m = magic_gram(random_unitary(g))
        assert np.max(np.abs(m - m.T)) <= 1e-10


def test_invariants_of_named_gates():
    inv = local_invariants(CNOT)
    assert abs(inv.g1) <= 1e-12
    assert inv.g2 == pytest.approx(1.0, abs=1e-12)

    inv = local_invariants(IDENTITY)
    assert inv.g1 == pytest.approx(1.0 + 0.0j, abs=1e-12)
    assert inv.g2 == pytest.approx(3.0, abs=1e-12)

    inv = local_invariants(SWAP)
    assert inv.g1 == pytest.approx(-1.0 + 0.0j, abs=1e-12)
    assert inv.g2 == pytest.approx(-3.0, abs=1e-12)


def test_invariants_of_cube_root_of_swap():
    inv = local_invariants(swap_root(3))
    assert inv.g1.real == pytest.approx(0.4063, abs=5e-5)
    assert abs(inv.g1.imag) == pytest.approx(0.1624, abs=5e-5)
    assert inv.g2 == pytest.approx(1.5, abs=1e-10)


def test_invariants_from_coordinates_reference_points():
    inv = invariants_from_coordinates([0.0, 0.0, 0.0])
    assert inv.g1 == pytest.approx(1.0 + 0.0j, abs=1e-15)
    assert inv.g2 == pytest.approx(3.0, abs=1e-15)

    inv = invariants_from_coordinates([PI / 2, 0.0, 0.0])
    assert abs(inv.g1) <= 1e-15
    assert inv.g2 == pytest.approx(1.0, abs=1e-15)

    inv = invariants_from_coordinates([PI / 4, PI / 4, PI / 4])
    assert abs(abs(inv.g1.imag) - 0.25) <= 1e-15
    assert abs(inv.g1.real) <= 1e-15
    assert abs(inv.g2) <= 1e-15

    # the swap point, cross-checked against the direct computation
    inv = invariants_from_coordinates([PI / 2, PI / 2, PI / 2])
    direct = local_invariants(SWAP)
    assert invariants_match(inv, direct, tol=1e-12)


def test_weyl_coordinates_of_swap_roots():
    for m in range(1, 13):
        point = weyl_coordinates(swap_root(m))
        expected = PI / (2.0 * m)
        assert np.allclose(point, [expected] * 3, atol=1e-9)


def test_weyl_coordinates_of_named_gates():
    assert np.allclose(weyl_coordinates(CNOT), [PI / 2, 0.0, 0.0], atol=1e-9)
    assert np.allclose(weyl_coordinates(SWAP), [PI / 2] * 3, atol=1e-9)
    assert np.allclose(weyl_coordinates(IDENTITY), [0.0] * 3, atol=1e-9)
    assert np.allclose(weyl_coordinates(swap_root(2)), [PI / 4] * 3, atol=1e-9)


def test_weyl_points_stay_in_chamber_and_reproduce_invariants():
    g = rng(302)
    for _ in range(1000):
        u = random_unitary(g)
        point = weyl_coordinates(u)
        assert in_weyl_chamber(point)
        back = invariants_from_coordinates(point)
        assert invariants_match(back, local_invariants(u), tol=1e-8)


def test_invariants_are_locally_invariant():
    g = rng(303)
    for _ in range(30):
        u = random_unitary(g)
        dressed = random_local(g) @ u @ random_local(g)
        a = local_invariants(u)
        b = local_invariants(dressed)
        assert invariants_match(a, b, tol=1e-10)
        # the dressed gate may sit in the conjugate class only through
        # rounding; its g1 must in fact match without conjugation
        assert abs(a.g1 - b.g1) <= 1e-10
        assert np.allclose(weyl_coordinates(u), weyl_coordinates(dressed), atol=1e-8)


def test_invariants_ignore_global_phase():
    g = rng(304)
    for _ in range(20):
        u = random_unitary(g)
        phased = np.exp(1j * g.uniform(0.0, 2.0 * PI)) * u
        a = local_invariants(u)
        b = local_invariants(phased)
        assert abs(a.g1 - b.g1) <= 1e-10
        assert abs(a.g2 - b.g2) <= 1e-10
        assert np.allclose(weyl_coordinates(u), weyl_coordinates(phased), atol=1e-8)


def test_perfect_entangler_hull_named_gates():
    assert is_perfect_entangler_hull(CNOT)
    assert is_perfect_entangler_hull(swap_root(2))
    assert not is_perfect_entangler_hull(SWAP)
    assert not is_perfect_entangler_hull(IDENTITY)


def test_perfect_entangler_coords_named_points():
    assert is_perfect_entangler_coords(WeylPoint(PI / 4, PI / 4, PI / 4))
    assert is_perfect_entangler_coords(WeylPoint(PI / 2, 0.0, 0.0))
    assert not is_perfect_entangler_coords(WeylPoint(PI / 2, PI / 2, PI / 2))
    assert not is_perfect_entangler_coords(WeylPoint(0.0, 0.0, 0.0))


def _pe_boundary_distance(point):
    c1, c2, c3 = point
    return min(abs(c1 + c2 - PI / 2), abs(c2 + c3 - PI / 2))


def test_hull_and_coordinate_criteria_agree():
    g = rng(305)
    excluded = 0
    for _ in range(300):
        u = random_unitary(g)
        point = weyl_coordinates(u)
        if _pe_boundary_distance(point) < 1e-6:
            excluded += 1
            continue
        assert is_perfect_entangler_hull(u) == is_perfect_entangler_coords(point)
    assert excluded <= 3


def test_local_invariants_rejects_non_unitary():
    with pytest.raises(PreconditionError):
        local_invariants(np.diag([1.0, 1.0, 1.0, 2.0]))


def test_invariants_match_accepts_conjugate():
    a = LocalInvariants(0.3 + 0.1j, 1.5)
    b = LocalInvariants(0.3 - 0.1j, 1.5)
    assert invariants_match(a, b, tol=1e-12)
    assert not invariants_match(a, LocalInvariants(0.3 + 0.1j, 1.6), tol=1e-3)
