import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplex_forge.complex_core import TooLargeError, closure, euler_characteristic, star, unit_sphere, weight
from simplex_forge.energy import (
    connection_laplacian,
    energy_sum,
    green_matrix,
    potential,
    sphere_matrix,
    sphere_sum,
    super_trace,
    verify_energy_and_sphere,
)
from simplex_forge.generators import cross_polytope, named_skeleton, random_whitney
from simplex_forge.linalg import determinant, is_identity, matmul, nullity

C4 = named_skeleton("cycle", 4)


def brute_green(G):
    """Oracle: entries from explicit set intersections of stars."""
    E = list(G)
    return np.array([[weight(x) * weight(y) * euler_characteristic(star(G, x) & star(G, y)) for y in E] for x in E])


def brute_sphere(G):
    E = list(G)
    return np.array([[weight(x) * weight(y) * euler_characteristic(unit_sphere(G, x) & unit_sphere(G, y))
                      for y in E] for x in E])


def test_connection_laplacian_on_edge():
    G = closure([(1, 2)])
    assert connection_laplacian(G).tolist() == [[1, 0, 1], [0, 1, 1], [1, 1, 1]]
    # U(1) = {1, 12}, U(2) = {2, 12}, U(12) = {12}
    assert green_matrix(G).tolist() == [[0, -1, 1], [-1, 0, 1], [1, 1, -1]]
    L, g = connection_laplacian(G), green_matrix(G)
    assert is_identity(matmul(L, g))


def test_matrices_match_brute_force():
    for G in [C4, closure([(1, 2, 3), (3, 4)]), cross_polytope(2)]:
        assert np.array_equal(green_matrix(G), brute_green(G))
        assert np.array_equal(sphere_matrix(G), brute_sphere(G))
        L = connection_laplacian(G)
        E = list(G)
        assert all(L[i, j] == (1 if set(x) & set(y) else 0) for i, x in enumerate(E) for j, y in enumerate(E))


def test_examples():
    assert determinant(green_matrix(C4)) == 1
    assert nullity(sphere_matrix(C4)) == 4
    octa = cross_polytope(2)
    assert determinant(green_matrix(octa)) == 1
    assert nullity(sphere_matrix(octa)) == 17


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10), st.floats(0.1, 1.0), st.integers(0, 2**32))
def test_inverse_and_potential(n, p, seed):
    G = random_whitney(n, round(p * n * (n - 1) / 2), seed)
    L, g = connection_laplacian(G), green_matrix(G)
    assert is_identity(matmul(L, g))
    assert determinant(g) in (-1, 1)
    assert determinant(L) == determinant(g)
    row_sums = g.sum(axis=1)
    assert all(row_sums[i] == potential(G, x) for i, x in enumerate(G))
    assert int(row_sums.sum()) == energy_sum(G) == euler_characteristic(G)
    assert sphere_sum(G) == 0
    assert super_trace(G, sphere_matrix(G)) == 0


def test_size_ceiling():
    G = cross_polytope(3)
    with pytest.raises(TooLargeError) as exc:
        green_matrix(G, max_elements=10)
    assert exc.value.size == len(G) and exc.value.limit == 10
    assert green_matrix(G, max_elements=None).shape == (len(G), len(G))


def test_verify_report():
    rep = verify_energy_and_sphere(cross_polytope(3))
    assert rep.energy_ok and rep.sphere_ok and rep.unimodular and rep.inverse_ok
    assert rep.sphere_super_trace == 0 and rep.nullity_s == 49
    skipped = verify_energy_and_sphere(cross_polytope(3), max_elements=10)
    assert skipped.skipped and skipped.det_g is None and skipped.unimodular is None
    assert skipped.energy_ok
    with pytest.raises(ValueError):
        verify_energy_and_sphere(closure([]))


def test_super_trace_shape_check():
    with pytest.raises(ValueError):
        super_trace(C4, np.eye(3))
