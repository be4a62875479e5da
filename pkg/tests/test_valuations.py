from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
import sympy

from simplex_forge.complex_core import closure, euler_characteristic
from simplex_forge.generators import cross_polytope, join, named_skeleton, projective_plane
from simplex_forge.valuations import (
    Polynomial,
    alternating_eigenvector_check,
    antiderivative,
    barycentric_operator,
    ds_residual,
    ds_symmetry,
    f_function,
    f_vector,
    h_vector,
    is_dehn_sommerville,
    refine_f_vector,
    stirling2,
)

from corpus import named_complexes

TRIANGLE = closure([(1, 2, 3)])
C4 = named_skeleton("cycle", 4)
STAR5 = named_skeleton("star", 5)


def sympy_h_vector(G):
    """Oracle: expand (x-1)^(dim+1) f_G(1/(x-1)) symbolically."""
    x = sympy.Symbol("x")
    f = 1 + sum(fk * (1 / (x - 1)) ** (k + 1) for k, fk in enumerate(G.f_vector))
    h = sympy.Poly(sympy.expand(sympy.cancel((x - 1) ** (G.dim + 1) * f)), x)
    coeffs = h.all_coeffs()[::-1]
    return tuple(int(c) for c in coeffs) + (0,) * (G.dim + 2 - len(coeffs))


def refined_f_vector_oracle(G):
    """Oracle: cliques of the containment graph counted with networkx."""
    g = nx.Graph()
    g.add_nodes_from(G)
    g.add_edges_from((x, y) for x in G for y in G if len(x) < len(y) and set(x) <= set(y))
    counts = {}
    for c in nx.enumerate_all_cliques(g):
        counts[len(c)] = counts.get(len(c), 0) + 1
    return tuple(counts[k] for k in sorted(counts))


def test_f_vector_examples():
    assert f_vector(TRIANGLE) == (3, 3, 1)
    assert f_vector(cross_polytope(4)) == (10, 40, 80, 80, 32)
    assert f_vector(projective_plane()) == (15, 42, 28)
    assert f_vector(closure([])) == ()


def test_f_function_examples():
    t = Polynomial.t()
    assert f_function(closure([])) == Polynomial((1,))
    assert f_function(C4) == 1 + 4 * t + 4 * t * t
    assert f_function(cross_polytope(2)) == (1 + 2 * t) ** 3


def test_antiderivative_examples():
    t = Polynomial.t()
    assert antiderivative(Polynomial((1,))) == t
    assert antiderivative(1 + 2 * t) == t + t * t
    assert antiderivative(f_function(C4)).coeffs == (0, 1, 2, Fraction(4, 3))


def test_polynomial_arithmetic():
    p = Polynomial((1, 2, 3))
    assert p(2) == 17
    assert p(Polynomial((0, 1))) == p
    assert (p - p).degree == -1
    assert Polynomial((1, 0, 0)) == Polynomial((1,)) == 1


@pytest.mark.parametrize("name, G", list(named_complexes().items()))
def test_f_function_at_minus_one(name, G):
    assert f_function(G)(-1) == 1 - euler_characteristic(G)


def test_h_vector_examples():
    assert h_vector(C4) == (1, 2, 1)
    assert h_vector(cross_polytope(3)) == (1, 4, 6, 4, 1)
    assert h_vector(STAR5) == (0, 3, 1)
    with pytest.raises(ValueError):
        h_vector(closure([]))


@pytest.mark.parametrize("name", ["C4", "triangle", "projective_plane", "sphere3", "mixed", "star5", "octahedron"])
def test_h_vector_against_sympy(name):
    G = named_complexes()[name]
    assert h_vector(G) == sympy_h_vector(G)


def test_dehn_sommerville_verdicts():
    s3 = cross_polytope(3)
    assert is_dehn_sommerville(s3)
    assert is_dehn_sommerville(join(s3, C4))
    assert not is_dehn_sommerville(STAR5)
    with pytest.raises(ValueError):
        is_dehn_sommerville(closure([]))


@pytest.mark.parametrize("name, G", [(k, v) for k, v in named_complexes().items() if len(v)])
def test_palindromic_h_equals_polynomial_symmetry(name, G):
    assert is_dehn_sommerville(G) == ds_symmetry(G)


def test_joins_of_spheres_stay_dehn_sommerville():
    spheres = [cross_polytope(d) for d in range(4)] + [C4, named_skeleton("cycle", 5)]
    for A in spheres:
        for B in spheres:
            J = join(A, B)
            assert is_dehn_sommerville(J)
            if J.dim % 2 == 1:
                assert euler_characteristic(J) == 0


def test_ds_residual():
    assert ds_residual(cross_polytope(4), (0, -22, 33, -40, 45)) == 0
    assert ds_residual(TRIANGLE, (0, 0, 0)) == 0
    assert ds_residual(TRIANGLE, (1, 0, 0)) == 3
    assert ds_residual(TRIANGLE, (1,)) == 3


def test_stirling_numbers():
    for n in range(8):
        for k in range(8):
            assert stirling2(n, k) == sympy.functions.combinatorial.numbers.stirling(n, k, kind=2)


def test_barycentric_operator_examples():
    assert barycentric_operator(0).tolist() == [[1]]
    Q1 = barycentric_operator(1)
    assert Q1.tolist() == [[1, 1], [0, 2]]
    assert refine_f_vector((4, 4)) == (8, 8)
    assert refine_f_vector((3, 3, 1)) == (7, 12, 6)
    with pytest.raises(ValueError):
        barycentric_operator(-1)


@pytest.mark.parametrize("name", ["triangle", "C4", "tetrahedron", "octahedron", "bowtie", "mixed", "sphere3"])
def test_barycentric_operator_matches_explicit_refinement(name):
    G = named_complexes()[name]
    assert refine_f_vector(G.f_vector) == refined_f_vector_oracle(G)


@pytest.mark.parametrize("d", [0, 1, 2, 3, 4, 7])
def test_alternating_eigenvector(d):
    assert alternating_eigenvector_check(d)
    Q = barycentric_operator(d)
    # eigenvalue 1 occurs once: Q is upper triangular with diagonal (k+1)!
    assert [Q[k, k] for k in range(d + 1)].count(1) == 1
    assert np.all(np.tril(Q.astype(np.int64), -1) == 0)
