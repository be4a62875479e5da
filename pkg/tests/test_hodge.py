import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from simplex_forge.complex_core import closure, euler_characteristic
from simplex_forge.generators import cross_polytope, named_skeleton, projective_plane, random_whitney
from simplex_forge.hodge import (
    betti,
    betti_from_laplacian,
    derivative_blocks,
    euler_poincare_check,
    exterior_derivative,
    hodge_laplacian,
    laplacian_blocks,
    mckean_singer_check,
    power_super_traces,
)
from simplex_forge.linalg import matmul, rank

from corpus import named_complexes


def test_betti_examples():
    assert betti(named_skeleton("cycle", 4)) == (1, 1)
    assert betti(cross_polytope(2)) == (1, 0, 1)
    assert betti(projective_plane()) == (1, 0, 0)
    assert betti(cross_polytope(3)) == (1, 0, 0, 1)
    assert betti(named_skeleton("cube")) == (1, 5)
    assert betti(closure([(1,), (2,), (3,)])) == (3,)


def test_exterior_derivative_on_triangle():
    G = closure([(1, 2, 3)])
    d = exterior_derivative(G)
    # d maps the 1-form dual to each edge into the triangle: (2,3) - (1,3) + (1,2)
    col = d[G.index[(1, 2, 3)]]
    assert col[G.index[(2, 3)]] == 1 and col[G.index[(1, 3)]] == -1 and col[G.index[(1, 2)]] == 1


@pytest.mark.parametrize("name", ["triangle", "C4", "octahedron", "sphere3", "projective_plane", "mixed", "bowtie"])
def test_d_squared_and_laplacian_structure(name):
    G = named_complexes()[name]
    d = exterior_derivative(G)
    assert not np.any(matmul(d, d))
    H = hodge_laplacian(G)
    assert np.array_equal(H, H.T)
    blocks = laplacian_blocks(G)
    sizes = list(G.f_vector)
    assert [b.shape[0] for b in blocks] == sizes
    off = 0
    for b in blocks:
        n = b.shape[0]
        assert np.array_equal(H[off:off + n, off:off + n], b)
        assert not np.any(H[off:off + n, off + n:])
        off += n


@pytest.mark.parametrize("name", ["C4", "octahedron", "projective_plane", "mixed", "triangle_refined"])
def test_betti_against_sympy_nullity(name):
    G = named_complexes()[name]
    expected = tuple(len(sympy.Matrix(b.tolist()).nullspace()) for b in laplacian_blocks(G))
    assert betti(G) == expected == betti_from_laplacian(G)


def betti_from_blocks(sizes, blocks):
    ranks = [0] + [rank(D) for D in blocks] + [0]
    return tuple(sizes[k] - ranks[k] - ranks[k + 1] for k in range(len(sizes)))


def test_orientation_flip_preserves_betti():
    G = projective_plane()
    blocks = [D.copy() for D in derivative_blocks(G)]
    rng = np.random.default_rng(2)
    for k in range(len(G.f_vector)):
        for i in rng.choice(G.f_vector[k], size=5, replace=False):
            # reversing a k-simplex negates its column in d_k and its row in d_{k-1}
            if k < len(blocks):
                blocks[k][:, i] *= -1
            if k > 0:
                blocks[k - 1][i, :] *= -1
    assert all(not np.any(matmul(b, a)) for a, b in zip(blocks, blocks[1:]))
    assert betti_from_blocks(G.f_vector, blocks) == betti(G) == (1, 0, 0)


@pytest.mark.parametrize("name, G", [(k, v) for k, v in named_complexes().items() if 0 < len(v) <= 400])
def test_euler_poincare_and_mckean_singer(name, G):
    assert euler_poincare_check(G)
    assert mckean_singer_check(G, 5)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 10), st.floats(0.2, 1.0), st.integers(0, 2**32))
def test_random_hodge(n, p, seed):
    G = random_whitney(n, round(p * n * (n - 1) / 2), seed)
    tr = power_super_traces(G, 5)
    assert tr[0] == euler_characteristic(G)
    assert tr[1:] == [0] * 5
    assert euler_poincare_check(G)


def test_mckean_singer_argument_check():
    with pytest.raises(ValueError):
        mckean_singer_check(named_skeleton("cycle", 4), 0)
