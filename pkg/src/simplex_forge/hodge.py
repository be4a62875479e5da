"""Exterior derivative, Hodge Laplacian, Betti numbers, Euler-Poincare and McKean-Singer.

Orientation: every simplex carries the ascending-vertex orientation, so
sign(x|y) = (-1)^i when y is x with its i-th smallest vertex removed.
"""
from __future__ import annotations

import numpy as np

from . import linalg
from .complex_core import SimplicialComplex, euler_characteristic, weight


def chain_basis(G: SimplicialComplex) -> list[list[int]]:
    """Canonical indices of the k-dimensional elements, for each k."""
    if not len(G):
        return []
    basis: list[list[int]] = [[] for _ in range(G.dim + 1)]
    for i, x in enumerate(G):
        basis[len(x) - 1].append(i)
    return basis


def exterior_derivative(G: SimplicialComplex) -> np.ndarray:
    """n x n matrix with d[x, y] = sign(x|y) for codimension-one faces y of x."""
    n = len(G)
    d = np.zeros((n, n), dtype=np.int64)
    for i, x in enumerate(G):
        if len(x) == 1:
            continue
        for k in range(len(x)):
            d[i, G.index[x[:k] + x[k + 1:]]] = -1 if k % 2 else 1
    return d


def derivative_blocks(G: SimplicialComplex) -> list[np.ndarray]:
    """d_k: k-forms -> (k+1)-forms, shape (f_{k+1}, f_k), for k = 0..dim-1."""
    d = exterior_derivative(G)
    basis = chain_basis(G)
    return [d[np.ix_(basis[k + 1], basis[k])] for k in range(len(basis) - 1)]


def hodge_laplacian(G: SimplicialComplex) -> np.ndarray:
    """(d + d^T)^2 = d d^T + d^T d."""
    d = exterior_derivative(G)
    D = d + d.T
    return linalg.matmul(D, D)


def laplacian_blocks(G: SimplicialComplex) -> list[np.ndarray]:
    L = hodge_laplacian(G)
    return [L[np.ix_(b, b)] for b in chain_basis(G)]


def betti(G: SimplicialComplex) -> tuple[int, ...]:
    """b_k = f_k - rank d_k - rank d_{k-1}, exact over the rationals."""
    if not len(G):
        return ()
    f = G.f_vector
    ranks = [linalg.rank(b) for b in derivative_blocks(G)] + [0]
    return tuple(f[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(len(f)))


def betti_from_laplacian(G: SimplicialComplex) -> tuple[int, ...]:
    """Nullities of the Hodge blocks L_k."""
    return tuple(linalg.nullity(b) for b in laplacian_blocks(G))


def euler_poincare_check(G: SimplicialComplex) -> bool:
    return sum((-1) ** k * b for k, b in enumerate(betti(G))) == euler_characteristic(G)


def power_super_traces(G: SimplicialComplex, m_max: int) -> list[int]:
    """str(L^m) for m = 0..m_max, computed block by block."""
    traces = [0] * (m_max + 1)
    for k, block in enumerate(laplacian_blocks(G)):
        sign = (-1) ** k
        P = np.eye(block.shape[0], dtype=np.int64)
        for m in range(m_max + 1):
            traces[m] += sign * int(np.trace(P))
            if m < m_max:
                P = linalg.matmul(P, block)
    return traces


def mckean_singer_check(G: SimplicialComplex, m_max: int = 5) -> bool:
    """str(L^m) = 0 for 1 <= m <= m_max (and str(L^0) = chi)."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    traces = power_super_traces(G, m_max)
    return traces[0] == euler_characteristic(G) and all(t == 0 for t in traces[1:])


def super_trace(G: SimplicialComplex, M) -> int:
    A = np.asarray(M)
    return sum(weight(x) * int(A[i, i]) for i, x in enumerate(G))
