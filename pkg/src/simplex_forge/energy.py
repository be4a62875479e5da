"""Connection Laplacian, Green matrix, sphere Green matrix and the energy / sphere formulas.

All matrices are indexed by the canonical element order of the complex.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import linalg
from .complex_core import SimplicialComplex, TooLargeError, euler_characteristic, iter_bits, weight

DEFAULT_MAX_ELEMENTS = 400


def _require(G: SimplicialComplex, max_elements: int | None) -> None:
    if not len(G):
        raise ValueError("matrix of the empty complex is undefined")
    if max_elements is not None and len(G) > max_elements:
        raise TooLargeError(len(G), max_elements)


def _weights(G: SimplicialComplex) -> np.ndarray:
    return np.array([weight(x) for x in G], dtype=np.int64)


def _pairwise_chi(G: SimplicialComplex, masks: list[int]) -> np.ndarray:
    n = len(G)
    w = _weights(G)
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        mi = masks[i]
        if not mi:
            continue
        for j in range(i, n):
            common = mi & masks[j]
            if common:
                M[i, j] = M[j, i] = G.chi_mask(common)
    return M * np.outer(w, w)


def connection_laplacian(G: SimplicialComplex, *, max_elements: int | None = DEFAULT_MAX_ELEMENTS) -> np.ndarray:
    """L(x, y) = 1 if x and y share a vertex, else 0."""
    _require(G, max_elements)
    vm = G.vertex_masks
    n = len(G)
    L = np.zeros((n, n), dtype=np.int64)
    for i, x in enumerate(G):
        touching = 0
        for v in x:
            touching |= vm[v]
        L[i, list(iter_bits(touching))] = 1
    return L


def green_matrix(G: SimplicialComplex, *, max_elements: int | None = DEFAULT_MAX_ELEMENTS) -> np.ndarray:
    """g(x, y) = w(x) w(y) chi(U(x) & U(y)); the inverse of the connection Laplacian."""
    _require(G, max_elements)
    return _pairwise_chi(G, [G.star_mask(i) for i in range(len(G))])


def sphere_matrix(G: SimplicialComplex, *, max_elements: int | None = DEFAULT_MAX_ELEMENTS) -> np.ndarray:
    """s(x, y) = w(x) w(y) chi(S(x) & S(y))."""
    _require(G, max_elements)
    return _pairwise_chi(G, [G.sphere_mask(i) for i in range(len(G))])


determinant = linalg.determinant
nullity = linalg.nullity


def super_trace(G: SimplicialComplex, M) -> int:
    """sum_x w(x) M(x, x)."""
    A = np.asarray(M)
    if A.shape != (len(G), len(G)):
        raise ValueError(f"matrix of shape {A.shape} does not match complex with {len(G)} elements")
    return sum(weight(x) * int(A[i, i]) for i, x in enumerate(G))


def potential(G: SimplicialComplex, x: Iterable[int]) -> int:
    """V(x) = w(x) chi(U(x)); equals the row sum of g at x."""
    i = G.position(x)
    return weight(G.elements[i]) * G.chi_mask(G.star_mask(i))


def energy_sum(G: SimplicialComplex) -> int:
    """sum_x w(x) chi(U(x))."""
    return sum(weight(x) * G.chi_mask(G.star_mask(i)) for i, x in enumerate(G))


def sphere_sum(G: SimplicialComplex) -> int:
    """sum_x w(x) chi(S(x))."""
    return sum(weight(x) * G.chi_mask(G.sphere_mask(i)) for i, x in enumerate(G))


@dataclass
class EnergyReport:
    chi: int
    energy_sum: int
    sphere_sum: int
    energy_ok: bool
    sphere_ok: bool
    det_g: int | None = None
    inverse_ok: bool | None = None
    sphere_super_trace: int | None = None
    nullity_s: int | None = None
    skipped: str | None = None

    @property
    def unimodular(self) -> bool | None:
        return None if self.det_g is None else self.det_g in (-1, 1)


def verify_energy_and_sphere(
    G: SimplicialComplex, *, max_elements: int | None = DEFAULT_MAX_ELEMENTS
) -> EnergyReport:
    """Both formulas always; matrix quantities only when G is under the size ceiling."""
    if not len(G):
        raise ValueError("empty complex")
    chi = euler_characteristic(G)
    e, s = energy_sum(G), sphere_sum(G)
    report = EnergyReport(chi, e, s, e == chi, s == 0)
    if max_elements is not None and len(G) > max_elements:
        report.skipped = f"too large ({len(G)} > {max_elements} elements)"
        return report
    L = connection_laplacian(G, max_elements=None)
    g = green_matrix(G, max_elements=None)
    sm = sphere_matrix(G, max_elements=None)
    report.inverse_ok = linalg.is_identity(linalg.matmul(L, g))
    report.det_g = linalg.determinant(g)
    report.sphere_super_trace = super_trace(G, sm)
    report.nullity_s = linalg.nullity(sm)
    return report
