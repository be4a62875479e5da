"""Levitt curvature, Gauss-Bonnet, Poincare-Hopf indices, center manifolds and level sets.

A vertex function is a plain mapping ``{vertex label: value}`` with values
that compare exactly (ints or Fractions).  It must be locally injective:
the two ends of every edge get different values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping

import numpy as np

from .complex_core import SimplicialComplex, euler_characteristic, iter_bits, weight
from .homotopy import containment_chains, is_manifold
from .valuations import Polynomial, antiderivative, f_function

VertexFunction = Mapping[int, "int | Fraction"]

EXHAUSTIVE_VERTEX_LIMIT = 8


class NotLocallyInjectiveError(ValueError):
    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"vertex function takes equal values on edge {edge}")
        self.edge = edge


class IndexMismatchError(RuntimeError):
    """The link form and the max-attribution form of the index disagree."""


@dataclass(frozen=True)
class CurvatureProfile:
    values: dict[int, Fraction]
    total: Fraction


def levitt_curvature(G: SimplicialComplex) -> CurvatureProfile:
    """K(v) = 1 - f_0(S(v))/2 + f_1(S(v))/3 - ...  (supported on vertices)."""
    if not len(G):
        raise ValueError("curvature of the empty complex is undefined")
    values = {}
    for v in G.vertices:
        i = G.index[(v,)]
        link_f = G.sub(G.sphere_mask(i)).f_vector
        k = Fraction(1)
        for dim, count in enumerate(link_f):
            k += Fraction((-1) ** (dim + 1) * count, dim + 2)
        values[v] = k
    return CurvatureProfile(values, sum(values.values(), Fraction(0)))


def link_curvature_polynomials(G: SimplicialComplex) -> dict[int, Polynomial]:
    """F_{S(v)}(t), the antiderivative of each vertex link's f-function."""
    return {
        v: antiderivative(f_function(G.sub(G.sphere_mask(G.index[(v,)]))))
        for v in G.vertices
    }


def gauss_bonnet_polynomial_check(G: SimplicialComplex) -> bool:
    """f_G(t) - 1 == sum_v F_{S(v)}(t) as exact polynomials."""
    total = Polynomial()
    for F in link_curvature_polynomials(G).values():
        total = total + F
    return f_function(G) - 1 == total


def curvature_from_polynomials(G: SimplicialComplex) -> dict[int, Fraction]:
    """-F_{S(v)}(-1); cross-check route for levitt_curvature."""
    return {v: -F(Fraction(-1)) for v, F in link_curvature_polynomials(G).items()}


def check_locally_injective(G: SimplicialComplex, f: VertexFunction) -> None:
    missing = [v for v in G.vertices if v not in f]
    if missing:
        raise ValueError(f"vertex function misses vertices {missing}")
    for x in G:
        if len(x) == 2 and f[x[0]] == f[x[1]]:
            raise NotLocallyInjectiveError(x)


def negate(f: VertexFunction) -> dict[int, "int | Fraction"]:
    return {v: -val for v, val in f.items()}


def _index_link_form(G: SimplicialComplex, f: VertexFunction, i: int) -> int:
    fv = f[G.elements[i][0]]
    below = 0
    for j in iter_bits(G.sphere_mask(i)):
        if all(f[u] < fv for u in G.elements[j]):
            below |= 1 << j
    return 1 - G.chi_mask(below)


def _index_max_form(G: SimplicialComplex, f: VertexFunction, i: int) -> int:
    v = G.elements[i][0]
    fv = f[v]
    return sum(weight(G.elements[j]) for j in iter_bits(G.star_mask(i))
               if all(f[u] <= fv for u in G.elements[j]))


def ph_index(G: SimplicialComplex, f: VertexFunction, v: int, *, validate: bool = True) -> int:
    """Poincare-Hopf index i_f(v), computed two ways and cross-checked."""
    if validate:
        check_locally_injective(G, f)
    i = G.position((v,))
    a = _index_link_form(G, f, i)
    b = _index_max_form(G, f, i)
    if a != b:
        raise IndexMismatchError(f"index forms disagree at {v}: {a} != {b}")
    return a


def ph_indices(G: SimplicialComplex, f: VertexFunction) -> dict[int, int]:
    check_locally_injective(G, f)
    return {v: ph_index(G, f, v, validate=False) for v in G.vertices}


def poincare_hopf_check(G: SimplicialComplex, f: VertexFunction) -> bool:
    return sum(ph_indices(G, f).values()) == euler_characteristic(G)


def symmetric_index(G: SimplicialComplex, f: VertexFunction, v: int) -> Fraction:
    """j_f(v) = (i_f(v) + i_{-f}(v)) / 2."""
    check_locally_injective(G, f)
    return Fraction(ph_index(G, f, v, validate=False) + ph_index(G, negate(f), v, validate=False), 2)


def _sign_change_mask(G: SimplicialComplex, f: VertexFunction, candidates: int, c) -> int:
    mask = 0
    for j in iter_bits(candidates):
        vals = [f[u] for u in G.elements[j]]
        if min(vals) < c < max(vals):
            mask |= 1 << j
    return mask


def center_manifold(G: SimplicialComplex, f: VertexFunction, v: int) -> SimplicialComplex:
    """C_f(v): elements of S(v) on which f - f(v) changes sign, as a subcomplex of G_1.

    Vertex labels are the 1-based canonical indices of the elements of G, so
    the result is literally a subcomplex of ``barycentric_refinement(G)``.
    """
    check_locally_injective(G, f)
    i = G.position((v,))
    mask = _sign_change_mask(G, f, G.sphere_mask(i), f[v])
    return SimplicialComplex(containment_chains(G, mask), check=False)


def level_set(G: SimplicialComplex, f: VertexFunction, c) -> SimplicialComplex:
    """{f = c} in the Barycentric refinement, for c not a vertex value."""
    check_locally_injective(G, f)
    if any(f[v] == c for v in G.vertices):
        raise ValueError(f"level {c} is a vertex value")
    mask = _sign_change_mask(G, f, (1 << len(G)) - 1, c)
    return SimplicialComplex(containment_chains(G, mask), check=False)


def midpoint_levels(G: SimplicialComplex, f: VertexFunction) -> list[Fraction]:
    """Midpoints between consecutive sorted vertex values."""
    vals = sorted({Fraction(f[v]) for v in G.vertices})
    return [(a + b) / 2 for a, b in zip(vals, vals[1:])]


def sard_check(G: SimplicialComplex, f: VertexFunction, c, *, d: int | None = None) -> bool:
    """The level set {f = c} of a d-manifold is empty or a (d-1)-manifold."""
    d = G.dim if d is None else d
    if d is None or not is_manifold(G, d):
        raise ValueError(f"complex is not a {d}-manifold")
    L = level_set(G, f, c)
    return len(L) == 0 or is_manifold(L, d - 1)


@dataclass(frozen=True)
class IndexExpectation:
    values: dict[int, Fraction]
    exhaustive: bool
    samples: int
    seed: int | None


def _index_totals(G: SimplicialComplex, ranks: np.ndarray) -> np.ndarray:
    """Sum over rows of `ranks` (vertex orderings) of each vertex's index.

    Each element's weight goes to its highest-ranked vertex.
    """
    pos = {v: k for k, v in enumerate(G.vertices)}
    totals = np.zeros(len(G.vertices), dtype=np.int64)
    for x in G:
        cols = [pos[u] for u in x]
        top = np.asarray(cols)[np.argmax(ranks[:, cols], axis=1)]
        totals += weight(x) * np.bincount(top, minlength=len(totals))
    return totals


def index_expectation(
    G: SimplicialComplex, trials: int = 1000, seed: int = 0, *, chunk: int = 50_000
) -> IndexExpectation:
    """Average Poincare-Hopf index over uniformly random vertex orderings.

    Complexes with at most 8 vertices are averaged exhaustively over all
    orderings (exact); larger ones use ``trials`` orderings drawn from
    ``numpy.random.default_rng(seed)``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    V = G.vertices
    nv = len(V)
    totals = np.zeros(nv, dtype=np.int64)
    if nv <= EXHAUSTIVE_VERTEX_LIMIT:
        count = math.factorial(nv)
        perms = permutations(range(nv))
        while True:
            block = np.array([p for _, p in zip(range(chunk), perms)], dtype=np.int64)
            if not len(block):
                break
            totals += _index_totals(G, block)
        exhaustive, used_seed = True, None
    else:
        rng = np.random.default_rng(seed)
        count = trials
        done = 0
        while done < trials:
            k = min(chunk, trials - done)
            block = np.argsort(rng.random((k, nv)), axis=1)
            totals += _index_totals(G, block)
            done += k
        exhaustive, used_seed = False, seed
    values = {v: Fraction(int(t), count) for v, t in zip(V, totals)}
    return IndexExpectation(values, exhaustive, count, used_seed)


def random_vertex_function(G: SimplicialComplex, rng) -> dict[int, int]:
    """Uniform random ordering of the vertices, as values 1..|V|."""
    V = list(G.vertices)
    values = list(range(1, len(V) + 1))
    rng.shuffle(values)
    return dict(zip(V, values))


__all__ = [
    "CurvatureProfile", "IndexExpectation", "NotLocallyInjectiveError", "IndexMismatchError",
    "levitt_curvature", "gauss_bonnet_polynomial_check", "curvature_from_polynomials",
    "ph_index", "ph_indices", "poincare_hopf_check", "symmetric_index", "center_manifold",
    "level_set", "midpoint_levels", "sard_check", "index_expectation", "random_vertex_function",
    "check_locally_injective", "negate",
]
