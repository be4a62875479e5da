"""Complexes from graphs and combinators, plus the named example complexes.

Random graphs use ``random.Random(seed)`` (Mersenne Twister) sampling
``m`` distinct pairs from the lexicographically ordered pair list on
vertices ``1..n``; the same ``(n, m, seed)`` always yields the same graph
within one Python build.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .complex_core import ComplexError, SimplicialComplex, closure


@dataclass(frozen=True)
class Graph:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for a, b in self.edges:
            if a == b:
                raise ComplexError(f"loop at {a}")
            if a not in self.vertices or b not in self.vertices:
                raise ComplexError(f"edge {(a, b)} references a missing vertex")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        es = frozenset((min(a, b), max(a, b)) for a, b in edges)
        vs = set(vertices)
        for a, b in es:
            vs.update((a, b))
        return cls(frozenset(vs), es)

    def neighbors(self) -> dict[int, set[int]]:
        nb: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return nb


def cliques(graph: Graph) -> list[tuple[int, ...]]:
    """Every complete subgraph's vertex set, as sorted tuples."""
    nb = graph.neighbors()
    out: list[tuple[int, ...]] = []

    def extend(clique: tuple[int, ...], candidates: list[int]) -> None:
        out.append(clique)
        for i, v in enumerate(candidates):
            extend(clique + (v,), [u for u in candidates[i + 1:] if u in nb[v]])

    for v in sorted(graph.vertices):
        extend((v,), sorted(u for u in nb[v] if u > v))
    return out


def whitney(graph: Graph) -> SimplicialComplex:
    """Whitney (clique) complex of a graph."""
    return SimplicialComplex(cliques(graph), check=False)


def _shift(G: SimplicialComplex, offset: int) -> list[tuple[int, ...]]:
    return [tuple(v + offset for v in x) for x in G]


def _max_label(G: SimplicialComplex) -> int:
    return max(G.vertices) if len(G) else 0


def join(G: SimplicialComplex, H: SimplicialComplex) -> SimplicialComplex:
    """Join G + H; H's labels are shifted by the largest label of G."""
    if not len(G):
        return H
    if not len(H):
        return G
    Hs = _shift(H, _max_label(G))
    elems = list(G) + Hs + [x + y for x in G for y in Hs]
    return SimplicialComplex(elems, check=False)


def point() -> SimplicialComplex:
    return SimplicialComplex([(1,)])


def two_points() -> SimplicialComplex:
    """The 0-sphere."""
    return SimplicialComplex([(1,), (2,)])


def suspension(G: SimplicialComplex) -> SimplicialComplex:
    return join(G, two_points())


def disjoint_union(G: SimplicialComplex, H: SimplicialComplex) -> SimplicialComplex:
    if not len(H):
        return G
    return SimplicialComplex(list(G) + _shift(H, _max_label(G)), check=False)


def cross_polytope(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-dimensional cross-polytope, a d-sphere.

    ``d = -1`` gives the empty complex.
    """
    if d < -1:
        raise ValueError(f"cross_polytope needs d >= -1, got {d}")
    G = SimplicialComplex()
    for _ in range(d + 1):
        G = join(G, two_points())
    return G


# 15-vertex, 42-edge graph whose Whitney complex is a projective plane.
PROJECTIVE_PLANE_EDGES = (
    (1, 5), (1, 7), (1, 2), (1, 4), (1, 8), (1, 9), (2, 6), (2, 9),
    (2, 3), (2, 5), (2, 10), (4, 3), (4, 5), (4, 11), (4, 7), (4, 12),
    (8, 7), (8, 14), (8, 9), (8, 15), (9, 10), (9, 15), (3, 7), (3, 10),
    (3, 6), (3, 11), (5, 6), (5, 12), (5, 13), (10, 11), (10, 15),
    (6, 7), (6, 13), (6, 14), (11, 12), (11, 15), (7, 14), (12, 13),
    (12, 15), (13, 14), (13, 15), (14, 15),
)

CUBE_EDGES = (
    (1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7), (7, 8), (5, 8),
    (1, 5), (2, 6), (3, 7), (4, 8),
)

DODECAHEDRON_EDGES = (
    (1, 2), (1, 11), (1, 20), (2, 3), (2, 9), (3, 4), (3, 7), (4, 5),
    (4, 20), (5, 6), (5, 18), (6, 7), (6, 16), (7, 8), (8, 9), (8, 15),
    (9, 10), (10, 11), (10, 14), (11, 12), (12, 13), (12, 19), (13, 14),
    (13, 17), (14, 15), (15, 16), (16, 17), (17, 18), (18, 19), (19, 20),
)


def projective_plane() -> SimplicialComplex:
    return whitney(Graph.from_edges(PROJECTIVE_PLANE_EDGES))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges([(k, k % n + 1) for k in range(1, n + 1)])


def star_graph(n: int) -> Graph:
    """Center 1 joined to leaves 2..n (n vertices in total)."""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    return Graph.from_edges([(1, k) for k in range(2, n + 1)], vertices=[1])


def named_skeleton(name: str, n: int | None = None) -> SimplicialComplex:
    """One of: cube, dodecahedron, cycle (needs n >= 3), star (needs n)."""
    if name == "cube":
        return whitney(Graph.from_edges(CUBE_EDGES))
    if name == "dodecahedron":
        return whitney(Graph.from_edges(DODECAHEDRON_EDGES))
    if name == "cycle":
        return whitney(cycle_graph(4 if n is None else n))
    if name == "star":
        return whitney(star_graph(5 if n is None else n))
    raise ValueError(f"unknown skeleton {name!r}")


def random_graph(n: int, m: int, seed: int) -> Graph:
    """G(n, m): m distinct edges drawn uniformly on vertices 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    if not 0 <= m <= len(pairs):
        raise ValueError(f"m must lie in [0, {len(pairs)}], got {m}")
    rng = random.Random(seed)
    return Graph(frozenset(range(1, n + 1)), frozenset(rng.sample(pairs, m)))


def random_whitney(n: int, m: int, seed: int) -> SimplicialComplex:
    return whitney(random_graph(n, m, seed))


def complex_from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return closure(facets)


def generate(name: str, *params: int) -> SimplicialComplex:
    """Build a complex by CLI-style name."""
    if name in ("cross-polytope", "cross_polytope", "sphere"):
        return cross_polytope(*params) if params else cross_polytope(2)
    if name in ("projective-plane", "projective_plane"):
        return projective_plane()
    if name in ("cube", "cube-skeleton", "cube_skeleton"):
        return named_skeleton("cube")
    if name in ("dodecahedron", "dodecahedron-skeleton", "dodecahedron_skeleton"):
        return named_skeleton("dodecahedron")
    if name == "cycle":
        return named_skeleton("cycle", *params)
    if name == "star":
        return named_skeleton("star", *params)
    if name in ("simplex", "triangle"):
        k = params[0] if params else 2
        return closure([range(1, k + 2)])
    if name == "point":
        return point()
    if name in ("suspended-projective-planes", "double-projective-suspension"):
        P = projective_plane()
        return suspension(disjoint_union(P, P))
    raise ValueError(f"unknown generator {name!r}")


GENERATOR_NAMES = (
    "cross-polytope", "projective-plane", "cube-skeleton", "dodecahedron-skeleton",
    "cycle", "star", "simplex", "point", "suspended-projective-planes",
)
