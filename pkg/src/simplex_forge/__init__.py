"""Exact computations on finite abstract simplicial complexes."""
from .complex_core import (
    ComplexError,
    NotAnElementError,
    SimplicialComplex,
    TooLargeError,
    closure,
    core,
    euler_characteristic,
    simplex,
    star,
    subcomplex,
    unit_ball,
    unit_sphere,
    weight,
)
from .generators import (
    Graph,
    cross_polytope,
    disjoint_union,
    join,
    named_skeleton,
    projective_plane,
    random_graph,
    suspension,
    whitney,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexError", "NotAnElementError", "SimplicialComplex", "TooLargeError", "closure", "core",
    "euler_characteristic", "simplex", "star", "subcomplex", "unit_ball", "unit_sphere", "weight",
    "Graph", "cross_polytope", "disjoint_union", "join", "named_skeleton", "projective_plane",
    "random_graph", "suspension", "whitney",
]
