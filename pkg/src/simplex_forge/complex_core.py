"""Simplices, simplicial complexes and the four local sets of the finite topology.

A simplex is a strictly increasing tuple of positive integer labels.  A
complex stores its elements in canonical order (cardinality, then
lexicographic) and answers star / core / ball / sphere queries through
integer bitmasks over that order.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Union

Simplex = tuple[int, ...]


class ComplexError(ValueError):
    """Invalid simplex or complex data."""


class NotAnElementError(KeyError):
    """A simplex was queried that is not an element of the host complex."""


class TooLargeError(RuntimeError):
    """Input exceeds a configured element-count ceiling."""

    def __init__(self, size: int, limit: int, what: str = "complex"):
        super().__init__(f"{what} has {size} elements, ceiling is {limit}")
        self.size = size
        self.limit = limit


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form of a simplex: sorted tuple of distinct positive ints."""
    vs = sorted(set(vertices))
    if not vs:
        raise ComplexError("empty simplex")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise ComplexError(f"vertex labels must be positive integers, got {v!r}")
    return tuple(vs)


def dimension(x: Simplex) -> int:
    return len(x) - 1


def weight(x: Simplex) -> int:
    """w(x) = (-1)^dim(x)."""
    return 1 if len(x) % 2 else -1


def canonical_key(x: Simplex) -> tuple[int, Simplex]:
    return (len(x), x)


def faces(x: Simplex) -> Iterator[Simplex]:
    """All nonempty subsets of x (x included)."""
    for k in range(1, len(x) + 1):
        yield from combinations(x, k)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimplicialComplex:
    """Finite abstract simplicial complex with canonically ordered elements.

    Instances are immutable; derived tables (bitmasks, vertex index) are
    computed lazily and cached.
    """

    def __init__(self, elements: Iterable[Iterable[int]] = (), *, check: bool = True):
        elems = {simplex(x) for x in elements} if check else set(elements)
        self.elements: tuple[Simplex, ...] = tuple(sorted(elems, key=canonical_key))
        self.index: dict[Simplex, int] = {x: i for i, x in enumerate(self.elements)}
        if check:
            for x in self.elements:
                if len(x) > 1:
                    for y in combinations(x, len(x) - 1):
                        if y not in self.index:
                            raise ComplexError(f"not subset-closed: {y} missing below {x}")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return closure(facets)

    # container protocol
    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        try:
            return tuple(sorted(x)) in self.index
        except TypeError:
            return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={len(self)}, f={self.f_vector})"

    @property
    def dim(self) -> int | None:
        """Maximal dimension, or None for the empty complex."""
        return len(self.elements[-1]) - 1 if self.elements else None

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        if not self.elements:
            return ()
        counts = [0] * len(self.elements[-1])
        for x in self.elements:
            counts[len(x) - 1] += 1
        return tuple(counts)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(x[0] for x in self.elements if len(x) == 1)

    @cached_property
    def facets(self) -> tuple[Simplex, ...]:
        """Maximal elements in canonical order."""
        return tuple(self.elements[i] for i in range(len(self)) if self.star_mask(i) == 1 << i)

    @cached_property
    def frozen(self) -> frozenset[Simplex]:
        return frozenset(self.elements)

    def position(self, x: Iterable[int]) -> int:
        """Canonical index of x; raises NotAnElementError if x is not in G."""
        key = tuple(sorted(x))
        try:
            return self.index[key]
        except KeyError:
            raise NotAnElementError(f"{key} is not an element of the complex") from None

    # -- bitmask tables -------------------------------------------------------

    @cached_property
    def parity_masks(self) -> tuple[int, int]:
        """(even-dimensional mask, odd-dimensional mask)."""
        even = odd = 0
        for i, x in enumerate(self.elements):
            if len(x) % 2:
                even |= 1 << i
            else:
                odd |= 1 << i
        return even, odd

    @cached_property
    def vertex_masks(self) -> dict[int, int]:
        """Vertex label -> mask of elements containing it."""
        masks: dict[int, int] = {}
        for i, x in enumerate(self.elements):
            for v in x:
                masks[v] = masks.get(v, 0) | (1 << i)
        return masks

    @cached_property
    def _star_masks(self) -> list[int]:
        vm = self.vertex_masks
        out = []
        for x in self.elements:
            m = vm[x[0]]
            for v in x[1:]:
                m &= vm[v]
            out.append(m)
        return out

    @cached_property
    def _core_masks(self) -> list[int]:
        idx = self.index
        out = []
        for x in self.elements:
            m = 0
            for y in faces(x):
                m |= 1 << idx[y]
            out.append(m)
        return out

    @cached_property
    def _ball_masks(self) -> list[int]:
        cores = self._core_masks
        out = []
        for s in self._star_masks:
            m = 0
            for j in iter_bits(s):
                m |= cores[j]
            out.append(m)
        return out

    def star_mask(self, i: int) -> int:
        return self._star_masks[i]

    def core_mask(self, i: int) -> int:
        return self._core_masks[i]

    def ball_mask(self, i: int) -> int:
        return self._ball_masks[i]

    def sphere_mask(self, i: int) -> int:
        return self._ball_masks[i] & ~self._star_masks[i]

    def chi_mask(self, mask: int) -> int:
        even, odd = self.parity_masks
        return (mask & even).bit_count() - (mask & odd).bit_count()

    def mask_of(self, simplices: Iterable[Iterable[int]]) -> int:
        m = 0
        for x in simplices:
            m |= 1 << self.position(x)
        return m

    def from_mask(self, mask: int) -> frozenset[Simplex]:
        return frozenset(self.elements[i] for i in iter_bits(mask))

    def sub(self, mask: int) -> "SimplicialComplex":
        """Standalone complex on a subset-closed mask (closure not re-checked)."""
        return SimplicialComplex((self.elements[i] for i in iter_bits(mask)), check=False)


SimplexSet = frozenset  # frozenset[Simplex]; members belong to a host complex
ChiArgument = Union[SimplicialComplex, Iterable[Iterable[int]]]


def closure(faces_in: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Smallest subset-closed complex containing the given faces."""
    elems: set[Simplex] = set()
    for f in faces_in:
        x = simplex(f)
        if x in elems:
            continue
        elems.update(faces(x))
    return SimplicialComplex(elems, check=False)


def euler_characteristic(A: ChiArgument) -> int:
    """Sum of w(x) over x in A; A may be any collection of simplices."""
    if isinstance(A, SimplicialComplex):
        even, odd = A.parity_masks
        return even.bit_count() - odd.bit_count()
    return sum(1 if len(tuple(x)) % 2 else -1 for x in A)


def star(G: SimplicialComplex, x: Iterable[int]) -> frozenset[Simplex]:
    """U(x): elements of G containing x."""
    return G.from_mask(G.star_mask(G.position(x)))


def core(G: SimplicialComplex, x: Iterable[int]) -> frozenset[Simplex]:
    """K(x): nonempty subsets of x."""
    return G.from_mask(G.core_mask(G.position(x)))


def unit_ball(G: SimplicialComplex, x: Iterable[int]) -> frozenset[Simplex]:
    """B(x): closure of the star of x."""
    return G.from_mask(G.ball_mask(G.position(x)))


def unit_sphere(G: SimplicialComplex, x: Iterable[int]) -> frozenset[Simplex]:
    """S(x) = B(x) minus U(x); always subset-closed, possibly empty."""
    return G.from_mask(G.sphere_mask(G.position(x)))


def is_closed(simplices: Iterable[Iterable[int]]) -> bool:
    s = {tuple(sorted(x)) for x in simplices}
    return all(y in s for x in s if len(x) > 1 for y in combinations(x, len(x) - 1))


def subcomplex(G: SimplicialComplex, S: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Reify a subset-closed SimplexSet of G as a standalone complex."""
    mask = G.mask_of(S)
    elems = [G.elements[i] for i in iter_bits(mask)]
    if not is_closed(elems):
        raise ComplexError("simplex set is not subset-closed")
    return SimplicialComplex(elems, check=False)


def link_complex(G: SimplicialComplex, x: Iterable[int]) -> SimplicialComplex:
    """S(x) as a standalone complex."""
    return G.sub(G.sphere_mask(G.position(x)))


def vertex_element(v: int) -> Simplex:
    """The 0-dimensional element {v} for a vertex label v."""
    return simplex((v,))
