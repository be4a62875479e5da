"""Contractibility, manifold and sphere recognition, star deletion, Barycentric refinement.

Contractibility follows the inductive definition: the one-point complex is
contractible, and G is contractible if some x has both S(x) and G minus
U(x) contractible.  The search runs over candidates in canonical order and
is memoised on the exact labelled element set.  Candidates are pruned by
the necessary condition chi = 1 (a contractible complex always has Euler
characteristic 1, by the local valuation identity).
"""
from __future__ import annotations

import sys
import threading
from dataclasses import dataclass, field
from typing import Iterable

from .complex_core import (
    SimplicialComplex,
    TooLargeError,
    euler_characteristic,
    iter_bits,
)

DEFAULT_MAX_ELEMENTS = 5000


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold."""


@dataclass(frozen=True)
class ContractionStep:
    element: tuple[int, ...]
    link: "HomotopyVerdict"


@dataclass(frozen=True)
class HomotopyVerdict:
    contractible: bool
    witness: tuple[ContractionStep, ...] | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.contractible


_memo_lock = threading.Lock()
_contractible_memo: dict[frozenset, tuple[int, ...] | None] = {}
_sphere_memo: dict[tuple[frozenset, int], bool] = {}


def clear_caches() -> None:
    with _memo_lock:
        _contractible_memo.clear()
        _sphere_memo.clear()


def _remember(table: dict, key, value):
    with _memo_lock:
        return table.setdefault(key, value)


def _guard(G: SimplicialComplex, max_elements: int) -> None:
    if len(G) > max_elements:
        raise TooLargeError(len(G), max_elements)


def delete_star(G: SimplicialComplex, x: Iterable[int]) -> SimplicialComplex:
    """G minus U(x): drops x and everything containing it."""
    i = G.position(x)
    return G.sub(((1 << len(G)) - 1) & ~G.star_mask(i))


_ONE_POINT = ()  # memo marker for the base case


def _contraction_choice(G: SimplicialComplex) -> tuple[int, ...] | None:
    """An element x whose removal witnesses contractibility, or None."""
    key = G.frozen
    if key in _contractible_memo:
        return _contractible_memo[key]
    n = len(G)
    if n == 1:
        return _remember(_contractible_memo, key, _ONE_POINT)
    if n == 0 or euler_characteristic(G) != 1:
        return _remember(_contractible_memo, key, None)
    full = (1 << n) - 1
    choice = None
    for i in range(n):
        smask = G.sphere_mask(i)
        if smask == 0 or G.chi_mask(smask) != 1:
            continue
        if _contraction_choice(G.sub(smask)) is None:
            continue
        if _contraction_choice(G.sub(full & ~G.star_mask(i))) is None:
            continue
        choice = G.elements[i]
        break
    return _remember(_contractible_memo, key, choice)


def _build_witness(G: SimplicialComplex) -> tuple[ContractionStep, ...]:
    steps = []
    while len(G) > 1:
        x = _contractible_memo[G.frozen]
        i = G.position(x)
        link = G.sub(G.sphere_mask(i))
        steps.append(ContractionStep(x, HomotopyVerdict(True, _build_witness(link))))
        G = G.sub(((1 << len(G)) - 1) & ~G.star_mask(i))
    return tuple(steps)


def _with_recursion_room(fn, *args):
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))
    try:
        return fn(*args)
    finally:
        sys.setrecursionlimit(limit)


def is_contractible(
    G: SimplicialComplex,
    *,
    witness: bool = False,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> HomotopyVerdict:
    """Decide contractibility; with ``witness=True`` also return the reduction steps."""
    _guard(G, max_elements)
    ok = _with_recursion_room(_contraction_choice, G) is not None
    steps = _build_witness(G) if ok and witness else None
    return HomotopyVerdict(ok, steps)


def replay_witness(G: SimplicialComplex, steps: Iterable[ContractionStep]) -> SimplicialComplex:
    """Apply the recorded star deletions; a valid witness ends at one point."""
    for step in steps:
        G = delete_star(G, step.element)
    return G


def _is_sphere(G: SimplicialComplex, d: int) -> bool:
    if d < -1:
        return False
    if d == -1:
        return len(G) == 0
    key = (G.frozen, d)
    if key in _sphere_memo:
        return _sphere_memo[key]
    result = _is_manifold(G, d) and any(
        _contraction_choice(G.sub(((1 << len(G)) - 1) & ~G.star_mask(i))) is not None
        for i in range(len(G))
    )
    return _remember(_sphere_memo, key, result)


def _is_manifold(G: SimplicialComplex, d: int) -> bool:
    if d < 0 or not len(G) or G.dim != d:
        return False
    return all(_is_sphere(G.sub(G.sphere_mask(i)), d - 1) for i in range(len(G)))


def is_manifold(G: SimplicialComplex, d: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """Every unit sphere S(x), for every element x, is a (d-1)-sphere."""
    _guard(G, max_elements)
    return _with_recursion_room(_is_manifold, G, d)


def is_sphere(G: SimplicialComplex, d: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """d-manifold with some G minus U(x) contractible; the empty complex is the (-1)-sphere."""
    _guard(G, max_elements)
    return _with_recursion_room(_is_sphere, G, d)


def euler_gem_check(G: SimplicialComplex, d: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    if not is_sphere(G, d, max_elements=max_elements):
        raise PreconditionError(f"complex is not a {d}-sphere")
    return euler_characteristic(G) == 1 + (-1) ** d


def containment_chains(G: SimplicialComplex, mask: int | None = None) -> list[tuple[int, ...]]:
    """Chains x_0 < x_1 < ... under strict inclusion among the selected elements.

    Each chain is returned as a tuple of 1-based canonical indices.
    """
    n = len(G)
    if mask is None:
        mask = (1 << n) - 1
    chains_ending: dict[int, list[tuple[int, ...]]] = {}
    out: list[tuple[int, ...]] = []
    for i in iter_bits(mask):  # canonical order: faces precede cofaces
        below = G.core_mask(i) & mask & ~(1 << i)
        mine = [(i + 1,)]
        for j in iter_bits(below):
            mine.extend(c + (i + 1,) for c in chains_ending[j])
        chains_ending[i] = mine
        out.extend(mine)
    return out


def barycentric_refinement(G: SimplicialComplex) -> SimplicialComplex:
    """Whitney complex of the containment graph; vertex k+1 is the k-th element of G."""
    return SimplicialComplex(containment_chains(G), check=False)
