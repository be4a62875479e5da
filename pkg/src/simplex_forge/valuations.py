"""f-vectors, f-functions and their antiderivatives, h-vectors, Dehn-Sommerville tests,
and the Stirling matrix that pushes f-vectors through Barycentric refinement.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

import numpy as np

from .complex_core import SimplicialComplex

Number = Union[int, Fraction]


class Polynomial:
    """Univariate polynomial with exact (int / Fraction) coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def t(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return _lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or another Polynomial."""
        acc = Polynomial() if isinstance(x, Polynomial) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def antiderivative(self) -> "Polynomial":
        return Polynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def integer_coeffs(self) -> tuple[int, ...]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return tuple(int(c) for c in self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t^{k}" if k > 1 else f"{c}*t")
        return " + ".join(terms)


def _lift(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial((x,))


FPolynomial = Polynomial


def f_vector(G: SimplicialComplex) -> tuple[int, ...]:
    return G.f_vector


def f_function(G: SimplicialComplex) -> Polynomial:
    """1 + sum_k f_k t^(k+1); the constant 1 for the empty complex."""
    return Polynomial((1,) + G.f_vector)


def antiderivative(p: Polynomial) -> Polynomial:
    """Formal integral from 0 to t."""
    return p.antiderivative()


def h_vector(G: SimplicialComplex) -> tuple[int, ...]:
    """Coefficients h_0..h_{dim+1} of (x-1)^(dim+1) f_G(1/(x-1))."""
    if not len(G):
        raise ValueError("h-vector of the empty complex is undefined")
    D = G.dim + 1
    c = (1,) + G.f_vector
    xm1 = Polynomial((-1, 1))
    h = Polynomial()
    for k in range(D + 1):
        h = h + c[k] * xm1 ** (D - k)
    coeffs = h.integer_coeffs()
    return coeffs + (0,) * (D + 1 - len(coeffs))


def is_dehn_sommerville(G: SimplicialComplex) -> bool:
    """True iff the h-vector is palindromic."""
    h = h_vector(G)
    return h == h[::-1]


def ds_symmetry(G: SimplicialComplex) -> bool:
    """Polynomial form of the same test: f(-1-t) == (-1)^(dim+1) f(t)."""
    if not len(G):
        raise ValueError("Dehn-Sommerville test needs a nonempty complex")
    f = f_function(G)
    reflected = f(Polynomial((-1, -1)))
    return reflected == (f if (G.dim + 1) % 2 == 0 else -f)


def ds_residual(G: SimplicialComplex, coeffs: Sequence[int]) -> int:
    """Dot product of the f-vector with coeffs, shorter side zero-padded."""
    f = G.f_vector
    n = max(len(f), len(coeffs))
    f = tuple(f) + (0,) * (n - len(f))
    c = tuple(coeffs) + (0,) * (n - len(coeffs))
    return sum(a * b for a, b in zip(f, c))


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        return 0
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1)) // factorial(k)


def barycentric_operator(d: int) -> np.ndarray:
    """Q with Q[k][j] = S(j+1, k+1) (k+1)!, mapping f-vectors to refined f-vectors."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    Q = np.zeros((d + 1, d + 1), dtype=object)
    for k in range(d + 1):
        for j in range(d + 1):
            Q[k, j] = stirling2(j + 1, k + 1) * factorial(k + 1)
    return Q


def refine_f_vector(f: Sequence[int]) -> tuple[int, ...]:
    if not f:
        return ()
    Q = barycentric_operator(len(f) - 1)
    return tuple(int(v) for v in Q.dot(np.array(list(f), dtype=object)))


def alternating_eigenvector_check(d: int) -> bool:
    """Q^T fixes (1, -1, 1, ...)."""
    Q = barycentric_operator(d)
    alt = np.array([(-1) ** k for k in range(d + 1)], dtype=object)
    return bool(np.array_equal(Q.T.dot(alt), alt))
