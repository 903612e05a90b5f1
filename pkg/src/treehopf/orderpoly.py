"""Order polynomials of rooted forests and the constants theta_T, phi_T.

A forest is read as a poset with each root minimal.  ``Omega(F, s)`` counts
maps V(F) -> {1..s} that weakly increase from a vertex to its children;
the strict version requires strict increase along every edge.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from treehopf.trees import Tree, descending_cut_chains


class PolyS:
    """Polynomial in ``s`` with exact rational coefficients (index = power)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def s(cls):
        return cls([0, 1])

    @classmethod
    def interpolate(cls, values):
        """Unique polynomial of degree < len(values) with p(i) = values[i]."""
        n = len(values)
        out = cls()
        for i, yi in enumerate(values):
            if not yi:
                continue
            basis = cls([1])
            denom = 1
            for j in range(n):
                if j != i:
                    basis = basis * cls([-j, 1])
                    denom *= i - j
            out = out + basis.scale(Fraction(yi, denom))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyS([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyS([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def scale(self, c):
        return PolyS([c * x for x in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, PolyS):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return PolyS()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyS(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PolyS([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, PolyS):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyS([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def negate_s(self):
        """p(-s)."""
        return PolyS([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def shift(self, a):
        """p(s + a)."""
        out = PolyS()
        step = PolyS([a, 1])
        for c in reversed(self.coeffs):
            out = out * step + PolyS([c])
        return out

    def nabla(self):
        """p(s) - p(s - 1)."""
        return self - self.shift(-1)

    def __repr__(self):
        return f"PolyS({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else "s" if k == 1 else f"s^{k}"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def _poly(x):
    return x if isinstance(x, PolyS) else PolyS([x])


# ---------------------------------------------------------------------
# counting by recursion on the shape, then exact interpolation

@lru_cache(maxsize=None)
def _count(t: Tree, s: int, strict: bool) -> int:
    if s <= 0:
        return 0
    if strict:
        # root value k in 1..s, children take values in k+1..s
        return sum(math.prod(_count(c, j, True) for c in t.children) for j in range(0, s))
    return sum(math.prod(_count(c, j, False) for c in t.children) for j in range(1, s + 1))


def count_maps(forest, s: int, strict: bool = False) -> int:
    forest = _as_forest(forest)
    return math.prod(_count(t.shape(), s, strict) for t in forest)


def _as_forest(f):
    if isinstance(f, Tree):
        return (f,)
    return tuple(f)


@lru_cache(maxsize=None)
def _poly_of_tree(shape: Tree, strict: bool) -> PolyS:
    return PolyS.interpolate([_count(shape, s, strict) for s in range(shape.size + 1)])


def _forest_poly(forest, strict):
    out = PolyS([1])
    for t in _as_forest(forest):
        out = out * _poly_of_tree(t.shape(), strict)
    return out


def order_polynomial(forest) -> PolyS:
    """Omega(F, s); a single tree is accepted as a one-tree forest."""
    return _forest_poly(forest, False)


def strict_order_polynomial(forest) -> PolyS:
    return _forest_poly(forest, True)


def theta(t: Tree) -> Fraction:
    """Coefficient of s in Omega(B-(T), s)."""
    return order_polynomial(t.children).coefficient(1)


def varphi(t: Tree) -> Fraction:
    """phi_T = theta_{B+(T)}, the coefficient of s in Omega(T, s)."""
    return order_polynomial((t,)).coefficient(1)


# ---------------------------------------------------------------------
# the recursive characterisation, used as an independent route

def theta_by_recursion(t: Tree) -> Fraction:
    return _theta_rec(Tree(0, [c.shape() for c in t.children]))


@lru_cache(maxsize=None)
def _theta_rec(t: Tree) -> Fraction:
    if len(t.children) != 1:
        return Fraction(0)
    if t.size == 2:
        return Fraction(1)
    total = Fraction(0)
    for m in range(2, t.size + 1):
        inner = Fraction(0)
        for _, pieces in descending_cut_chains(t, m - 1, single_edge_only=True):
            inner += _theta_product(pieces)
        total += inner / math.factorial(m)
    return 1 - total


def _theta_product(pieces) -> Fraction:
    # a non-primitive piece kills the term, so check before recursing
    if any(len(p.children) != 1 for p in pieces):
        return Fraction(0)
    out = Fraction(1)
    for p in pieces:
        out *= _theta_rec(p)
    return out


def nabla_expansion(t: Tree, theta_fn=theta) -> PolyS:
    """Right side of the expansion of Omega(B-(T), s) for primitive T in T-bar.

    ``sum_k s^k/k! sum_{e_1 > ... > e_{k-1}} prod_i theta_{T_{e,i}}``.
    """
    t = Tree(0, [c.shape() for c in t.children])
    out = PolyS([0, theta_fn(t)])
    for k in range(2, t.size + 1):
        inner = Fraction(0)
        for _, pieces in descending_cut_chains(t, k - 1, single_edge_only=True):
            if any(len(p.children) != 1 for p in pieces):
                continue
            prod = Fraction(1)
            for p in pieces:
                prod *= theta_fn(p)
            inner += prod
        out = out + PolyS([0] * k + [inner / math.factorial(k)])
    return out
