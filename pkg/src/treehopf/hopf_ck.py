"""The Connes-Kreimer Hopf algebra of labelled rooted forests.

Forests multiply by disjoint union; the coproduct of a tree sums over its
admissible cuts.  ``pairing`` is the graded duality with H_GL.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from treehopf._vector import LinearCombination, Tensor
from treehopf.hopf_gl import GLVector, _sorted, parse_terms
from treehopf.trees import (
    EMPTY_FOREST,
    Forest,
    Tree,
    admissible_cuts,
    enumerate_forests,
    format_forest,
    parse_forest,
    parse_tree,
)


class CKVector(LinearCombination):
    __slots__ = ()

    def _add_term(self, key, c):
        if isinstance(key, Tree):
            key = Forest([key])
        elif not isinstance(key, Forest):
            key = Forest(key)
        super()._add_term(key, c)

    def _mul_basis(self, a, b):
        return {a + b: 1}

    @classmethod
    def one(cls):
        return cls.basis(EMPTY_FOREST)

    @classmethod
    def parse(cls, text: str):
        """Terms are ``[forest]`` or a single ``(tree)``, e.g. ``2*[(1) (1)] - (1 (1))``."""
        out = cls()
        for c, kind, body in parse_terms(text):
            out._add_term(parse_forest(body) if kind == "[" else parse_tree(body), c)
        return out

    def __str__(self):
        return _sorted(self).format(format_key)


def format_key(f):
    if len(f) == 1:
        return format_forest(f)
    return f"[{format_forest(f)}]" if f else "[]"


def ck(x, c=1) -> CKVector:
    if isinstance(x, str):
        return CKVector.parse(x).scale(c)
    return CKVector.basis(x, c)


def counit(x: CKVector) -> Fraction:
    return x[EMPTY_FOREST]


@lru_cache(maxsize=None)
def _tree_coproduct(t: Tree) -> dict:
    out: dict = defaultdict(int)
    out[(Forest([t]), EMPTY_FOREST)] += 1
    for _, p, r in admissible_cuts(t):
        out[(p, Forest([r]))] += 1
    return dict(out)


@lru_cache(maxsize=None)
def _forest_coproduct(f: Forest) -> dict:
    acc = {(EMPTY_FOREST, EMPTY_FOREST): 1}
    for t in f:
        nxt: dict = defaultdict(int)
        for (a1, a2), c in acc.items():
            for (b1, b2), d in _tree_coproduct(t).items():
                nxt[(a1 + b1, a2 + b2)] += c * d
        acc = dict(nxt)
    return acc


def coproduct(x: CKVector) -> Tensor:
    out = Tensor()
    for f, c in x.items():
        for k, m in _forest_coproduct(f).items():
            out._add_term(k, c * m)
    return out


@lru_cache(maxsize=None)
def _tree_antipode(t: Tree) -> CKVector:
    out = -CKVector.basis(Forest([t]))
    for cut, p, r in admissible_cuts(t):
        if not cut.edges:
            continue
        out = out - _forest_antipode(p) * CKVector.basis(Forest([r]))
    return out


@lru_cache(maxsize=None)
def _forest_antipode(f: Forest) -> CKVector:
    out = CKVector.one()
    for t in f:
        out = out * _tree_antipode(t)
    return out


def antipode(x: CKVector) -> CKVector:
    out = CKVector()
    for f, c in x.items():
        out = out + _forest_antipode(f).scale(c)
    return out


def basis(W, max_weight: int, min_weight: int = 0):
    return enumerate_forests(W, max_weight, min_weight)


def pairing(x: GLVector, c: CKVector) -> Fraction:
    """<T, F> = alpha(T) if T = B+(F), else 0, extended bilinearly."""
    if isinstance(x, Tree):
        x = GLVector.basis(x)
    if isinstance(c, (Forest, Tree)):
        c = CKVector.basis(c)
    total = Fraction(0)
    for f, b in c.items():
        t = Tree(0, f)
        a = x[t]
        if a:
            total += a * b * t.aut_order
    return total


def pairing_tensor(xs: Tensor, cs: Tensor) -> Fraction:
    """<x1 (x) x2, c1 (x) c2> = <x1, c1><x2, c2>, bilinearly."""
    total = Fraction(0)
    for (t1, t2), a in xs.items():
        for (f1, f2), b in cs.items():
            if Tree(0, f1) == t1 and Tree(0, f2) == t2:
                total += a * b * t1.aut_order * t2.aut_order
    return total

