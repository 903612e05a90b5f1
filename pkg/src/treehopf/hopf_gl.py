"""The Grossman-Larson Hopf algebra of rooted trees with root label 0.

Basis elements are trees ``B+(T_1, ..., T_m)``.  The product ``T * S``
grafts every branch ``T_i`` of ``T`` onto a vertex of ``S`` in all
``v(S)^m`` ways; the unit is the singleton.
"""

from __future__ import annotations

import itertools
import re
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from treehopf._vector import LinearCombination, Tensor
from treehopf.trees import Tree, TreeSyntaxError, enumerate_bar_trees, format_tree, parse_tree

ONE = Tree(0)


def _graft(s: Tree, addrs, branches) -> Tree:
    """Attach ``branches[i]`` to the vertex of ``s`` at ``addrs[i]``."""
    extra = defaultdict(list)
    for a, b in zip(addrs, branches):
        extra[a].append(b)

    def build(t, addr):
        kids = [build(c, addr + (i,)) for i, c in enumerate(t.children)]
        return Tree(t.label, kids + extra.get(addr, []))

    return build(s, ())


def graft_all(branches, s: Tree) -> dict:
    """Sum over all ways of attaching each tree of ``branches`` to ``s``."""
    verts = [addr for addr, _ in s.vertices()]
    out: dict = defaultdict(int)
    for addrs in itertools.product(verts, repeat=len(branches)):
        out[_graft(s, addrs, branches)] += 1
    return dict(out)


@lru_cache(maxsize=None)
def _product(t: Tree, s: Tree) -> dict:
    if not t.children:
        return {s: 1}
    if not s.children and s.label == 0:
        return {t: 1}
    return graft_all(t.children, s)


class GLVector(LinearCombination):
    __slots__ = ()

    def _add_term(self, key, c):
        if not isinstance(key, Tree) or key.label != 0:
            raise ValueError(f"GL basis elements must have root label 0, got {key!r}")
        super()._add_term(key, c)

    def _mul_basis(self, a, b):
        return _product(a, b)

    @classmethod
    def one(cls):
        return cls.basis(ONE)

    @classmethod
    def parse(cls, text: str):
        """A sum of tree literals, e.g. ``(0 (1)) + 2*(0 (1) (1))``; see ``parse_vector``."""
        return parse_vector(text)

    def homogeneous(self, w: int):
        return GLVector({k: c for k, c in self.items() if k.weight == w})

    def max_weight(self) -> int:
        return max((k.weight for k in self.keys()), default=0)

    def __str__(self):
        return _sorted(self).format(format_tree)


def _sorted(v):
    out = type(v)()
    for k in sorted(v.keys()):
        out._terms[k] = v[k]
    return out


def gl(tree_or_text, c=1) -> GLVector:
    if isinstance(tree_or_text, str):
        return GLVector.parse(tree_or_text).scale(c)
    return GLVector.basis(tree_or_text, c)


def V(t: Tree) -> GLVector:
    """The normalised basis element T / alpha(T)."""
    return GLVector.basis(t, Fraction(1, t.aut_order))


def counit(x: GLVector) -> Fraction:
    return x[ONE]


def _subsets_split(children):
    m = len(children)
    for mask in range(1 << m):
        left = [children[i] for i in range(m) if mask >> i & 1]
        right = [children[i] for i in range(m) if not mask >> i & 1]
        yield Tree(0, left), Tree(0, right)


@lru_cache(maxsize=None)
def _coproduct(t: Tree) -> dict:
    out: dict = defaultdict(int)
    for a, b in _subsets_split(t.children):
        out[(a, b)] += 1
    return dict(out)


def coproduct(x: GLVector) -> Tensor:
    out = Tensor()
    for t, c in x.items():
        for k, m in _coproduct(t).items():
            out._add_term(k, c * m)
    return out


@lru_cache(maxsize=None)
def _antipode(t: Tree) -> GLVector:
    if t == ONE:
        return GLVector.one()
    out = -GLVector.basis(t)
    for (a, b), m in _coproduct(t).items():
        if a == ONE or b == ONE:
            continue
        out = out - (_antipode(a) * GLVector.basis(b)).scale(m)
    return out


def antipode(x: GLVector) -> GLVector:
    out = GLVector()
    for t, c in x.items():
        out = out + _antipode(t).scale(c)
    return out


class TreeSum(LinearCombination):
    """Formal combination of labelled trees (any root label)."""

    __slots__ = ()

    def __str__(self):
        return _sorted(self).format(format_tree)


def act(x: GLVector, t: Tree) -> TreeSum:
    """Module action of H_GL on trees: graft the branches of x onto t."""
    out = TreeSum()
    for s, c in x.items():
        for k, m in graft_all(s.children, t).items():
            out._add_term(k, c * m)
    return out


def tensor_mul(x: Tensor, y: Tensor, mul) -> Tensor:
    """Componentwise product on 2-fold tensors; ``mul(a, b)`` returns a dict."""
    out = Tensor()
    for (a1, a2), c in x.items():
        for (b1, b2), d in y.items():
            for k1, e1 in mul(a1, b1).items():
                for k2, e2 in mul(a2, b2).items():
                    out._add_term((k1, k2), c * d * e1 * e2)
    return out


def basis(W, max_weight: int, min_weight: int = 0):
    return enumerate_bar_trees(W, max_weight, min_weight)


def parse_terms(text: str):
    """Split ``c1*(tree) + c2*[forest] - ...`` into (coefficient, bracket, literal).

    Coefficients default to 1; ``[...]`` wraps a forest literal and ``[]``
    is the empty forest.
    """
    s = text.strip()
    out = []
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_HEAD.match(s, pos)
        if m.group(1):
            sign = -1 if m.group(1) == "-" else 1
        elif first:
            sign = 1
        else:
            raise TreeSyntaxError("expected '+' or '-'", pos)
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        pos = m.end()
        if pos >= len(s) or s[pos] not in "([":
            raise TreeSyntaxError("expected '(' or '['", pos)
        opener = s[pos]
        closer = "]" if opener == "[" else ")"
        depth = 0
        end = pos
        while end < len(s):
            if s[end] == opener:
                depth += 1
            elif s[end] == closer:
                depth -= 1
                if depth == 0:
                    break
            end += 1
        if end >= len(s):
            raise TreeSyntaxError(f"unbalanced {opener!r}", pos)
        body = s[pos:end + 1]
        out.append((sign * coeff, opener, body[1:-1] if opener == "[" else body))
        pos = end + 1
        first = False
    return out


_TERM_HEAD = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*")


def parse_vector(text: str) -> GLVector:
    out = GLVector()
    for c, kind, body in parse_terms(text):
        if kind == "[":
            raise TreeSyntaxError("GL elements are trees, not bracketed forests", 0)
        out._add_term(parse_tree(body), c)
    return out
