"""Labeled rooted trees in canonical form.

A tree is stored with its children sorted by a recursive total order
``(weight, vertex count, label, children)``, so two trees are isomorphic
(root- and label-preserving) exactly when they compare equal.  Root label
``0`` marks the elements of the Grossman-Larson basis ``B+(forest)``.

Edges are addressed by the child-index path (in canonical order) from the
root to the lower endpoint of the edge.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache


class InvalidLabelError(ValueError):
    pass


class TreeSyntaxError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class Tree:
    __slots__ = ("label", "children", "weight", "size", "_key", "_hash")

    def __init__(self, label: int, children=()):
        label = int(label)
        if label < 0:
            raise InvalidLabelError(f"negative label {label}")
        kids = []
        for c in children:
            if not isinstance(c, Tree):
                c = canonicalize(c, root=False)
            elif c.label == 0:
                raise InvalidLabelError("label 0 is only allowed at the root")
            kids.append(c)
        kids.sort(key=_sort_key)
        self.label = label
        self.children = tuple(kids)
        self.weight = label + sum(c.weight for c in kids)
        self.size = 1 + sum(c.size for c in kids)
        self._key = (self.weight, self.size, label, tuple(c._key for c in kids))
        self._hash = hash(self._key)

    # identity is structural
    def __eq__(self, other):
        return isinstance(other, Tree) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __repr__(self):
        return f"Tree{format_tree(self)}"

    def __str__(self):
        return format_tree(self)

    @property
    def key(self):
        return self._key

    @property
    def aut_order(self) -> int:
        return aut_order(self)

    @property
    def height(self) -> int:
        return 0 if not self.children else 1 + max(c.height for c in self.children)

    @property
    def root_degree(self) -> int:
        """o(T): number of children of the root."""
        return len(self.children)

    def is_primitive(self) -> bool:
        return len(self.children) == 1

    def is_chain(self) -> bool:
        t = self
        while t.children:
            if len(t.children) > 1:
                return False
            t = t.children[0]
        return True

    def is_shrub(self) -> bool:
        """Height at most one (the singleton counts as the empty shrub)."""
        return all(not c.children for c in self.children)

    def leaf_label(self) -> int:
        t = self
        while t.children:
            t = t.children[0]
        return t.label

    def relabel_root(self, label: int) -> Tree:
        return Tree(label, self.children)

    def shape(self) -> Tree:
        """Underlying unlabeled tree (every label set to 1, root included)."""
        return _shape(self)

    def labels(self):
        yield self.label
        for c in self.children:
            yield from c.labels()

    def vertices(self):
        """Yield (address, subtree) pairs in preorder."""
        stack = [((), self)]
        while stack:
            addr, t = stack.pop()
            yield addr, t
            for i in range(len(t.children) - 1, -1, -1):
                stack.append((addr + (i,), t.children[i]))

    def edges(self):
        return [addr for addr, _ in self.vertices() if addr]

    def subtree(self, addr) -> Tree:
        t = self
        for i in addr:
            t = t.children[i]
        return t


def _sort_key(t: Tree):
    return t._key


@lru_cache(maxsize=None)
def _shape(t: Tree) -> Tree:
    return Tree(1, [_shape(c) for c in t.children])


class Forest(tuple):
    """A multiset of trees, stored as a canonically sorted tuple."""

    def __new__(cls, trees=()):
        trees = list(trees)
        for t in trees:
            if not isinstance(t, Tree):
                raise TypeError(f"forest members must be trees, got {t!r}")
            if t.label == 0:
                raise InvalidLabelError("forest trees cannot carry root label 0")
        return super().__new__(cls, sorted(trees, key=_sort_key))

    @property
    def weight(self) -> int:
        return sum(t.weight for t in self)

    @property
    def size(self) -> int:
        return sum(t.size for t in self)

    def __add__(self, other):
        return Forest(list(self) + list(other))

    def __repr__(self):
        return f"Forest({format_forest(self)!r})"

    def __str__(self):
        return format_forest(self)


EMPTY_FOREST = Forest()


def canonicalize(raw, root: bool = True) -> Tree:
    """Canonical form of a raw tree ``(label, [children...])``.

    ``raw`` may also be a ``Tree`` (re-validated) or a tree literal string.
    """
    if isinstance(raw, str):
        return parse_tree(raw)
    if isinstance(raw, Tree):
        t = raw
    else:
        label, *rest = raw
        kids = rest[0] if rest else ()
        t = Tree(label, [canonicalize(c, root=False) for c in kids])
    if not root and t.label == 0:
        raise InvalidLabelError("label 0 is only allowed at the root")
    return t


def singleton(label: int = 0) -> Tree:
    return Tree(label)


def chain(*labels: int) -> Tree:
    """Chain with the given labels, root first."""
    t = None
    for lab in reversed(labels):
        t = Tree(lab, [] if t is None else [t])
    return t


def b_plus(forest=(), root_label: int = 0) -> Tree:
    if isinstance(forest, Tree):
        forest = (forest,)
    return Tree(root_label, forest)


def b_minus(tree: Tree) -> Forest:
    if tree is None:
        raise ValueError("B- is undefined on the empty tree")
    return Forest(tree.children)


@lru_cache(maxsize=None)
def aut_order(t: Tree) -> int:
    out = 1
    for child, mult in Counter(t.children).items():
        out *= math.factorial(mult) * aut_order(child) ** mult
    return out


def forest_aut_order(f) -> int:
    return aut_order(Tree(0, f))


# ---------------------------------------------------------------------
# literal grammar:  tree ::= '(' label tree* ')'   forest ::= tree*

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+))")


def _tokens(text):
    pos = 0
    out = []
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip():
                raise TreeSyntaxError(f"unexpected {rest.strip()[0]!r}", pos + len(rest) - len(rest.lstrip()))
            break
        kind = "(" if m.group(1) else ")" if m.group(2) else "n"
        out.append((kind, m.group(3), m.start(m.lastindex)))
        pos = m.end()
    return out


def _parse_trees(text):
    toks = _tokens(text)
    i = 0

    def parse_one(is_root):
        nonlocal i
        kind, _, pos = toks[i]
        if kind != "(":
            raise TreeSyntaxError("expected '('", pos)
        i += 1
        if i >= len(toks) or toks[i][0] != "n":
            raise TreeSyntaxError("expected label", toks[i][2] if i < len(toks) else len(text))
        label = int(toks[i][1])
        if label == 0 and not is_root:
            raise InvalidLabelError(f"label 0 is only allowed at the root (position {toks[i][2]})")
        i += 1
        kids = []
        while i < len(toks) and toks[i][0] == "(":
            kids.append(parse_one(False))
        if i >= len(toks) or toks[i][0] != ")":
            raise TreeSyntaxError("expected ')'", toks[i][2] if i < len(toks) else len(text))
        i += 1
        return Tree(label, kids)

    trees = []
    while i < len(toks):
        trees.append(parse_one(True))
    return trees


def parse_tree(text: str) -> Tree:
    trees = _parse_trees(text)
    if len(trees) != 1:
        raise TreeSyntaxError(f"expected exactly one tree, found {len(trees)}", 0)
    return trees[0]


def parse_forest(text: str) -> Forest:
    """Whitespace-separated trees; empty text or ``()`` is the empty forest."""
    if text.strip() == "()":
        return EMPTY_FOREST
    return Forest(_parse_trees(text))


def format_tree(t: Tree) -> str:
    if not t.children:
        return f"({t.label})"
    return f"({t.label} " + " ".join(format_tree(c) for c in t.children) + ")"


def format_forest(f) -> str:
    return " ".join(format_tree(t) for t in f) if f else "()"


# ---------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def _trees_of_weight(labels: tuple, w: int) -> tuple:
    out = []
    for lab in labels:
        if lab <= w:
            for f in _forests_of_weight(labels, w - lab, None):
                out.append(Tree(lab, f))
    return tuple(sorted(out, key=_sort_key))


@lru_cache(maxsize=None)
def _forests_of_weight(labels: tuple, w: int, bound) -> tuple:
    """Forests of weight exactly w as sorted tuples whose largest tree <= bound."""
    if w == 0:
        return ((),)
    out = []
    for tw in range(1, w + 1):
        for t in _trees_of_weight(labels, tw):
            if bound is not None and bound < t._key:
                continue
            for rest in _forests_of_weight(labels, w - tw, t._key):
                out.append(rest + (t,))
    return tuple(out)


def _labels(W) -> tuple:
    labs = tuple(sorted(set(int(x) for x in W)))
    if not labs or labs[0] <= 0:
        raise InvalidLabelError("label set W must be a nonempty set of positive integers")
    return labs


def enumerate_trees(W, max_weight: int, min_weight: int = 1) -> list[Tree]:
    """One representative per isomorphism class of W-labeled trees, by weight."""
    labs = _labels(W)
    out = []
    for w in range(max(1, min_weight), max_weight + 1):
        out.extend(_trees_of_weight(labs, w))
    return out


def enumerate_forests(W, max_weight: int, min_weight: int = 0) -> list[Forest]:
    labs = _labels(W)
    out = []
    for w in range(min_weight, max_weight + 1):
        out.extend(Forest(f) for f in _forests_of_weight(labs, w, None))
    return out


def enumerate_bar_trees(W, max_weight: int, min_weight: int = 0) -> list[Tree]:
    """Trees ``B+(F)`` with root label 0, i.e. the Grossman-Larson basis."""
    return [Tree(0, f) for f in enumerate_forests(W, max_weight, min_weight)]


# ---------------------------------------------------------------------
# cuts

@dataclass(frozen=True)
class Cut:
    edges: frozenset

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))


def is_admissible(edges) -> bool:
    """No two edges on one root-to-leaf path (no address prefixes another)."""
    es = list(edges)
    for a, b in itertools.combinations(es, 2):
        short, long_ = (a, b) if len(a) <= len(b) else (b, a)
        if long_[: len(short)] == short:
            return False
    return True


# A raw tree keeps original edge addresses through repeated cutting:
# (label, address, (raw children...)).

def _raw(t: Tree, addr=()):
    return (t.label, addr, tuple(_raw(c, addr + (i,)) for i, c in enumerate(t.children)))


def _canon(raw) -> Tree:
    return Tree(raw[0], [_canon(c) for c in raw[2]])


def _raw_cuts(raw):
    """All admissible cuts of a raw tree: (edges, pieces, remainder)."""
    label, addr, kids = raw
    options = []
    for child in kids:
        opts = [(frozenset([child[1]]), (child,), None)]
        for es, pieces, rem in _raw_cuts(child):
            opts.append((es, pieces, rem))
        options.append(opts)
    out = []
    for combo in itertools.product(*options):
        es = frozenset().union(*(c[0] for c in combo)) if combo else frozenset()
        pieces = tuple(p for c in combo for p in c[1])
        rem_kids = tuple(c[2] for c in combo if c[2] is not None)
        out.append((es, pieces, (label, addr, rem_kids)))
    return out


def admissible_cuts(t: Tree):
    """All admissible cuts (empty cut first) as (Cut, P_C forest, R_C tree)."""
    out = []
    for es, pieces, rem in _raw_cuts(_raw(t)):
        out.append((Cut(es), Forest(_canon(p) for p in pieces), _canon(rem)))
    out.sort(key=lambda x: (len(x[0].edges), sorted(x[0].edges)))
    return out


def descending_cut_chains(t: Tree, r: int, single_edge_only: bool = False):
    """Chains C_1 > ... > C_r with their pieces.

    Each result is ``(cuts, pieces)`` where ``pieces`` has r+1 entries:
    ``B+(P_{C_i}(S_{i-1}))`` for i <= r and the final remainder ``S_r``
    (which keeps the root label of ``t``).  Edge addresses refer to ``t``.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    out = []

    def rec(raw, depth, cuts, pieces):
        if depth == r:
            out.append((tuple(cuts), tuple(pieces) + (_canon(raw),)))
            return
        cands = _raw_cuts(raw)
        if single_edge_only:
            cands = [c for c in cands if len(c[0]) == 1]
        for es, ps, rem in cands:
            rec(rem, depth + 1, cuts + [Cut(es)], pieces + [Tree(0, [_canon(p) for p in ps])])

    rec(_raw(t), 0, [], [])
    return out
