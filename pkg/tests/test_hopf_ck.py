from __future__ import annotations

import itertools
import random

from hypothesis import given
from hypothesis import strategies as st

from treehopf import hopf_gl
from treehopf._vector import Tensor
from treehopf.hopf_axioms import verify_hopf
from treehopf.hopf_ck import CKVector, antipode, basis, ck, coproduct, counit, pairing, pairing_tensor
from treehopf.trees import EMPTY_FOREST, Forest, Tree, b_plus, chain, parse_forest, parse_tree

E = EMPTY_FOREST
o = Tree(1)
fo = Forest([o])


def test_product_is_union():
    x = ck("[(1) (2)]")
    assert CKVector.one() * x == x
    assert ck("(1)") * ck("(1)") == ck("[(1) (1)]")
    rnd = random.Random(3)
    forests = basis({1, 2}, 3)
    for _ in range(20):
        a, b = rnd.sample(forests, 2)
        assert ck(a) * ck(b) == ck(b) * ck(a)


def test_coproduct_examples():
    assert coproduct(ck(o)) == Tensor({(fo, E): 1, (E, fo): 1})
    two = Forest([chain(1, 1)])
    assert coproduct(ck(two)) == Tensor({(two, E): 1, (E, two): 1, (fo, fo): 1})
    assert coproduct(CKVector.one()) == Tensor({(E, E): 1})


def test_parse_and_format():
    x = ck("2*[(1) (1)] - (1 (1)) + []")
    assert x[parse_forest("(1) (1)")] == 2
    assert x[Forest([chain(1, 1)])] == -1
    assert counit(x) == 1
    assert CKVector.parse(str(x)) == x


def test_axiom_suites():
    assert verify_hopf("ck", {1}, 4)["ok"]
    assert verify_hopf("ck", {1, 2}, 3)["ok"]


def test_antipode_small():
    assert antipode(ck(o)) == -ck(o)
    # S(chain) = -chain + o o
    assert antipode(ck(chain(1, 1))) == -ck(chain(1, 1)) + ck("[(1) (1)]")


def test_pairing_examples():
    assert pairing(b_plus([o, o]), parse_forest("(1) (1)")) == 2
    assert pairing(b_plus([o]), parse_forest("(1) (1)")) == 0
    assert pairing(Tree(0), E) == 1


def duality_range():
    yield {1}, 4
    yield {1, 2}, 3


def test_product_coproduct_duality():
    for W, n in duality_range():
        trees = hopf_gl.basis(W, n)
        forests = basis(W, n)
        for x, y in itertools.product(trees, repeat=2):
            if x.weight + y.weight > n:
                continue
            xy = hopf_gl.gl(x) * hopf_gl.gl(y)
            for c in forests:
                if c.weight != x.weight + y.weight:
                    continue
                lhs = pairing(xy, ck(c))
                rhs = pairing_tensor(Tensor({(x, y): 1}), coproduct(ck(c)))
                assert lhs == rhs, (x, y, c)


def test_coproduct_product_duality():
    for W, n in duality_range():
        trees = hopf_gl.basis(W, n)
        forests = basis(W, n)
        for a, b in itertools.product(forests, repeat=2):
            if a.weight + b.weight > n:
                continue
            ab = ck(a) * ck(b)
            for x in trees:
                if x.weight != a.weight + b.weight:
                    continue
                lhs = pairing(hopf_gl.gl(x), ab)
                rhs = pairing_tensor(hopf_gl.coproduct(hopf_gl.gl(x)), Tensor({(a, b): 1}))
                assert lhs == rhs, (x, a, b)


def test_antipode_duality_and_grading():
    for W, n in duality_range():
        for x in hopf_gl.basis(W, n):
            for c in basis(W, n):
                lhs = pairing(hopf_gl.antipode(hopf_gl.gl(x)), ck(c))
                assert lhs == pairing(hopf_gl.gl(x), antipode(ck(c)))
                if x.weight != c.weight:
                    assert pairing(hopf_gl.gl(x), ck(c)) == 0


@given(st.lists(st.sampled_from(["(1)", "(2)", "(1 (1))", "(1 (2) (1))"]), max_size=3),
       st.lists(st.sampled_from(["(1)", "(2 (1))", "(1 (1 (1)))"]), max_size=3))
def test_coproduct_is_multiplicative(a, b):
    fa = Forest([parse_tree(t) for t in a])
    fb = Forest([parse_tree(t) for t in b])
    lhs = coproduct(ck(fa) * ck(fb))
    rhs = hopf_gl.tensor_mul(coproduct(ck(fa)), coproduct(ck(fb)), lambda p, q: {p + q: 1})
    assert lhs == rhs
