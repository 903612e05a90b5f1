from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from treehopf.hopf_axioms import check_axioms, gl_ops, verify_hopf
from treehopf.hopf_gl import (
    ONE,
    GLVector,
    TreeSum,
    V,
    act,
    antipode,
    basis,
    coproduct,
    counit,
    gl,
    tensor_mul,
    _product,
)
from treehopf._vector import Tensor
from treehopf.trees import Tree, aut_order, chain, descending_cut_chains, parse_tree

B1 = gl("(0 (1))")
B11 = gl("(0 (1) (1))")
B2chain = gl("(0 (1 (1)))")
BASIS4 = basis({1}, 4)


def rand_vec(rnd, trees, k=3):
    out = GLVector()
    for t in rnd.sample(trees, k):
        out = out + gl(t, Fraction(rnd.randint(-4, 4), rnd.randint(1, 3)))
    return out


def test_unit():
    rnd = random.Random(1)
    for _ in range(5):
        x = rand_vec(rnd, BASIS4)
        assert GLVector.one() * x == x
        assert x * GLVector.one() == x


def test_small_product():
    assert B1 * B1 == B11 + B2chain


def test_product_count_is_vertices_to_branches():
    # two branches onto a 3-vertex tree: 9 attachments in total
    s = parse_tree("(0 (1 (1)))")
    t = parse_tree("(0 (1) (1))")
    assert sum(_product(t, s).values()) == 9
    for (a, b) in itertools.product(BASIS4, repeat=2):
        if a.weight + b.weight <= 4 and a != ONE and b != ONE:
            assert sum(_product(a, b).values()) == b.size ** len(a.children)


def test_parse_and_format():
    x = GLVector.parse("2*(0 (1)) - 1/2*(0 (1) (1)) + (0)")
    assert x == gl(ONE) + B1.scale(2) - B11.scale(Fraction(1, 2))
    assert GLVector.parse(str(x)) == x
    with pytest.raises(ValueError):
        GLVector.parse("(1 (1))")


def test_coproduct_examples():
    for t in ["(0 (1))", "(0 (1 (1)))", "(0 (2 (1) (1)))"]:
        x = gl(t)
        assert coproduct(x) == Tensor({(parse_tree(t), ONE): 1, (ONE, parse_tree(t)): 1})
    d = coproduct(B11)
    b11 = parse_tree("(0 (1) (1))")
    b1 = parse_tree("(0 (1))")
    assert d == Tensor({(b11, ONE): 1, (b1, b1): 2, (ONE, b11): 1})
    assert coproduct(gl(ONE)) == Tensor({(ONE, ONE): 1})


def test_coproduct_term_count_and_grading():
    for t in basis({1, 2}, 4):
        d = coproduct(gl(t))
        assert sum(c for _, c in d.items()) == 2 ** len(t.children)
        assert all(a.weight + b.weight == t.weight for a, b in d.keys())


def test_cocommutative():
    for t in basis({1}, 5):
        d = coproduct(gl(t))
        assert d == d.map_keys(lambda k: {(k[1], k[0]): 1})


def test_antipode_examples():
    for t in ["(0 (1))", "(0 (1 (1)))"]:
        assert antipode(gl(t)) == -gl(t)
    assert antipode(GLVector.one()) == GLVector.one()
    for t in BASIS4:
        assert antipode(antipode(gl(t))) == gl(t)
        conv = GLVector()
        for (a, b), c in coproduct(gl(t)).items():
            conv = conv + (antipode(gl(a)) * gl(b)).scale(c)
        assert conv == GLVector.one().scale(counit(gl(t)))


def test_product_grading():
    for a, b in itertools.product(basis({1, 2}, 3), repeat=2):
        for k in (gl(a) * gl(b)).keys():
            assert k.weight == a.weight + b.weight


def test_bialgebra_compatibility():
    mul = lambda a, b: _product(a, b)
    for a, b in itertools.product(basis({1}, 3), repeat=2):
        if a.weight + b.weight > 3:
            continue
        lhs = coproduct(gl(a) * gl(b))
        rhs = tensor_mul(coproduct(gl(a)), coproduct(gl(b)), mul)
        assert lhs == rhs


def test_action_examples():
    t = parse_tree("(2 (1) (1))")
    assert act(GLVector.one(), t) == TreeSum({t: 1})
    assert act(B1, Tree(2)) == TreeSum({parse_tree("(2 (1))"): 1})


def test_module_law():
    trees = [t for t in basis({1}, 3)]
    targets = [Tree(1), chain(1, 1), chain(2, 1)]
    for a, b in itertools.product(trees, repeat=2):
        for t in targets:
            if a.weight + b.weight + t.weight > 5:
                continue
            lhs = act(gl(a) * gl(b), t)
            inner = act(gl(b), t)
            rhs = TreeSum()
            for s, c in inner.items():
                rhs = rhs + act(gl(a), s).scale(c)
            assert lhs == rhs


def test_axiom_suites():
    assert verify_hopf("gl", {1}, 4)["ok"]
    assert verify_hopf("gl", {1, 2}, 3)["ok"]


def test_axiom_checker_catches_a_broken_antipode():
    ops = gl_ops()
    ops.antipode = lambda x: x
    fails = check_axioms(ops, basis({1}, 2), 2)
    assert fails["antipode"]
    assert not fails["associativity"]


def test_products_along_cut_chains():
    # sum over pairs (T1, T2) of y1(T1) V(T1) * y2(T2) V(T2) equals the sum over
    # trees T and admissible cuts C of y1(B+(P_C)) y2(R_C) V(T), up to weight 5
    rnd = random.Random(7)
    trees = basis({1}, 5)
    y = {(i, t): Fraction(rnd.randint(-9, 9), rnd.randint(1, 5)) for i in (1, 2) for t in trees}
    lhs = GLVector()
    for t1, t2 in itertools.product(trees, repeat=2):
        if t1.weight + t2.weight <= 5:
            lhs = lhs + (V(t1) * V(t2)).scale(y[1, t1] * y[2, t2])
    rhs = GLVector()
    for t in trees:
        total = Fraction(0)
        for _, pieces in descending_cut_chains(t, 1):
            total += y[1, pieces[0]] * y[2, pieces[1]]
        rhs = rhs + V(t).scale(total)
    assert lhs == rhs


def test_V_normalisation():
    t = parse_tree("(0 (1) (1) (1))")
    assert V(t) == gl(t, Fraction(1, aut_order(t)))
