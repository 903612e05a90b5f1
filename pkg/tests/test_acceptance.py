"""Acceptance criteria 1-12.  Run with ``pytest tests/test_acceptance.py -v``;
the terminal summary prints one PASS/FAIL line per criterion."""

from __future__ import annotations

import itertools
import sys
import time

import pytest

from corpus import catalan_map, random_maps, small_random_map
from oracles import brute_tree_classes, catalan
from treehopf import hopf_ck, hopf_gl
from treehopf.diffop import (
    Derivation,
    LinearMap,
    apply_A,
    compose_power,
    d_log,
    exp_derivation,
    fixed_point_inverse,
    flow,
    log_map,
    mth_power,
    operator_g,
    separating_automorphism,
    tree_inverse,
)
from treehopf.hopf_axioms import verify_hopf
from treehopf.ncseries import NCSeries, SeriesVector
from treehopf.ncsym import (
    NSymElement,
    coproduct,
    coproduct_via_psi,
    compositions,
    injectivity_rank,
    omega_F,
    omega_trees,
    solve_bases,
    verify_cd2,
    verify_ncs,
)
from treehopf.orderpoly import (
    nabla_expansion,
    order_polynomial,
    strict_order_polynomial,
    theta,
    theta_by_recursion,
)
from treehopf.trees import b_minus, enumerate_bar_trees, enumerate_trees

from oracles import ahu, from_tree

CORPUS = random_maps(20)


@pytest.mark.criterion(1, "Catalan inversion, both backends, N = 8, < 5 s")
def test_criterion_01_catalan_inversion():
    start = time.perf_counter()
    F = catalan_map(8)
    backends = [fixed_point_inverse(F), tree_inverse(F)]
    elapsed = time.perf_counter() - start
    for G in backends:
        for k in range(9):
            want = NCSeries.monomial(F.trunc, (0,) * (k + 1), 0, catalan(k))
            assert G.t_coefficient(k)[0] == want
    assert [catalan(k) for k in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert elapsed < 5


@pytest.mark.criterion(2, "tree inverse equals fixed-point inverse on 20 random maps, < 60 s")
def test_criterion_02_oracle_equivalence():
    start = time.perf_counter()
    for F in CORPUS:
        assert F.trunc.nvars <= 3 and F.trunc.t_order == 5 and set(F.W) <= {1, 2, 3}
        assert tree_inverse(F) == fixed_point_inverse(F)
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(3, "D-Log exponentiates to F mod t^5; d(t) = -[a d/dz] = log g(t)")
def test_criterion_03_dlog():
    for F in CORPUS:
        a = d_log(F)
        assert exp_derivation(a).truncate_t(4) == F.F().truncate_t(4)
        assert log_map(operator_g(F)) == -Derivation(a).as_map()


@pytest.mark.criterion(4, "flow laws mod t^4 and second power of the Catalan map")
def test_criterion_04_flows():
    maps = [F.with_orders(t_order=3) for F in CORPUS[:5]] + [small_random_map(11, N=3, Dz=4)]
    for F in maps:
        z = SeriesVector.identity(F.trunc)
        assert flow(F, 0) == z
        assert flow(F, 1) == F.F()
        assert flow(F, -1) == fixed_point_inverse(F)
        for s1, s2 in itertools.product([-1, 0, 1, 2], repeat=2):
            assert flow(F, s1).substitute(flow(F, s2)) == flow(F, s1 + s2)
    C = catalan_map(3, 4)
    assert mth_power(C, 2) == compose_power(C, 2)


@pytest.mark.criterion(5, "order polynomial suite, W = {1}, weight <= 6")
def test_criterion_05_order_polynomials():
    for t in enumerate_trees({1}, 6):
        p = order_polynomial(t)
        assert p(1) == 1
        assert strict_order_polynomial(t) == p.negate_s().scale((-1) ** t.size)
        assert p.nabla() == order_polynomial(b_minus(t))
    for t in enumerate_bar_trees({1}, 6):
        if len(t.children) == 1:
            assert theta_by_recursion(t) == theta(t)
            if t.weight <= 5:
                assert nabla_expansion(t) == order_polynomial(b_minus(t))


@pytest.mark.criterion(6, "tree class counts 1, 1, 2, 4, 9, 20, 48 against brute force")
def test_criterion_06_enumeration():
    trees = enumerate_trees({1}, 7)
    counts = []
    for w in range(1, 8):
        mine = {ahu(*from_tree(t)) for t in trees if t.weight == w}
        assert mine == brute_tree_classes({1}, w)
        counts.append(sum(1 for t in trees if t.weight == w))
    assert counts == [1, 1, 2, 4, 9, 20, 48]


@pytest.mark.criterion(7, "GL and CK Hopf axioms and duality pairing")
def test_criterion_07_hopf():
    for W, n in (({1}, 4), ({1, 2}, 3)):
        for algebra in ("gl", "ck"):
            res = verify_hopf(algebra, W, n)
            assert res["ok"], (algebra, W, res["failures"])
        trees = hopf_gl.basis(W, n)
        forests = hopf_ck.basis(W, n)
        for x, y in itertools.product(trees, repeat=2):
            if x.weight + y.weight > n:
                continue
            xy = hopf_gl.gl(x) * hopf_gl.gl(y)
            for c in forests:
                if c.weight == x.weight + y.weight:
                    rhs = hopf_ck.pairing_tensor(hopf_ck.Tensor({(x, y): 1}), hopf_ck.coproduct(hopf_ck.ck(c)))
                    assert hopf_ck.pairing(xy, hopf_ck.ck(c)) == rhs
        for a, b in itertools.product(forests, repeat=2):
            if a.weight + b.weight > n:
                continue
            ab = hopf_ck.ck(a) * hopf_ck.ck(b)
            for x in trees:
                if x.weight == a.weight + b.weight:
                    rhs = hopf_ck.pairing_tensor(hopf_gl.coproduct(hopf_gl.gl(x)), hopf_ck.Tensor({(a, b): 1}))
                    assert hopf_ck.pairing(hopf_gl.gl(x), ab) == rhs


@pytest.mark.criterion(8, "NCS systems: trees mod weight 5, ten random maps mod t^4")
def test_criterion_08_ncs():
    rep = verify_ncs(omega_trees({1}, 5), 5)
    assert rep.ok, rep.failures
    for seed in range(10):
        F = small_random_map(100 + seed, N=4, Dz=3)
        rep = verify_ncs(omega_F(F, 3), 3)
        assert rep.ok, (seed, rep.failures)


@pytest.mark.criterion(9, "A is multiplicative; A(tree system) = operator system; S = A o T")
def test_criterion_09_homomorphisms():
    F = small_random_map(21, N=4, Dz=4, W=(1,))
    trees = hopf_gl.basis({1}, 4)
    for x, y in itertools.product(trees, repeat=2):
        if x.weight + y.weight <= 4:
            xy = hopf_gl.gl(x) * hopf_gl.gl(y)
            assert apply_A(F, xy) == apply_A(F, hopf_gl.gl(x)) * apply_A(F, hopf_gl.gl(y))
    N = 4
    G = small_random_map(17, N=N, Dz=3)
    target = omega_F(G, N)
    Gx = G.with_orders(t_order=N + 1)
    mapped = omega_trees(G.W, N).map(lambda v: apply_A(Gx, v))
    for name, s in mapped.components().items():
        for k in range(N):
            assert s[k] == target.components()[name][k], (name, k)
    assert verify_cd2(G, 4)["ok"]


@pytest.mark.criterion(10, "NCSF bases solved to weight 6; Lambda and Psi coproducts agree")
def test_criterion_10_nsym():
    L = NSymElement.L
    B = solve_bases(6)
    assert B.S[2] == L(1) * L(1) - L(2)
    for basis in (B.Psi, B.Phi, B.Xi):
        assert basis[2] == L(1) * L(1) - L(2).scale(2)
    for k in range(1, 7):
        for basis in (B.S, B.Phi, B.Psi, B.Xi):
            assert basis[k] and basis[k] == basis[k].homogeneous(k)
    for m in range(5):
        for c in compositions(m):
            x = NSymElement.basis(c)
            assert coproduct(x) == coproduct_via_psi(x)


@pytest.mark.criterion(11, "rank of T on NSym_[m] is 2^(m-1) for m = 1..4")
def test_criterion_11_injectivity():
    for m in range(1, 5):
        rank, expected = injectivity_rank(m)
        assert rank == expected == 2 ** (m - 1)


@pytest.mark.criterion(12, "separating automorphisms for all trees of weight <= 4 over {1, 2}")
def test_criterion_12_separation():
    trees = enumerate_trees({1, 2}, 4)
    for t in trees:
        F = separating_automorphism(t, t_order=4)
        assert not F.P(t).is_zero(), t
        for other in trees:
            if other.weight >= t.weight and other != t:
                assert F.P(other).is_zero(), (t, other)


def test_identity_operator_has_no_dlog():
    # guards criterion 3 against a vacuous pass
    assert any(not d_log(F).is_zero() for F in CORPUS)
    assert LinearMap.identity(CORPUS[0].trunc) == LinearMap.identity(CORPUS[0].trunc)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
