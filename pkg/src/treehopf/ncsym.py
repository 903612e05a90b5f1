"""Noncommutative symmetric functions and NCS systems over arbitrary algebras.

NSym is the free associative algebra on Lambda_1, Lambda_2, ...; elements are
combinations of words (tuples of subscripts).  An NCS system over an algebra
``A`` is a 5-tuple of t-series (f, g, d, h, m) satisfying

    f(0) = 1,  f(-t) g(t) = g(t) f(-t) = 1,  exp(d) = g,
    dg/dt = g h,  dg/dt = m g.

``verify_ncs`` checks these for any coefficient type supporting ``+``,
``*``, ``scale`` and ``==``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from treehopf._vector import LinearCombination, Tensor
from treehopf.hopf_gl import GLVector, V
from treehopf.hopf_gl import coproduct as gl_coproduct
from treehopf.orderpoly import theta
from treehopf.trees import Tree, enumerate_bar_trees


class WeightOverflow(ValueError):
    pass


class NSymElement(LinearCombination):
    """Combination of Lambda-words; ``(2, 1)`` is Lambda_2 Lambda_1."""

    __slots__ = ()

    def _mul_basis(self, a, b):
        return {a + b: 1}

    @classmethod
    def one(cls):
        return cls.basis(())

    @classmethod
    def L(cls, m: int):
        """Lambda_m (Lambda_0 = 1)."""
        return cls.basis(()) if m == 0 else cls.basis((m,))

    def weight(self) -> int:
        return max((sum(w) for w in self.keys()), default=0)

    def homogeneous(self, w):
        return NSymElement({k: c for k, c in self.items() if sum(k) == w})

    def __str__(self):
        ordered = NSymElement()
        for k in sorted(self.keys(), key=lambda w: (sum(w), len(w), tuple(-x for x in w))):
            ordered._terms[k] = self[k]
        return ordered.format(_fmt_word)


def _fmt_word(w, letter="L"):
    return ".".join(f"{letter}{i}" for i in w) if w else "1"


def compositions(m: int):
    """All compositions of m, as tuples."""
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in compositions(m - first):
            yield (first,) + rest


# ---------------------------------------------------------------------
# t-series over a host algebra

class TSeries:
    """Coefficient list c_0..c_N over a host algebra with a given unit and zero."""

    __slots__ = ("coeffs", "one", "zero")

    def __init__(self, coeffs, one, zero):
        self.coeffs = list(coeffs)
        self.one = one
        self.zero = zero

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.zero

    def _like(self, coeffs):
        return TSeries(coeffs, self.one, self.zero)

    def __add__(self, other):
        n = min(self.order, other.order)
        return self._like([self[k] + other[k] for k in range(n + 1)])

    def __sub__(self, other):
        n = min(self.order, other.order)
        return self._like([self[k] - other[k] for k in range(n + 1)])

    def scale(self, c):
        return self._like([x.scale(c) for x in self.coeffs])

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = self.zero
            for i in range(k + 1):
                acc = acc + self[i] * other[k - i]
            out.append(acc)
        return self._like(out)

    def t_negate(self):
        return self._like([x if k % 2 == 0 else x.scale(-1) for k, x in enumerate(self.coeffs)])

    def derivative(self):
        return self._like([self.coeffs[k].scale(k) for k in range(1, len(self.coeffs))])

    def unit(self):
        return self._like([self.one] + [self.zero] * self.order)

    def exp(self):
        """exp of a series with zero constant term."""
        out = self.unit()
        term = self.unit()
        for k in range(1, self.order + 1):
            term = (term * self).scale(Fraction(1, k))
            out = out + term
        return out

    def log(self):
        """log of a series with constant term 1."""
        y = self - self.unit()
        out = self._like([self.zero] * (self.order + 1))
        power = self.unit()
        for k in range(1, self.order + 1):
            power = power * y
            out = out + power.scale(Fraction((-1) ** (k + 1), k))
        return out


@dataclass
class NCSTuple:
    f: TSeries
    g: TSeries
    d: TSeries
    h: TSeries
    m: TSeries

    def components(self):
        return {"f": self.f, "g": self.g, "d": self.d, "h": self.h, "m": self.m}

    def map(self, fn):
        """Apply a host map coefficientwise (e.g. an algebra homomorphism)."""
        def conv(s):
            coeffs = [fn(c) for c in s.coeffs]
            return TSeries(coeffs, fn(s.one), fn(s.zero))

        return NCSTuple(*(conv(s) for s in self.components().values()))


@dataclass
class NCSReport:
    ok: bool
    checked_order: int
    failures: list = field(default_factory=list)

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None

    def as_dict(self):
        return {
            "ok": self.ok,
            "checked_order": self.checked_order,
            "failures": [{"equation": e, "order": k} for e, k in self.failures],
        }


def _first_mismatch(a: TSeries, b: TSeries, upto: int):
    for k in range(upto + 1):
        if not a[k] == b[k]:
            return k
    return None


def verify_ncs(omega: NCSTuple, N: int) -> NCSReport:
    """Check the five NCS identities through t^N, in a fixed order.

    The derivative identities need g up to t^{N+1}; with less data they are
    checked as far as the data reaches.
    """
    f, g, d, h, m = omega.f, omega.g, omega.d, omega.h, omega.m
    failures = []
    if not f[0] == f.one:
        failures.append(("f(0)=1", 0))
    top = min(N, f.order, g.order)
    fneg = f.t_negate()
    one = g.unit()
    for name, lhs in (("f(-t)g(t)=1", fneg * g), ("g(t)f(-t)=1", g * fneg)):
        k = _first_mismatch(lhs, one, top)
        if k is not None:
            failures.append((name, k))
            break
    top2 = min(N, d.order, g.order)
    if not d[0] == d.zero:
        failures.append(("exp(d)=g", 0))
    else:
        k = _first_mismatch(d.exp(), g, top2)
        if k is not None:
            failures.append(("exp(d)=g", k))
    dg = g.derivative()
    top3 = min(N, dg.order, h.order)
    k = _first_mismatch(dg, g * h, top3)
    if k is not None:
        failures.append(("g'=gh", k))
    top4 = min(N, dg.order, m.order)
    k = _first_mismatch(dg, m * g, top4)
    if k is not None:
        failures.append(("g'=mg", k))
    return NCSReport(not failures, N, failures)


# ---------------------------------------------------------------------
# the universal system in NSym

@dataclass
class NSymBases:
    max_weight: int
    S: list
    Phi: list
    Psi: list
    Xi: list


@lru_cache(maxsize=None)
def solve_bases(max_weight: int) -> NSymBases:
    """S, Phi, Psi, Xi in the Lambda basis up to ``max_weight`` (index 0 unused for Phi/Psi/Xi)."""
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    L = NSymElement.L
    one = NSymElement.one()
    zero = NSymElement()
    S = [one]
    for k in range(1, max_weight + 1):
        acc = NSymElement()
        for i in range(1, k + 1):
            acc = acc + (L(i) * S[k - i]).scale((-1) ** (i + 1))
        S.append(acc)
    sigma = TSeries(S, one, zero)
    logsig = sigma.log()
    Phi = [zero] + [logsig[k].scale(k) for k in range(1, max_weight + 1)]
    Psi = [zero]
    Xi = [zero]
    for k in range(1, max_weight + 1):
        p = S[k].scale(k)
        x = S[k].scale(k)
        for i in range(1, k):
            p = p - S[i] * Psi[k - i]
            x = x - Xi[k - i] * S[i]
        Psi.append(p)
        Xi.append(x)
    return NSymBases(max_weight, S, Phi, Psi, Xi)


def pi_tuple(N: int) -> NCSTuple:
    """(lambda, sigma, Phi, psi, xi) truncated at t^N (h, m one order lower)."""
    B = solve_bases(N + 1)
    one = NSymElement.one()
    zero = NSymElement()
    lam = [NSymElement.L(k) for k in range(N + 1)]
    f = TSeries(lam, one, zero)
    g = TSeries(B.S[: N + 1], one, zero)
    d = TSeries([zero] + [B.Phi[k].scale(Fraction(1, k)) for k in range(1, N + 1)], one, zero)
    h = TSeries([B.Psi[k] for k in range(1, N + 1)], one, zero)
    m = TSeries([B.Xi[k] for k in range(1, N + 1)], one, zero)
    return NCSTuple(f, g, d, h, m)


# -- Hopf structure: divided powers on Lambda ---------------------------

def _word_tensor_mul(x: Tensor, y: Tensor) -> Tensor:
    out = Tensor()
    for (a1, a2), c in x.items():
        for (b1, b2), d in y.items():
            out._add_term((a1 + b1, a2 + b2), c * d)
    return out


def coproduct(x: NSymElement, max_weight=None) -> Tensor:
    """Delta(Lambda_m) = sum_{i+j=m} Lambda_i (x) Lambda_j, extended multiplicatively."""
    _check_weight(x, max_weight)
    out = Tensor()
    for w, c in x.items():
        acc = Tensor({((), ()): 1})
        for a in w:
            acc = _word_tensor_mul(acc, Tensor({(_w(i), _w(a - i)): 1 for i in range(a + 1)}))
        out = out + acc.scale(c)
    return out


def _w(i):
    return () if i == 0 else (i,)


def _check_weight(x, max_weight):
    if max_weight is not None and x.weight() > max_weight:
        raise WeightOverflow(f"weight {x.weight()} exceeds {max_weight}")


def counit(x: NSymElement) -> Fraction:
    return x[()]


def antipode(x: NSymElement) -> NSymElement:
    """S(Lambda_m) = (-1)^m S_m, extended as an anti-morphism."""
    B = solve_bases(max(x.weight(), 1))
    out = NSymElement()
    for w, c in x.items():
        acc = NSymElement.one()
        for a in w:
            acc = B.S[a].scale((-1) ** a) * acc
        out = out + acc.scale(c)
    return out


# -- the Psi route -------------------------------------------------------

class PsiElement(NSymElement):
    """Combination of Psi-words (same word algebra, other generators)."""

    __slots__ = ()

    def __str__(self):
        return self.format(lambda w: _fmt_word(w, "P"))


def lambda_to_psi(max_weight: int):
    """Table m -> Lambda_m written in Psi-words, m <= max_weight."""
    B = solve_bases(max_weight)
    table = {}
    for m in range(1, max_weight + 1):
        psi = B.Psi[m]
        lead = psi[(m,)]
        rest = psi - NSymElement.basis((m,), lead)
        expr = PsiElement.basis((m,))
        for w, c in rest.items():
            expr = expr - _subst(w, table).scale(c)
        table[m] = expr.scale(1 / lead)
    return table


def _subst(word, table, cls=PsiElement):
    acc = cls.one()
    for a in word:
        acc = acc * table[a]
    return acc


def to_psi(x: NSymElement) -> PsiElement:
    table = lambda_to_psi(max(x.weight(), 1))
    out = PsiElement()
    for w, c in x.items():
        out = out + _subst(w, table).scale(c)
    return out


def from_psi(y: PsiElement) -> NSymElement:
    B = solve_bases(max(y.weight(), 1))
    out = NSymElement()
    for w, c in y.items():
        acc = NSymElement.one()
        for a in w:
            acc = acc * B.Psi[a]
        out = out + acc.scale(c)
    return out


def coproduct_via_psi(x: NSymElement) -> Tensor:
    """Delta with every Psi_m primitive, converted back to Lambda words."""
    y = to_psi(x)
    B = solve_bases(max(x.weight(), 1))
    out = Tensor()
    for w, c in y.items():
        for mask in range(1 << len(w)):
            left = tuple(a for i, a in enumerate(w) if mask >> i & 1)
            right = tuple(a for i, a in enumerate(w) if not mask >> i & 1)
            lx = _subst(left, B.Psi, NSymElement)
            rx = _subst(right, B.Psi, NSymElement)
            for a, ca in lx.items():
                for b, cb in rx.items():
                    out._add_term((a, b), c * ca * cb)
    return out


def antipode_via_psi(x: NSymElement) -> NSymElement:
    y = to_psi(x)
    out = PsiElement()
    for w, c in y.items():
        out._add_term(tuple(reversed(w)), c * (-1) ** len(w))
    return from_psi(out)


# ---------------------------------------------------------------------
# the tree system over H_GL

def _labels(W, N):
    return sorted(x for x in W if x <= N) or [min(W)]


def _bar_trees(W, N):
    return enumerate_bar_trees(_labels(W, N), N)


def is_shrub(t: Tree) -> bool:
    return all(not c.children for c in t.children)


def beta(t: Tree) -> int:
    """Leaf weight if t is a chain (other than the singleton), else 0."""
    if not t.children or not t.is_chain():
        return 0
    return t.leaf_label()


def gamma(t: Tree) -> int:
    """Label (vertex weight) of the root's only child if t is primitive, else 0."""
    return t.children[0].label if len(t.children) == 1 else 0


def omega_trees(W, N: int) -> NCSTuple:
    """Generating functions (f~, g~, d~, h~, m~) over H_GL up to weight N.

    f~ = sum_shrubs (-1)^{o(T)+|T|} t^{|T|} V_T, g~ = sum t^{|T|} V_T,
    d~ = sum theta_T t^{|T|} V_T, h~ = sum beta_T t^{|T|-1} V_T and
    m~ = sum gamma_T t^{|T|-1} V_T.
    """
    one = GLVector.one()
    zero = GLVector()
    f = [GLVector() for _ in range(N + 1)]
    g = [GLVector() for _ in range(N + 1)]
    d = [GLVector() for _ in range(N + 1)]
    h = [GLVector() for _ in range(N)]
    m = [GLVector() for _ in range(N)]
    for t in _bar_trees(W, N):
        w = t.weight
        v = V(t)
        g[w] = g[w] + v
        if is_shrub(t):
            f[w] = f[w] + v.scale((-1) ** (len(t.children) + w))
        th = theta(t)
        if th:
            d[w] = d[w] + v.scale(th)
        if w >= 1:
            if beta(t):
                h[w - 1] = h[w - 1] + v.scale(beta(t))
            if gamma(t):
                m[w - 1] = m[w - 1] + v.scale(gamma(t))
    return NCSTuple(*(TSeries(c, one, zero) for c in (f, g, d, h, m)))


def f_tilde_by_kappa(W, N: int) -> TSeries:
    """1 + sum_d (-1)^d/d! B+(kappa(-t)^d) with kappa(t) = sum_m t^m (m)."""
    one = GLVector.one()
    labels = _labels(W, N)
    coeffs = [GLVector() for _ in range(N + 1)]
    coeffs[0] = one
    for deg in range(1, N + 1):
        for ms in itertools.product(labels, repeat=deg):
            w = sum(ms)
            if w > N:
                continue
            sign = (-1) ** deg * (-1) ** w
            t = Tree(0, [Tree(x) for x in ms])
            coeffs[w] = coeffs[w] + GLVector.basis(t, Fraction(sign, math.factorial(deg)))
    return TSeries(coeffs, one, GLVector())


# -- specialisations -----------------------------------------------------

def specialize_T(x: NSymElement, W=None, N=None) -> GLVector:
    """T(Lambda_m) = t^m coefficient of f~, extended multiplicatively."""
    N = max(x.weight(), 1) if N is None else N
    if x.weight() > N:
        raise WeightOverflow(f"weight {x.weight()} exceeds {N}")
    W = range(1, N + 1) if W is None else W
    f = omega_trees(W, N).f
    out = GLVector()
    for w, c in x.items():
        acc = GLVector.one()
        for a in w:
            acc = acc * f[a]
        out = out + acc.scale(c)
    return out


def specialize_S(F, x: NSymElement, f_op=None):
    """S_F(Lambda_m) = t^m coefficient of the operator f(t), as a t-free LinearMap."""
    from treehopf.diffop import LinearMap, operator_f

    tr = F.trunc
    if x.weight() > tr.t_order:
        raise WeightOverflow(f"weight {x.weight()} exceeds t-order {tr.t_order}")
    f_op = operator_f(F) if f_op is None else f_op
    parts = [f_op.t_coefficient(k) for k in range(tr.t_order + 1)]
    out = LinearMap.zero(tr)
    for w, c in x.items():
        acc = LinearMap.identity(tr)
        for a in w:
            acc = acc * parts[a]
        out = out + acc.scale(c)
    return out


def verify_cd2(F, max_weight: int) -> dict:
    """Check S_F(Lambda_m) = A_F(T(Lambda_m)) for m <= max_weight."""
    from treehopf.diffop import apply_A, operator_f

    f_op = operator_f(F)
    results = []
    for k in range(1, max_weight + 1):
        x = NSymElement.L(k)
        lhs = specialize_S(F, x, f_op)
        rhs = apply_A(F, specialize_T(x, W=F.W or (1,), N=max_weight))
        results.append({"m": k, "ok": lhs == rhs})
    return {"ok": all(r["ok"] for r in results), "checks": results}


def omega_F(F, N: int) -> NCSTuple:
    """The NCS system of F as t-series of t-free operators through t^N.

    F is re-truncated at t-order N+1 so the derivative identities can be
    checked through t^N as well.
    """
    from treehopf.diffop import LinearMap, omega_operators

    Fx = F.with_orders(t_order=N + 1)
    ops = omega_operators(Fx)
    tr = Fx.trunc
    one = LinearMap.identity(tr)
    zero = LinearMap.zero(tr)
    return NCSTuple(*(TSeries(ops[k].t_coefficients(N + 1 if k in "fgd" else N), one, zero)
                      for k in "fgdhm"))


def injectivity_rank(m: int):
    """(rank of T on NSym_[m] in the tree basis, 2^(m-1)) with W = {1..m}."""
    import sympy

    W = range(1, m + 1)
    f = omega_trees(W, m).f
    rows = []
    cols = [t for t in _bar_trees(W, m) if t.weight == m]
    index = {t: i for i, t in enumerate(cols)}
    for comp in compositions(m):
        acc = GLVector.one()
        for a in comp:
            acc = acc * f[a]
        row = [0] * len(cols)
        for t, c in acc.items():
            row[index[t]] = c
        rows.append(row)
    rank = sympy.Matrix(rows).rank()
    return rank, 2 ** (m - 1)


def tensor_apply(x: Tensor, fn) -> Tensor:
    """(fn (x) fn)(x) for a linear fn returning LinearCombinations keyed by basis."""
    out = Tensor()
    for (a, b), c in x.items():
        for k1, c1 in fn(a).items():
            for k2, c2 in fn(b).items():
                out._add_term((k1, k2), c * c1 * c2)
    return out


def T_intertwines_coproduct(x: NSymElement, N=None) -> bool:
    N = max(x.weight(), 1) if N is None else N

    def T(word):
        return specialize_T(NSymElement.basis(word), N=N)

    return gl_coproduct(specialize_T(x, N=N)) == tensor_apply(coproduct(x), T)
