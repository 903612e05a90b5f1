"""Derivations and differential operators on truncated series, formal
automorphisms ``F_t = z - H_t(z)`` and their tree expansions.

Operators are evaluated extensionally: a ``LinearMap`` stores the image of
every basis word of length <= D.  Operators are Q[t]-linear, and products
are compositions with the right factor applied first.
"""

from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from pathlib import Path

from treehopf._vector import as_fraction
from treehopf.hopf_gl import GLVector
from treehopf.ncseries import (
    NCSeries,
    SeriesVector,
    Truncation,
    TruncationMismatch,
    parse_series,
)
from treehopf.orderpoly import order_polynomial, varphi
from treehopf.trees import Tree, enumerate_trees


class InvalidAutomorphism(ValueError):
    pass


# ---------------------------------------------------------------------
# letter replacement, the common core of derivations and B+

def _by_length(u: NCSeries):
    """Terms of u as (len(word), t-power, word, coeff), shortest first."""
    return sorted(((len(v), j, v, d) for (v, j), d in u.terms.items()), key=lambda x: x[:2])


def _replace_word(tr: Truncation, word, k, c, repl, out: NCSeries):
    """Add c t^k * (word with letter at each position p in repl replaced by repl[p]).

    ``repl[p]`` comes from ``_by_length`` of a series without constant term,
    so lengths never shrink.
    """
    D, N = tr.z_degree, tr.t_order
    ell = len(word)
    partial = {((), k): c}
    for p, letter in enumerate(word):
        rest = ell - p - 1
        items = repl.get(p)
        nxt: dict = {}
        if items is None:
            for (w, kk), cc in partial.items():
                if len(w) + 1 + rest <= D:
                    key = (w + (letter,), kk)
                    nxt[key] = nxt.get(key, 0) + cc
        else:
            for (w, kk), cc in partial.items():
                room = D - rest - len(w)
                for lv, j, v, d in items:
                    if lv > room:
                        break
                    if kk + j <= N:
                        key = (w + v, kk + j)
                        nxt[key] = nxt.get(key, 0) + cc * d
        partial = nxt
        if not partial:
            return
    for (w, kk), cc in partial.items():
        out._add(w, kk, cc)


class Derivation:
    """The derivation [u d/dz] sending z_i to u[i]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = SeriesVector(coeffs)
        for i, c in enumerate(coeffs):
            if c.order() == 0:
                raise ValueError(f"derivation coefficient {i + 1} has a constant term")
        self.coeffs = coeffs

    @property
    def trunc(self):
        return self.coeffs.trunc

    def __call__(self, u: NCSeries) -> NCSeries:
        return apply_derivation(self, u)

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        return Derivation(self.coeffs + other.coeffs)

    def scale(self, c):
        return Derivation(self.coeffs.scale(c))

    def is_zero(self):
        return self.coeffs.is_zero()

    def as_map(self) -> LinearMap:
        return LinearMap.from_function(self.trunc, lambda w: apply_derivation(self, w))

    def __repr__(self):
        return f"Derivation({self.coeffs.format()})"


def _as_word_series(tr, u):
    if isinstance(u, NCSeries):
        return u
    return NCSeries.monomial(tr, u)


def apply_derivation(delta: Derivation, u) -> NCSeries:
    tr = delta.trunc
    u = _as_word_series(tr, u)
    if u.trunc != tr:
        raise TruncationMismatch(f"{u.trunc} vs {tr}")
    out = NCSeries(tr)
    coeffs = [_by_length(x) for x in delta.coeffs]
    for (w, k), c in u.terms.items():
        for p, letter in enumerate(w):
            _replace_word(tr, w, k, c, {p: coeffs[letter]}, out)
    return out


def collapse(phi, delta: Derivation) -> Derivation:
    """phi |> delta: apply the operator phi to every coefficient of delta."""
    return Derivation(SeriesVector(phi(c) for c in delta.coeffs))


def b_plus_apply(derivs, u) -> NCSeries:
    """B+(d_1..d_m) u: sum over injective placements of the d_j on letter positions."""
    derivs = list(derivs)
    if not derivs:
        return u.copy()
    tr = derivs[0].trunc
    u = _as_word_series(tr, u)
    out = NCSeries(tr)
    m = len(derivs)
    coeffs = [[_by_length(x) for x in d.coeffs] for d in derivs]
    for (w, k), c in u.terms.items():
        for pos in itertools.permutations(range(len(w)), m):
            repl = {p: cs[w[p]] for p, cs in zip(pos, coeffs)}
            _replace_word(tr, w, k, c, repl, out)
    return out


def b_plus_power(delta: Derivation, k: int, u) -> NCSeries:
    """B+(delta, ..., delta) / k!  (k copies): one placement per k-subset."""
    tr = delta.trunc
    u = _as_word_series(tr, u)
    out = NCSeries(tr)
    coeffs = [_by_length(x) for x in delta.coeffs]
    for (w, j), c in u.terms.items():
        for pos in itertools.combinations(range(len(w)), k):
            _replace_word(tr, w, j, c, {p: coeffs[w[p]] for p in pos}, out)
    return out


# ---------------------------------------------------------------------
# operators as materialised linear maps

class LinearMap:
    __slots__ = ("trunc", "images")

    def __init__(self, trunc: Truncation, images: dict):
        self.trunc = trunc
        self.images = images

    @classmethod
    def from_function(cls, trunc, fn):
        return cls(trunc, {w: fn(NCSeries.monomial(trunc, w)) for w in trunc.words()})

    @classmethod
    def identity(cls, trunc):
        return cls(trunc, {w: NCSeries.monomial(trunc, w) for w in trunc.words()})

    @classmethod
    def zero(cls, trunc):
        return cls(trunc, {w: NCSeries(trunc) for w in trunc.words()})

    def __call__(self, u: NCSeries) -> NCSeries:
        if u.trunc != self.trunc:
            raise TruncationMismatch(f"{u.trunc} vs {self.trunc}")
        out = NCSeries(self.trunc)
        top = self.trunc.t_order
        for (w, k), c in u.terms.items():
            for (w2, k2), c2 in self.images[w].terms.items():
                if k + k2 <= top:
                    out._add(w2, k + k2, c * c2)
        return out

    def _map(self, fn):
        return LinearMap(self.trunc, {w: fn(s) for w, s in self.images.items()})

    def __add__(self, other):
        return LinearMap(self.trunc, {w: s + other.images[w] for w, s in self.images.items()})

    def __sub__(self, other):
        return LinearMap(self.trunc, {w: s - other.images[w] for w, s in self.images.items()})

    def __neg__(self):
        return self._map(lambda s: -s)

    def scale(self, c):
        return self._map(lambda s: s.scale(c))

    def __mul__(self, other):
        if isinstance(other, LinearMap):
            return LinearMap(self.trunc, {w: self(s) for w, s in other.images.items()})
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, LinearMap):
            return self.trunc == other.trunc and all(
                s == other.images[w] for w, s in self.images.items()
            )
        if other == 0:
            return all(not s for s in self.images.values())
        return NotImplemented

    __hash__ = None

    def t_shift(self, k):
        return self._map(lambda s: s.t_shift(k))

    def t_coefficient(self, k):
        return self._map(lambda s: s.t_coefficient(k))

    def t_negate(self):
        return self._map(lambda s: s.t_negate())

    def t_derivative(self):
        return self._map(lambda s: s.t_derivative())

    def truncate_t(self, n):
        return self._map(lambda s: s.truncate_t(n))

    def t_coefficients(self, n=None):
        n = self.trunc.t_order if n is None else n
        return [self.t_coefficient(k) for k in range(n + 1)]

    def first_difference(self, other):
        """First basis word (shortest first) on which two maps differ, else None."""
        for w in self.trunc.words():
            if self.images[w] != other.images[w]:
                return w
        return None


def exp_map(x: LinearMap) -> LinearMap:
    """exp(x) for an operator with no t^0 part."""
    tr = x.trunc
    out = LinearMap.identity(tr)
    term = LinearMap.identity(tr)
    for k in range(1, tr.t_order + 1):
        term = (x * term).scale(Fraction(1, k))
        out = out + term
    return out


def log_map(g: LinearMap) -> LinearMap:
    """log(g) = sum (-1)^{k+1} (g-1)^k / k for g with t^0 part the identity."""
    tr = g.trunc
    y = g - LinearMap.identity(tr)
    out = LinearMap.zero(tr)
    power = LinearMap.identity(tr)
    for k in range(1, tr.t_order + 1):
        power = y * power
        out = out + power.scale(Fraction((-1) ** (k + 1), k))
    return out


# ---------------------------------------------------------------------
# operator expressions

class DiffOperator:
    """Symbolic operator; ``materialize`` gives the LinearMap at a truncation."""

    def materialize(self, trunc) -> LinearMap:
        raise NotImplementedError

    def __call__(self, u: NCSeries) -> NCSeries:
        return self.materialize(u.trunc)(u)

    def __mul__(self, other):
        return Compose([self, other])

    def __add__(self, other):
        return LinComb([(1, self), (1, other)])


class Identity(DiffOperator):
    def materialize(self, trunc):
        return LinearMap.identity(trunc)

    def __call__(self, u):
        return u.copy()


class Deriv(DiffOperator):
    def __init__(self, delta: Derivation):
        self.delta = delta

    def materialize(self, trunc):
        return self.delta.as_map()

    def __call__(self, u):
        return apply_derivation(self.delta, u)


class BPlusNode(DiffOperator):
    def __init__(self, derivs):
        self.derivs = list(derivs)

    def materialize(self, trunc):
        return LinearMap.from_function(trunc, lambda w: b_plus_apply(self.derivs, w))

    def __call__(self, u):
        return b_plus_apply(self.derivs, u)


class Compose(DiffOperator):
    def __init__(self, ops):
        self.ops = list(ops)

    def materialize(self, trunc):
        out = LinearMap.identity(trunc)
        for op in self.ops:
            out = out * op.materialize(trunc)
        return out

    def __call__(self, u):
        for op in reversed(self.ops):
            u = op(u)
        return u


class LinComb(DiffOperator):
    """sum c_i * op_i with c_i rational or a t-polynomial given as a t-free-word NCSeries."""

    def __init__(self, terms):
        self.terms = list(terms)

    def materialize(self, trunc):
        out = LinearMap.zero(trunc)
        for c, op in self.terms:
            m = op.materialize(trunc)
            out = out + (_t_scale(m, c) if isinstance(c, NCSeries) else m.scale(c))
        return out

    def __call__(self, u):
        out = NCSeries(u.trunc)
        for c, op in self.terms:
            v = op(u)
            out = out + (c * v if isinstance(c, NCSeries) else v.scale(c))
        return out


def _t_scale(m: LinearMap, poly: NCSeries) -> LinearMap:
    return LinearMap(m.trunc, {w: poly * s for w, s in m.images.items()})


# ---------------------------------------------------------------------
# automorphisms

class Automorphism:
    """F_t = z - H_t(z) with H_t = sum_{m in W} t^m H_[m], each H_[m] t-free."""

    def __init__(self, trunc: Truncation, components: dict, alpha: int = 1, names=None):
        self.trunc = trunc
        self.alpha = int(alpha)
        self.names = list(names) if names else [f"z{i + 1}" for i in range(trunc.nvars)]
        comps = {}
        for m, vec in components.items():
            m = int(m)
            if m < 1:
                raise InvalidAutomorphism(f"t-power {m} must be positive")
            vec = SeriesVector(vec).retruncate(trunc)
            if len(vec) != trunc.nvars:
                raise InvalidAutomorphism(f"H_[{m}] has {len(vec)} components, expected {trunc.nvars}")
            for i, c in enumerate(vec):
                if not c.is_t_free():
                    raise InvalidAutomorphism(f"H_[{m}] component {i + 1} depends on t")
                if c.order() < self.alpha:
                    raise InvalidAutomorphism(f"H_[{m}] component {i + 1} has order < {self.alpha}")
            if not vec.is_zero():
                comps[m] = vec
        self.components = dict(sorted(comps.items()))
        self._P: dict = {}
        self._D: dict = {}

    @property
    def W(self):
        return tuple(self.components)

    def H(self, m: int) -> SeriesVector:
        return self.components.get(m) or SeriesVector.zero(self.trunc)

    def H_t(self) -> SeriesVector:
        out = SeriesVector.zero(self.trunc)
        for m, vec in self.components.items():
            out = out + vec.t_shift(m)
        return out

    def F(self) -> SeriesVector:
        return SeriesVector.identity(self.trunc) - self.H_t()

    def with_truncation(self, trunc: Truncation):
        return Automorphism(trunc, self.components, self.alpha, self.names)

    def with_orders(self, t_order=None, z_degree=None):
        tr = self.trunc
        return self.with_truncation(Truncation(
            tr.z_degree if z_degree is None else z_degree,
            tr.t_order if t_order is None else t_order,
            tr.nvars, tr.commutative))

    # -- trees --------------------------------------------------------
    def P(self, t: Tree) -> SeriesVector:
        """P_T; a singleton with label m gives H_[m]."""
        if t in self._P:
            return self._P[t]
        base = self.H(t.label)
        if not t.children or base.is_zero():
            out = base
        else:
            derivs = [Derivation(self.P(c)) for c in t.children]
            if any(d.is_zero() for d in derivs):
                out = SeriesVector.zero(self.trunc)
            else:
                out = SeriesVector(b_plus_apply(derivs, comp) for comp in base)
        self._P[t] = out
        return out

    def D(self, t: Tree) -> LinearMap:
        """D_T for t in T-bar (root label ignored)."""
        key = Tree(0, t.children)
        if key not in self._D:
            if not key.children:
                self._D[key] = LinearMap.identity(self.trunc)
            else:
                derivs = [Derivation(self.P(c)) for c in key.children]
                self._D[key] = LinearMap.from_function(self.trunc, lambda w: b_plus_apply(derivs, w))
        return self._D[key]

    def trees(self, max_weight=None):
        n = self.trunc.t_order if max_weight is None else max_weight
        if not self.W or n < 1:
            return []
        return enumerate_trees(self.W, n)

    def __repr__(self):
        return f"Automorphism(W={self.W}, trunc={self.trunc})"


def automorphism_from_strings(trunc, H: dict, alpha=1, names=None) -> Automorphism:
    """``H = {m: [series text per component]}``."""
    comps = {m: SeriesVector(parse_series(s, trunc, names) for s in texts) for m, texts in H.items()}
    return Automorphism(trunc, comps, alpha, names)


def load_automorphism(path) -> Automorphism:
    """Read a map file (YAML; JSON also accepted)."""
    text = Path(path).read_text()
    try:
        import yaml

        doc = yaml.safe_load(text)
    except ImportError:  # pragma: no cover - pyyaml is a declared dependency
        doc = json.loads(text)
    return automorphism_from_doc(doc)


def automorphism_from_doc(doc) -> Automorphism:
    try:
        names = list(doc["vars"])
        tr_doc = doc["truncation"]
        trunc = Truncation(int(tr_doc["z_degree"]), int(tr_doc["t_order"]), len(names),
                           bool(doc.get("commutative", False)))
        alpha = int(doc.get("alpha", 1))
        entries = doc.get("H", [])
    except (KeyError, TypeError) as exc:
        raise InvalidAutomorphism(f"malformed map document: {exc}") from exc
    comps: dict = {}
    for e in entries:
        m = int(e["m"])
        comp = e["component"]
        idx = names.index(comp) if isinstance(comp, str) else int(comp) - 1
        if not 0 <= idx < len(names):
            raise InvalidAutomorphism(f"component {comp!r} out of range")
        vec = list(comps.get(m) or [NCSeries(trunc) for _ in names])
        vec[idx] = vec[idx] + parse_series(str(e["series"]), trunc, names)
        comps[m] = vec
    return Automorphism(trunc, comps, alpha, names)


def automorphism_to_doc(F: Automorphism) -> dict:
    tr = F.trunc
    H = []
    for m, vec in F.components.items():
        for i, c in enumerate(vec):
            if c:
                H.append({"m": m, "component": i + 1, "series": c.format(F.names)})
    return {
        "vars": F.names,
        "commutative": tr.commutative,
        "alpha": F.alpha,
        "truncation": {"t_order": tr.t_order, "z_degree": tr.z_degree},
        "H": H,
    }


def random_automorphism(rng: random.Random, nvars=2, max_deg=3, t_order=4, z_degree=4,
                        W=(1, 2), alpha=1, terms=3, commutative=False, coeff_range=3):
    """Random noncommutative F with small integer coefficients."""
    tr = Truncation(z_degree, t_order, nvars, commutative)
    comps = {}
    for m in W:
        vec = []
        for _ in range(nvars):
            s = NCSeries(tr)
            for _ in range(rng.randint(0, terms)):
                ell = rng.randint(max(alpha, 1), max_deg)
                word = tuple(rng.randrange(nvars) for _ in range(ell))
                c = rng.choice([x for x in range(-coeff_range, coeff_range + 1) if x])
                s._add(word, 0, Fraction(c))
            vec.append(s)
        comps[m] = vec
    return Automorphism(tr, comps, alpha)


# ---------------------------------------------------------------------
# inverses, D-Log, flows

def fixed_point_inverse(F: Automorphism) -> SeriesVector:
    """G = z + M with M = H_t(z + M), solved t-adically."""
    tr = F.trunc
    z = SeriesVector.identity(tr)
    M = SeriesVector.zero(tr)
    for _ in range(tr.t_order + 2):
        G = z + M
        new = SeriesVector.zero(tr)
        for m, vec in F.components.items():
            new = new + vec.substitute(G).t_shift(m)
        if new == M:
            return z + M
        M = new
    raise ArithmeticError("fixed-point iteration did not stabilise")


def _tree_sum(F: Automorphism, weight_fn, include_z=True) -> SeriesVector:
    tr = F.trunc
    out = SeriesVector.identity(tr) if include_z else SeriesVector.zero(tr)
    for t in F.trees():
        c = weight_fn(t)
        if not c:
            continue
        P = F.P(t)
        if P.is_zero():
            continue
        out = out + P.scale(Fraction(c) / t.aut_order).t_shift(t.weight)
    return out


def tree_inverse(F: Automorphism) -> SeriesVector:
    """G = z + sum_T t^{|T|} P_T / alpha(T)."""
    return _tree_sum(F, lambda t: 1)


def d_log(F: Automorphism) -> SeriesVector:
    """a_t = -sum_T t^{|T|} phi_T P_T / alpha(T)."""
    return _tree_sum(F, lambda t: -varphi(t), include_z=False)


def flow(F: Automorphism, s) -> SeriesVector:
    """F_t(z, s) = z + sum_T t^{|T|} Omega(T, -s) P_T / alpha(T) at a rational s."""
    s = as_fraction(s)
    return _tree_sum(F, lambda t: order_polynomial(t)(-s))


def flow_polynomial(F: Automorphism) -> dict:
    """The formal flow as {j: SeriesVector}, meaning sum_j s^j * vec_j."""
    tr = F.trunc
    out = {0: SeriesVector.identity(tr)}
    for t in F.trees():
        P = F.P(t)
        if P.is_zero():
            continue
        poly = order_polynomial(t).negate_s()
        for j, c in enumerate(poly.coeffs):
            if c:
                term = P.scale(c / t.aut_order).t_shift(t.weight)
                out[j] = out[j] + term if j in out else term
    return {j: v for j, v in sorted(out.items()) if not v.is_zero()}


def mth_power(F: Automorphism, m: int) -> SeriesVector:
    return flow(F, int(m))


def compose_power(F: Automorphism, m: int) -> SeriesVector:
    """F o ... o F (m >= 0 times) by direct substitution."""
    tr = F.trunc
    out = SeriesVector.identity(tr)
    Fz = F.F()
    for _ in range(m):
        out = Fz.substitute(out)
    return out


def exp_derivation(a: SeriesVector, u=None):
    """exp([a d/dz]) applied to u (default: to z, componentwise)."""
    tr = a.trunc
    delta = Derivation(a)
    targets = SeriesVector.identity(tr) if u is None else u
    out = []
    for comp in targets:
        total = comp.copy()
        term = comp
        for k in range(1, tr.t_order + 1):
            term = apply_derivation(delta, term).scale(Fraction(1, k))
            if not term:
                break
            total = total + term
        out.append(total)
    return SeriesVector(out)


# ---------------------------------------------------------------------
# the NCS system of an automorphism, as t-dependent operators

def _sum_b_plus_powers(delta: Derivation, sign: int) -> LinearMap:
    tr = delta.trunc

    def image(u):
        (w, _), = u.terms
        out = NCSeries(tr)
        for k in range(0, min(len(w), tr.t_order) + 1):
            out = out + b_plus_power(delta, k, u).scale(sign ** k)
        return out

    return LinearMap.from_function(tr, image)


def operator_f(F: Automorphism) -> LinearMap:
    """f(t) = sum_k (-1)^k/k! B+([H_{-t} d/dz]^k)."""
    return _sum_b_plus_powers(Derivation(F.H_t().t_negate()), -1)


def operator_g(F: Automorphism, G=None) -> LinearMap:
    """g(t) = sum_k 1/k! B+([M_t d/dz]^k) with G_t = z + M_t."""
    G = fixed_point_inverse(F) if G is None else G
    M = G - SeriesVector.identity(F.trunc)
    return _sum_b_plus_powers(Derivation(M), 1)


def operator_fg(F: Automorphism):
    G = fixed_point_inverse(F)
    f = operator_f(F)
    g = operator_g(F, G)
    return f, g, log_map(g)


def nc_components_hm(F: Automorphism, G=None):
    """(h(t), m(t)) as derivations: [dM/dt(F) d/dz] and [dH/dt(G) d/dz]."""
    tr = F.trunc
    G = fixed_point_inverse(F) if G is None else G
    M = G - SeriesVector.identity(tr)
    h = Derivation(M.t_derivative().substitute(F.F()))
    m = Derivation(F.H_t().t_derivative().substitute(G))
    return h, m


def omega_operators(F: Automorphism) -> dict:
    """All five components f, g, d, h, m as t-dependent LinearMaps."""
    f, g, d = operator_fg(F)
    h, m = nc_components_hm(F)
    return {"f": f, "g": g, "d": d, "h": h.as_map(), "m": m.as_map()}


def p_tree(F: Automorphism, t: Tree) -> SeriesVector:
    return F.P(t)


def d_tree(F: Automorphism, t: Tree) -> LinearMap:
    return F.D(t)


def apply_A(F: Automorphism, x: GLVector) -> LinearMap:
    """The linear extension of T -> D_T."""
    out = LinearMap.zero(F.trunc)
    for t, c in x.items():
        out = out + F.D(t).scale(c)
    return out


def apply_U(F: Automorphism, x) -> SeriesVector:
    """Linear extension of T -> P_T over trees with nonzero root label."""
    out = SeriesVector.zero(F.trunc)
    for t, c in x.items():
        out = out + F.P(t).scale(c)
    return out


# ---------------------------------------------------------------------
# separating automorphisms

def bfs_vertices(t: Tree):
    """Vertices in breadth-first order as (address, subtree); parents first."""
    out = [((), t)]
    i = 0
    while i < len(out):
        addr, s = out[i]
        out.extend((addr + (j,), c) for j, c in enumerate(s.children))
        i += 1
    return out


def separating_automorphism(t: Tree, alpha: int = 1, t_order=None, z_degree=None) -> Automorphism:
    """An automorphism with P_T != 0 and P_T' = 0 for the other trees of weight >= |T|.

    Variables z_1..z_n stand for the vertices of T in breadth-first order
    (z_j also names the edge into v_j), plus a padding variable z_{n+1}.
    Component i of H_[label(v_i)] is the product of the child-edge variables
    of v_i padded by z_{n+1} to degree d; all other entries vanish.
    """
    verts = bfs_vertices(t)
    n = len(verts)
    index = {addr: i for i, (addr, _) in enumerate(verts)}
    d = max([alpha] + [len(s.children) for _, s in verts])
    if t_order is None:
        t_order = t.weight
    if z_degree is None:
        z_degree = max(n, t.weight) * max(d - 1, 1) + 1
    tr = Truncation(z_degree, t_order, n + 1, False)
    pad = n
    comps: dict = {}
    for addr, s in verts:
        i = index[addr]
        kids = [index[addr + (j,)] for j in range(len(s.children))]
        word = tuple(kids) + (pad,) * (d - len(kids))
        vec = comps.setdefault(s.label, [NCSeries(tr) for _ in range(n + 1)])
        vec[i] = vec[i] + NCSeries.monomial(tr, word)
    return Automorphism(tr, comps, alpha)


def jacobian_support(F: Automorphism):
    """Pairs (i, j) with dH_i/dz_j != 0 for some component H_[m]."""
    out = set()
    for vec in F.components.values():
        for i, c in enumerate(vec):
            for (w, _), _c in c.terms.items():
                out.update((i, j) for j in w)
    return out


def degree_raise(op: LinearMap):
    """Set of (len(image word) - len(word)) over all nonzero image terms."""
    out = set()
    for w, s in op.images.items():
        for (v, _), _c in s.terms.items():
            out.add(len(v) - len(w))
    return out

