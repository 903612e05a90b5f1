"""Truncated formal power series in noncommuting variables z_1..z_n over Q[t].

A series is a sparse map ``(word, k) -> c`` meaning ``c * t^k * z_{w_1}...z_{w_l}``
with letters stored 0-based.  Words longer than ``z_degree`` and powers of
``t`` above ``t_order`` are dropped on every operation (the quotient by
that ideal is a ring, and substitution by series without constant term
respects it).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from treehopf._vector import as_fraction

INF = math.inf


@dataclass(frozen=True)
class Truncation:
    z_degree: int
    t_order: int
    nvars: int = 1
    commutative: bool = False

    def __post_init__(self):
        if self.z_degree < 1 or self.t_order < 0 or self.nvars < 1:
            raise ValueError(f"invalid truncation {self}")

    def normal(self, word: tuple) -> tuple:
        return tuple(sorted(word)) if self.commutative else word

    def words(self, max_len=None):
        """All basis words of length <= max_len (default z_degree), shortest first."""
        import itertools

        top = self.z_degree if max_len is None else max_len
        for ell in range(top + 1):
            if self.commutative:
                yield from itertools.combinations_with_replacement(range(self.nvars), ell)
            else:
                yield from itertools.product(range(self.nvars), repeat=ell)


class TruncationMismatch(ValueError):
    pass


class SeriesSyntaxError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class CompositionError(ValueError):
    pass


class NCSeries:
    __slots__ = ("trunc", "terms")

    def __init__(self, trunc: Truncation, terms=None):
        self.trunc = trunc
        self.terms: dict = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (w, k), c in items:
                self._add(tuple(w), k, c)

    def _add(self, w, k, c):
        tr = self.trunc
        if len(w) > tr.z_degree or k > tr.t_order:
            return
        if not c:
            return
        if tr.commutative:
            w = tuple(sorted(w))
        key = (w, k)
        new = self.terms.get(key, 0) + c
        if new:
            self.terms[key] = new
        else:
            del self.terms[key]

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, trunc):
        return cls(trunc)

    @classmethod
    def constant(cls, trunc, c=1):
        return cls(trunc, {((), 0): as_fraction(c)})

    @classmethod
    def var(cls, trunc, i: int):
        """z_{i+1} (0-based index)."""
        if not 0 <= i < trunc.nvars:
            raise IndexError(f"variable index {i} out of range")
        return cls(trunc, {((i,), 0): Fraction(1)})

    @classmethod
    def monomial(cls, trunc, word, k=0, c=1):
        return cls(trunc, {(tuple(word), k): as_fraction(c)})

    @classmethod
    def parse(cls, text: str, trunc: Truncation, names=None):
        return parse_series(text, trunc, names)

    def copy(self):
        out = NCSeries(self.trunc)
        out.terms = dict(self.terms)
        return out

    # -- ring structure -----------------------------------------------
    def _check(self, other):
        if self.trunc != other.trunc:
            raise TruncationMismatch(f"{self.trunc} vs {other.trunc}")

    def _coerce(self, other):
        if isinstance(other, NCSeries):
            self._check(other)
            return other
        return NCSeries.constant(self.trunc, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = self.copy()
        for (w, k), c in other.terms.items():
            out._add(w, k, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = NCSeries(self.trunc)
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = as_fraction(c)
        out = NCSeries(self.trunc)
        if c:
            out.terms = {key: c * v for key, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, NCSeries):
            return self.scale(other)
        self._check(other)
        tr = self.trunc
        out = NCSeries(tr)
        for (w1, k1), c1 in self.terms.items():
            room = tr.z_degree - len(w1)
            troom = tr.t_order - k1
            for (w2, k2), c2 in other.terms.items():
                if len(w2) <= room and k2 <= troom:
                    out._add(w1 + w2, k1 + k2, c1 * c2)
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, e: int):
        out = NCSeries.constant(self.trunc)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCSeries):
            return self.trunc == other.trunc and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # -- t structure --------------------------------------------------
    def t_shift(self, k: int):
        """Multiply by t^k."""
        out = NCSeries(self.trunc)
        for (w, j), c in self.terms.items():
            out._add(w, j + k, c)
        return out

    def t_coefficient(self, k: int):
        """The t-free series multiplying t^k."""
        out = NCSeries(self.trunc)
        out.terms = {(w, 0): c for (w, j), c in self.terms.items() if j == k}
        return out

    def t_derivative(self):
        out = NCSeries(self.trunc)
        out.terms = {(w, j - 1): j * c for (w, j), c in self.terms.items() if j}
        return out

    def t_negate(self):
        """u(-t)."""
        out = NCSeries(self.trunc)
        out.terms = {(w, j): (-c if j % 2 else c) for (w, j), c in self.terms.items()}
        return out

    def truncate_t(self, n: int):
        out = NCSeries(self.trunc)
        out.terms = {(w, j): c for (w, j), c in self.terms.items() if j <= n}
        return out

    def at_t(self, value):
        """Evaluate t at a rational number (result is t-free)."""
        value = as_fraction(value)
        out = NCSeries(self.trunc)
        for (w, j), c in self.terms.items():
            out._add(w, 0, c * value ** j)
        return out

    def is_t_free(self) -> bool:
        return all(j == 0 for (_, j) in self.terms)

    # -- orders -------------------------------------------------------
    def order(self):
        return min((len(w) for (w, _) in self.terms), default=INF)

    def t_order(self):
        return min((j for (_, j) in self.terms), default=INF)

    def z_homogeneous(self, d: int):
        out = NCSeries(self.trunc)
        out.terms = {(w, j): c for (w, j), c in self.terms.items() if len(w) == d}
        return out

    # -- conversions --------------------------------------------------
    def retruncate(self, trunc: Truncation):
        """Re-read this series at another truncation (dropping what overflows)."""
        if trunc.nvars != self.trunc.nvars:
            raise TruncationMismatch("variable counts differ")
        return NCSeries(trunc, self.terms)

    def abelianize(self):
        tr = self.trunc
        return NCSeries(Truncation(tr.z_degree, tr.t_order, tr.nvars, True), self.terms)

    # -- composition --------------------------------------------------
    def substitute(self, F):
        """u(F): replace every letter z_i by F[i]."""
        F = list(F)
        tr = self.trunc
        if len(F) != tr.nvars:
            raise CompositionError(f"need {tr.nvars} components, got {len(F)}")
        for i, f in enumerate(F):
            self._check(f)
            check_substitutable(f, i)
        cache = {(): NCSeries.constant(tr)}

        def image(word):
            if word in cache:
                return cache[word]
            r = image(word[:-1]) * F[word[-1]]
            cache[word] = r
            return r

        out = NCSeries(tr)
        for (w, k), c in self.terms.items():
            for (w2, k2), c2 in image(w).terms.items():
                out._add(w2, k + k2, c * c2)
        return out

    # -- text ---------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], len(kv[0][0]), kv[0][0]))

    def format(self, names=None) -> str:
        return format_series(self, names)

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        return f"NCSeries({format_series(self)!r})"


def check_substitutable(f: NCSeries, i: int):
    for (w, k), c in f.terms.items():
        if not w:
            raise CompositionError(f"component {i + 1} has a constant term")
        if k == 0 and len(w) == 1 and not (w == (i,) and c == 1):
            raise CompositionError(
                f"component {i + 1} has a t-free linear term other than z{i + 1}; "
                "composition is not truncation-stable"
            )


class SeriesVector(tuple):
    """n components sharing one truncation."""

    def __new__(cls, comps):
        comps = tuple(comps)
        if comps:
            tr = comps[0].trunc
            for c in comps:
                if c.trunc != tr:
                    raise TruncationMismatch("components have different truncations")
        return super().__new__(cls, comps)

    @property
    def trunc(self):
        return self[0].trunc

    @classmethod
    def identity(cls, trunc):
        return cls(NCSeries.var(trunc, i) for i in range(trunc.nvars))

    @classmethod
    def zero(cls, trunc):
        return cls(NCSeries(trunc) for _ in range(trunc.nvars))

    def __add__(self, other):
        return SeriesVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return SeriesVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return SeriesVector(-a for a in self)

    def scale(self, c):
        return SeriesVector(a.scale(c) for a in self)

    def t_shift(self, k):
        return SeriesVector(a.t_shift(k) for a in self)

    def t_coefficient(self, k):
        return SeriesVector(a.t_coefficient(k) for a in self)

    def t_derivative(self):
        return SeriesVector(a.t_derivative() for a in self)

    def t_negate(self):
        return SeriesVector(a.t_negate() for a in self)

    def truncate_t(self, n):
        return SeriesVector(a.truncate_t(n) for a in self)

    def substitute(self, G):
        """Componentwise composition self(G)."""
        return SeriesVector(a.substitute(G) for a in self)

    def retruncate(self, trunc):
        return SeriesVector(a.retruncate(trunc) for a in self)

    def __eq__(self, other):
        return isinstance(other, tuple) and len(self) == len(other) and all(
            a == b for a, b in zip(self, other)
        )

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def is_zero(self):
        return all(not a for a in self)

    def format(self, names=None):
        return [a.format(names) for a in self]


# ---------------------------------------------------------------------
# text grammar

_TOK = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _lex(text):
    pos = 0
    toks = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOK.match(text, pos)
        if not m:
            raise SeriesSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


def parse_series(text: str, trunc: Truncation, names=None) -> NCSeries:
    """Parse e.g. ``z1 - t*z2*z2`` or ``3/2*t^2*z1*z2*z1``.

    ``names`` optionally gives custom variable names (default z1..zn).
    """
    if names is None:
        names = [f"z{i + 1}" for i in range(trunc.nvars)]
    index = {nm: i for i, nm in enumerate(names)}
    toks = _lex(text)
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        tok = toks[i]
        i += 1
        return tok

    def nat():
        kind, val, pos = take()
        if kind != "num":
            raise SeriesSyntaxError("expected a natural number", pos)
        return int(val)

    out = NCSeries(trunc)
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    if peek()[0] == "end":
        raise SeriesSyntaxError("empty series", 0)
    while True:
        coeff = Fraction(1)
        word: list = []
        k = 0
        got = False
        if peek()[0] == "num":
            coeff = Fraction(nat())
            if peek() == ("op", "/", peek()[2]):
                take()
                den = nat()
                if den == 0:
                    raise SeriesSyntaxError("zero denominator", toks[i - 1][2])
                coeff /= den
            got = True
        while True:
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                take()
                kind, val, pos = peek()
                if kind != "var":
                    raise SeriesSyntaxError("expected a factor after '*'", pos)
            if kind != "var":
                break
            take()
            e = 1
            if peek()[0] == "op" and peek()[1] == "^":
                take()
                e = nat()
            if val == "t":
                k += e
            elif val in index:
                word.extend([index[val]] * e)
            else:
                raise SeriesSyntaxError(f"unknown variable {val!r}", pos)
            got = True
        if not got:
            raise SeriesSyntaxError("expected a term", peek()[2])
        out._add(tuple(word), k, sign * coeff)
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
            continue
        raise SeriesSyntaxError(f"unexpected {val!r}", pos)
    return out


def format_series(u: NCSeries, names=None) -> str:
    if not u.terms:
        return "0"
    if names is None:
        names = [f"z{i + 1}" for i in range(u.trunc.nvars)]
    parts = []
    for (w, k), c in u.sorted_terms():
        factors = []
        if k == 1:
            factors.append("t")
        elif k > 1:
            factors.append(f"t^{k}")
        factors.extend(names[x] for x in w)
        a = abs(c)
        if not factors:
            body = str(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = f"{a}*" + "*".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
