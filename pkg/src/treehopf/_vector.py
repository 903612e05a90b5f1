"""Sparse formal linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class LinearCombination:
    """A finitely supported map basis-key -> Fraction.

    Zero coefficients are never stored.  Subclasses add a product by
    overriding ``_mul_basis``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms: dict = {}
        if terms is None:
            return
        items = terms.items() if hasattr(terms, "items") else terms
        for key, c in items:
            self._add_term(key, c)

    # -- construction -------------------------------------------------
    def _add_term(self, key, c):
        c = as_fraction(c)
        if not c:
            return
        new = self._terms.get(key, 0) + c
        if new:
            self._terms[key] = new
        else:
            self._terms.pop(key, None)

    @classmethod
    def basis(cls, key, c=1):
        out = cls()
        out._add_term(key, c)
        return out

    def _new(self, terms=None):
        return type(self)(terms)

    # -- mapping protocol ---------------------------------------------
    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __contains__(self, key):
        return key in self._terms

    def __bool__(self):
        return bool(self._terms)

    # -- linear structure ---------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        out = self._new(self._terms)
        for k, c in other._terms.items():
            out._add_term(k, c)
        return out

    def __sub__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        out = self._new(self._terms)
        for k, c in other._terms.items():
            out._add_term(k, -c)
        return out

    def __neg__(self):
        return self._new({k: -c for k, c in self._terms.items()})

    def scale(self, c):
        c = as_fraction(c)
        if not c:
            return self._new()
        return self._new({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, LinearCombination):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, LinearCombination):
            out = self._new()
            for a, ca in self._terms.items():
                for b, cb in other._terms.items():
                    for k, c in self._mul_basis(a, b).items():
                        out._add_term(k, ca * cb * c)
            return out
        return self.scale(other)

    def _mul_basis(self, a, b) -> dict:
        raise TypeError(f"{type(self).__name__} has no product")

    def __eq__(self, other):
        if isinstance(other, LinearCombination):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def map_keys(self, f):
        """Linear extension of ``f: key -> dict/LinearCombination``."""
        out = self._new()
        for k, c in self._terms.items():
            for k2, c2 in f(k).items():
                out._add_term(k2, c * c2)
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def format(self, fmt_key) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms.items():
            parts.append((c, fmt_key(k)))
        s = ""
        for i, (c, body) in enumerate(parts):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                s += ("-" if c < 0 else "") + f"{a}*{body}"
            else:
                s += f" {sign} {a}*{body}"
        return s


class Tensor(LinearCombination):
    """Formal sums of pairs (or tuples) of basis keys."""

    __slots__ = ()

    def __str__(self):
        return self.format(lambda k: " (x) ".join(str(x) for x in k))
