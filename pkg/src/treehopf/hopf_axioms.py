"""Hopf algebra axiom checks on a finite list of basis elements."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from treehopf._vector import Tensor


@dataclass
class HopfOps:
    vector: Callable  # basis key -> element
    mul: Callable
    coproduct: Callable  # element -> Tensor of key pairs
    counit: Callable
    antipode: Callable
    one: object
    weight: Callable  # basis key -> int


def check_axioms(ops: HopfOps, basis, max_weight: int) -> dict:
    """Run the axiom suite; returns {axiom: list of failing inputs}."""
    fails = {name: [] for name in (
        "unit", "associativity", "counit", "coassociativity", "antipode", "bialgebra")}
    vec = ops.vector
    for a in basis:
        x = vec(a)
        if not (ops.mul(ops.one, x) == x and ops.mul(x, ops.one) == x):
            fails["unit"].append(str(a))
        D = ops.coproduct(x)
        left = ops.one.scale(0)
        right = ops.one.scale(0)
        for (p, q), c in D.items():
            left = left + vec(q).scale(c * ops.counit(vec(p)))
            right = right + vec(p).scale(c * ops.counit(vec(q)))
        if not (left == x and right == x):
            fails["counit"].append(str(a))
        # coassociativity on 3-tensors
        lhs = Tensor()
        rhs = Tensor()
        for (p, q), c in D.items():
            for (p1, p2), c1 in ops.coproduct(vec(p)).items():
                lhs._add_term((p1, p2, q), c * c1)
            for (q1, q2), c2 in ops.coproduct(vec(q)).items():
                rhs._add_term((p, q1, q2), c * c2)
        if lhs != rhs:
            fails["coassociativity"].append(str(a))
        s1 = ops.one.scale(0)
        s2 = ops.one.scale(0)
        for (p, q), c in D.items():
            s1 = s1 + ops.mul(ops.antipode(vec(p)), vec(q)).scale(c)
            s2 = s2 + ops.mul(vec(p), ops.antipode(vec(q))).scale(c)
        target = ops.one.scale(ops.counit(x))
        if not (s1 == target and s2 == target):
            fails["antipode"].append(str(a))
    for a, b in itertools.product(basis, repeat=2):
        if ops.weight(a) + ops.weight(b) > max_weight:
            continue
        x, y = vec(a), vec(b)
        xy = ops.mul(x, y)
        prod = Tensor()
        for (p1, p2), c in ops.coproduct(x).items():
            for (q1, q2), d in ops.coproduct(y).items():
                l = ops.mul(vec(p1), vec(q1))
                r = ops.mul(vec(p2), vec(q2))
                for k1, e1 in l.items():
                    for k2, e2 in r.items():
                        prod._add_term((k1, k2), c * d * e1 * e2)
        if ops.coproduct(xy) != prod:
            fails["bialgebra"].append(f"{a} | {b}")
        for c in basis:
            if ops.weight(a) + ops.weight(b) + ops.weight(c) > max_weight:
                continue
            z = vec(c)
            if ops.mul(ops.mul(x, y), z) != ops.mul(x, ops.mul(y, z)):
                fails["associativity"].append(f"{a} | {b} | {c}")
    return fails


def gl_ops() -> HopfOps:
    from treehopf import hopf_gl as G

    return HopfOps(G.GLVector.basis, lambda x, y: x * y, G.coproduct, G.counit, G.antipode,
                   G.GLVector.one(), lambda k: k.weight)


def ck_ops() -> HopfOps:
    from treehopf import hopf_ck as C

    return HopfOps(C.CKVector.basis, lambda x, y: x * y, C.coproduct, C.counit, C.antipode,
                   C.CKVector.one(), lambda k: k.weight)


def verify_hopf(algebra: str, W, max_weight: int) -> dict:
    if algebra == "gl":
        from treehopf.hopf_gl import basis
        ops = gl_ops()
    elif algebra == "ck":
        from treehopf.hopf_ck import basis
        ops = ck_ops()
    else:
        raise ValueError(f"unknown algebra {algebra!r}")
    fails = check_axioms(ops, basis(W, max_weight), max_weight)
    return {"ok": not any(fails.values()), "failures": {k: v for k, v in fails.items() if v}}
