"""Command-line interface.  Every command prints one JSON document
``{"status": "ok"|"fail", "payload": ...}``; exact rationals are strings.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from treehopf import diffop, hopf_ck, hopf_gl, ncsym, orderpoly
from treehopf.hopf_axioms import verify_hopf
from treehopf.ncseries import SeriesSyntaxError
from treehopf.trees import (
    InvalidLabelError,
    TreeSyntaxError,
    admissible_cuts,
    enumerate_trees,
    format_forest,
    parse_forest,
    parse_tree,
)


class UsageError(Exception):
    pass


def _labels(text):
    try:
        labs = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError as exc:
        raise UsageError(f"bad label list {text!r}") from exc
    if not labs or labs[0] < 1:
        raise UsageError("labels must be positive integers")
    return labs


def _series_payload(vec, names):
    """Per component: the full series text and its t-coefficients."""
    out = []
    for i, comp in enumerate(vec):
        coeffs = []
        for k in range(comp.trunc.t_order + 1):
            c = comp.t_coefficient(k)
            if c:
                coeffs.append({"t_power": k, "series": c.format(names)})
        out.append({"component": names[i], "series": comp.format(names), "coefficients": coeffs})
    return out


def _poly_payload(p):
    return {"coefficients": [str(c) for c in p.coeffs], "text": str(p)}


def _first_difference(a, b, names):
    for i, (x, y) in enumerate(zip(a, b)):
        keys = sorted(set(x.terms) | set(y.terms), key=lambda kv: (kv[1], len(kv[0]), kv[0]))
        for key in keys:
            cx = x.terms.get(key, Fraction(0))
            cy = y.terms.get(key, Fraction(0))
            if cx != cy:
                w, k = key
                return {
                    "component": names[i],
                    "t_power": k,
                    "word": "*".join(names[j] for j in w) or "1",
                    "values": [str(cx), str(cy)],
                }
    return None


# ---------------------------------------------------------------------
# commands

def cmd_trees(args):
    if args.action == "enum":
        trees = enumerate_trees(_labels(args.labels), args.max_weight)
        return True, {
            "count": len(trees),
            "counts_by_weight": {str(w): sum(1 for t in trees if t.weight == w)
                                 for w in range(1, args.max_weight + 1)},
            "trees": [str(t) for t in trees],
        }
    t = parse_tree(args.tree)
    cuts = []
    for cut, p, r in admissible_cuts(t):
        cuts.append({"edges": [list(e) for e in sorted(cut.edges)], "P": format_forest(p), "R": str(r)})
    return True, {"tree": str(t), "cuts": cuts}


def cmd_orderpoly(args):
    f = parse_forest(args.forest)
    p = orderpoly.strict_order_polynomial(f) if args.strict else orderpoly.order_polynomial(f)
    return True, {"forest": format_forest(f), "strict": args.strict, **_poly_payload(p)}


def cmd_theta(args):
    t = parse_tree(args.tree)
    return True, {"tree": str(t), "theta": str(orderpoly.theta(t)), "varphi": str(orderpoly.varphi(t))}


def _parse_element(algebra, text):
    return hopf_gl.GLVector.parse(text) if algebra == "gl" else hopf_ck.CKVector.parse(text)


def _tensor_payload(x, algebra):
    fmt = str if algebra == "gl" else hopf_ck.format_key
    terms = sorted(x.items(), key=lambda kv: (kv[0][0].__repr__(), kv[0][1].__repr__()))
    return [{"coefficient": str(c), "left": fmt(a), "right": fmt(b)} for (a, b), c in terms]


def cmd_hopf(args):
    mod = hopf_gl if args.algebra == "gl" else hopf_ck
    elems = [_parse_element(args.algebra, e) for e in args.elements]
    if args.op == "product":
        acc = mod.GLVector.one() if args.algebra == "gl" else mod.CKVector.one()
        for e in elems:
            acc = acc * e
        return True, {"result": str(acc)}
    if len(elems) != 1:
        raise UsageError(f"{args.op} takes exactly one element")
    if args.op == "coproduct":
        return True, {"terms": _tensor_payload(mod.coproduct(elems[0]), args.algebra)}
    return True, {"result": str(mod.antipode(elems[0]))}


def cmd_pairing(args):
    x = hopf_gl.GLVector.parse(args.gl)
    c = hopf_ck.CKVector.parse(args.ck)
    return True, {"value": str(hopf_ck.pairing(x, c))}


def _load(path):
    try:
        return diffop.load_automorphism(path)
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def cmd_invert(args):
    F = _load(args.map)
    names = F.names
    payload = {"method": args.method}
    ok = True
    if args.method in ("tree", "both"):
        G_tree = diffop.tree_inverse(F)
        payload["tree"] = _series_payload(G_tree, names)
    if args.method in ("fixedpoint", "both"):
        G_fp = diffop.fixed_point_inverse(F)
        payload["fixedpoint"] = _series_payload(G_fp, names)
    if args.method == "both":
        diff = _first_difference(G_tree, G_fp, names)
        payload["agreement"] = diff is None
        payload["first_difference"] = diff
        ok = diff is None
    return ok, payload


def cmd_dlog(args):
    F = _load(args.map)
    a = diffop.d_log(F)
    return True, {"dlog": _series_payload(a, F.names)}


def cmd_flow(args):
    F = _load(args.map)
    if args.s.strip() == "s":
        poly = diffop.flow_polynomial(F)
        return True, {"s": "formal", "flow": {str(j): _series_payload(v, F.names) for j, v in poly.items()}}
    try:
        s = Fraction(args.s)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--s must be a rational or 's', got {args.s!r}") from exc
    return True, {"s": str(s), "flow": _series_payload(diffop.flow(F, s), F.names)}


def cmd_power(args):
    F = _load(args.map)
    return True, {"m": args.m, "power": _series_payload(diffop.mth_power(F, args.m), F.names)}


def cmd_separating(args):
    t = parse_tree(args.tree)
    if t.label == 0:
        raise UsageError("the tree needs a positive root label")
    F = diffop.separating_automorphism(t, args.alpha)
    doc = diffop.automorphism_to_doc(F)
    P = F.P(t)
    return not P.is_zero(), {"automorphism": doc, "P_T": [c.format(F.names) for c in P]}


def cmd_verify(args):
    kind = args.kind
    if kind == "hopf":
        W = _labels(args.labels)
        res = verify_hopf(args.algebra, W, args.max_weight)
        return res["ok"], res
    if kind == "inject":
        rows = []
        for m in range(1, args.max_weight + 1):
            rank, expected = ncsym.injectivity_rank(m)
            rows.append({"m": m, "rank": rank, "expected": expected, "ok": rank == expected})
        return all(r["ok"] for r in rows), {"ranks": rows}
    if kind == "cd2":
        F = _load(args.map)
        res = ncsym.verify_cd2(F, args.max_weight)
        return res["ok"], res
    # ncs
    if args.source == "trees":
        omega = ncsym.omega_trees(_labels(args.labels), args.order + 1)
    else:
        if not args.map:
            raise UsageError("--source map needs --map")
        omega = ncsym.omega_F(_load(args.map), args.order)
    rep = ncsym.verify_ncs(omega, args.order)
    return rep.ok, rep.as_dict()


# ---------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="treehopf", description=__doc__.splitlines()[0])
    p.add_argument("--timing", action="store_true", help="report elapsed milliseconds on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("trees", help="enumerate trees or list admissible cuts")
    tsub = t.add_subparsers(dest="action", required=True)
    te = tsub.add_parser("enum")
    te.add_argument("--labels", default="1")
    te.add_argument("--max-weight", type=int, required=True)
    tc = tsub.add_parser("cuts")
    tc.add_argument("tree")
    t.set_defaults(func=cmd_trees)

    o = sub.add_parser("orderpoly", help="(strict) order polynomial of a forest")
    o.add_argument("--strict", action="store_true")
    o.add_argument("forest")
    o.set_defaults(func=cmd_orderpoly)

    th = sub.add_parser("theta", help="theta_T and phi_T")
    th.add_argument("tree")
    th.set_defaults(func=cmd_theta)

    h = sub.add_parser("hopf", help="product, coproduct or antipode")
    h.add_argument("op", choices=["product", "coproduct", "antipode"])
    h.add_argument("--algebra", choices=["gl", "ck"], required=True)
    h.add_argument("elements", nargs="+")
    h.set_defaults(func=cmd_hopf)

    pr = sub.add_parser("pairing", help="<GL element, CK element>")
    pr.add_argument("gl")
    pr.add_argument("ck")
    pr.set_defaults(func=cmd_pairing)

    inv = sub.add_parser("invert", help="inverse of an automorphism")
    inv.add_argument("--map", required=True)
    inv.add_argument("--method", choices=["tree", "fixedpoint", "both"], default="tree")
    inv.set_defaults(func=cmd_invert)

    dl = sub.add_parser("dlog", help="D-Log of an automorphism")
    dl.add_argument("--map", required=True)
    dl.set_defaults(func=cmd_dlog)

    fl = sub.add_parser("flow", help="formal flow at a rational s, or formally with --s s")
    fl.add_argument("--map", required=True)
    fl.add_argument("--s", required=True)
    fl.set_defaults(func=cmd_flow)

    pw = sub.add_parser("power", help="m-th composition power")
    pw.add_argument("--map", required=True)
    pw.add_argument("--m", type=int, required=True)
    pw.set_defaults(func=cmd_power)

    se = sub.add_parser("separating", help="automorphism separating a tree")
    se.add_argument("--tree", required=True)
    se.add_argument("--alpha", type=int, default=1)
    se.set_defaults(func=cmd_separating)

    v = sub.add_parser("verify", help="verification suites")
    vsub = v.add_subparsers(dest="kind", required=True)
    vn = vsub.add_parser("ncs")
    vn.add_argument("--source", choices=["trees", "map"], required=True)
    vn.add_argument("--labels", default="1")
    vn.add_argument("--map")
    vn.add_argument("--order", type=int, required=True)
    vh = vsub.add_parser("hopf")
    vh.add_argument("--algebra", choices=["gl", "ck"], required=True)
    vh.add_argument("--labels", default="1")
    vh.add_argument("--max-weight", type=int, required=True)
    vc = vsub.add_parser("cd2")
    vc.add_argument("--map", required=True)
    vc.add_argument("--max-weight", type=int, required=True)
    vi = vsub.add_parser("inject")
    vi.add_argument("--max-weight", type=int, required=True)
    v.set_defaults(func=cmd_verify)
    return p


def run(argv=None):
    """Parse and execute; returns (exit code, document, args, start time)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        ok, payload = args.func(args)
    except (UsageError, TreeSyntaxError, SeriesSyntaxError, InvalidLabelError,
            diffop.InvalidAutomorphism, ncsym.WeightOverflow) as exc:
        return 2, {"status": "fail", "payload": {"error": str(exc)}}, args, start
    return (0 if ok else 1), {"status": "ok" if ok else "fail", "payload": payload}, args, start


def main(argv=None):
    code, doc, args, start = run(argv)
    print(json.dumps(doc, indent=2, sort_keys=True))
    if args.timing:
        print(f"elapsed_ms={(time.perf_counter() - start) * 1000:.1f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
