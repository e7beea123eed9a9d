"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 unknown name, 4 internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import SchemaError, StructureConstants, UnknownName, analyze, annihilator, builtin, is_associative, tensor
from .classification import (
    UnknownType,
    ZeroVector,
    classify_lie_admissible,
    classify_module,
    classify_power_associative,
    parse_label,
)
from .group_algebra import V, W, GroupAlgebraElement, decompose, span_of_orbit
from .operads import check_dual_table, decompose_dual, printed_dual_relations
from .rational import format_rational
from .vw import lie_admissible_witness, satisfies_star, satisfies_starstar

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN, EXIT_INTERNAL = 0, 2, 3, 4


class InputError(ValueError):
    pass


def _rows(subspace):
    return [[format_rational(x) for x in b] for b in subspace.basis]


def parse_vector(tokens) -> GroupAlgebraElement:
    if isinstance(tokens, str):
        tokens = [tokens]
    parts = [p for tok in tokens for p in tok.replace(" ", "").strip("[]").split(",") if p != ""]
    try:
        return GroupAlgebraElement.parse(parts)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def load_algebra(ref: str) -> StructureConstants:
    """A JSON file path or a builtin name."""
    if ref.endswith(".json") or os.path.isfile(ref):
        try:
            with open(ref, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {ref}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"{ref}: invalid JSON ({exc.msg})") from None
        return StructureConstants.from_json(doc)
    return builtin(ref)


def _report(command, inputs, results, anchors):
    return {"command": command, "inputs": inputs, "results": results, "paper_anchors": anchors}


def cmd_classify(args) -> dict:
    v = parse_vector(args.vector)
    if v.is_zero():
        raise ZeroVector("zero vector has no classification")
    fv = span_of_orbit(v)
    lie = classify_lie_admissible(v)
    power = classify_power_associative(v)
    results = {
        "dim_F_v": fv.rank,
        "F_v_basis": _rows(fv),
        "decomposition": decompose(fv).to_json(),
        "V_in_F_v": fv.contains(V.coeffs),
        "W_in_F_v": fv.contains(W.coeffs),
        "lie_admissible_type": lie.label,
        "power_associative_type": power.label,
    }
    return _report("classify", {"vector": v.to_json()}, results, [
        "classification of Lie-admissible v-algebras",
        "classification of power-associative v-algebras",
    ])


def cmd_analyze(args) -> dict:
    sc = load_algebra(args.algebra)
    results = {"dim": sc.dim, **analyze(sc)}
    return _report("analyze", {"algebra": args.algebra, "name": sc.name}, results, [
        "v-algebra identity A o Phi_v = 0",
    ])


def cmd_dual(args) -> dict:
    if args.vector:
        v = parse_vector(args.vector)
        if v.is_zero():
            raise ZeroVector("zero vector has no classification")
        vtype = classify_module(span_of_orbit(v))
        inputs = {"vector": v.to_json()}
    elif args.type:
        vtype = parse_label(args.type)
        v = vtype.generator
        inputs = {"type": vtype.label}
    else:
        raise InputError("dual needs a type label or --vector")
    dec = decompose_dual(v)
    results = {"type": vtype.label, **dec.to_json()}
    if vtype.classified:
        table = check_dual_table(vtype)
        results.update(table.to_json())
        results["printed_relations"] = [
            [{"source": r.source, "text": r.text, "element": str(r.element)} for r in variant]
            for variant in printed_dual_relations(vtype)
        ]
    else:
        results["r_perp_basis"] = _rows(dec.r_perp)
        results["matches_paper_table"] = None
    return _report("dual", inputs, results, [
        "dual operads of v-algebras",
        "decomposition R-perp = R_ass + U",
    ])


def cmd_tensor(args) -> dict:
    a, b = load_algebra(args.a), load_algebra(args.b)
    prod = tensor(a, b)
    ann = annihilator(prod)
    t = classify_module(ann)
    both = is_associative(a) and is_associative(b)
    results = {
        "dim": prod.dim,
        "a_associative": is_associative(a),
        "b_associative": is_associative(b),
        "annihilator_dim": ann.rank,
        "annihilator_basis": _rows(ann),
        "type": t.label if t.classified else None,
        "contains_V": ann.contains(V.coeffs),
        "contains_W": ann.contains(W.coeffs),
        "both_associative": both,
    }
    if args.emit_product:
        results["product"] = prod.to_json()
    return _report("tensor", {"a": args.a, "b": args.b}, results, [
        "tensor of V-algebras is a V-algebra iff both factors are associative",
    ])


def cmd_vw(args) -> dict:
    v, w = parse_vector(args.v), parse_vector(args.w)
    res = lie_admissible_witness(v, w)

    def js(x):
        return None if x is None else x.to_json()

    results = {
        "witness_found": res.found,
        "reason": res.reason,
        "witness": js(res.witness),
        "combination": js(res.combination),
        "u_prime": js(res.u_prime),
        "composite": js(res.composite),
    }
    inputs = {"v": v.to_json(), "w": w.to_json()}
    if args.algebra:
        sc = load_algebra(args.algebra)
        inputs["algebra"] = args.algebra
        left, right = satisfies_star(sc, v, w)
        results["algebra"] = {
            "star_left": left,
            "star_right": right,
            "starstar": satisfies_starstar(sc, v, w),
            "annihilator_contains_V": annihilator(sc).contains(V.coeffs),
        }
    return _report("vw-check", inputs, results, [
        "Lie-admissibility criterion for (v,w)-algebras",
    ])


def cmd_selftest(args) -> dict:
    from . import selftest

    rows = selftest.run()
    return _report("selftest", {}, {"anchors": rows, "all_passed": all(r["passed"] for r in rows)}, [
        r["anchor"] for r in rows
    ])


def _text(report: dict) -> str:
    lines = [f"== {report['command']} =="]

    def walk(prefix, obj):
        items = obj.items() if isinstance(obj, dict) else enumerate(obj)
        for k, x in items:
            key = f"{prefix}{k}"
            if isinstance(x, (dict, list)) and x and not _flat(x):
                walk(key + ".", x)
            else:
                lines.append(f"{key:<32} {_fmt(x)}")

    walk("", report["inputs"])
    lines.append("--")
    walk("", report["results"])
    return "\n".join(lines)


def _flat(x) -> bool:
    return isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)


def _fmt(x) -> str:
    if isinstance(x, list):
        return "(" + ", ".join(_fmt(y) for y in x) + ")"
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def _selftest_text(report: dict) -> str:
    lines = []
    for r in report["results"]["anchors"]:
        lines.append(f"{'PASS' if r['passed'] else 'FAIL'}  {r['anchor']}: {r['detail']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="valgebras", description="Classify and analyze v-algebras over Q[S3].")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit canonical JSON")
        sp.set_defaults(func=fn)
        return sp

    sp = add("classify", cmd_classify, "classify the v-algebras of a group-algebra vector")
    sp.add_argument("vector", nargs="+", help="six rationals, comma separated")
    sp = add("analyze", cmd_analyze, "annihilator and identity checks for an algebra")
    sp.add_argument("algebra", help="builtin name or structure-constant JSON file")
    sp = add("dual", cmd_dual, "dual operad relations")
    sp.add_argument("type", nargs="?", help="type label such as III_1(t=0)")
    sp.add_argument("--vector", help="six rationals instead of a type")
    sp = add("tensor", cmd_tensor, "annihilator of a tensor product")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--emit-product", action="store_true", help="include the product's structure constants")
    sp = add("vw-check", cmd_vw, "Lie-admissibility witness for (v,w)-algebras")
    sp.add_argument("v")
    sp.add_argument("w")
    sp.add_argument("--algebra", help="optional algebra to test the identities on")
    add("selftest", cmd_selftest, "run the anchor suite")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        report = args.func(args)
    except (UnknownName, UnknownType) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: unknown name: {msg}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (InputError, ZeroVector, SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # invariant violations only
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.json:
        print(json.dumps(report, indent=2))
    elif args.command == "selftest":
        print(_selftest_text(report))
    else:
        print(_text(report))
    if args.command == "selftest" and not report["results"]["all_passed"]:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
