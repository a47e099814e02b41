"""Command line interface: parse an algebra file, run one analysis, emit a
deterministic report.

Reports are JSON with sorted keys and exact coefficient strings, so equal
inputs produce byte-identical output.  Exit codes: 0 success, 1 analysis
precondition failure, 2 parse error.  The oracle point budget can be
overridden with the ``NOVIKOV_ORACLE_BUDGET`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .constructions import gd_construct
from .core import verify_identity
from .dsl import (ParseError, doc_from_algebra, parse_algebra_source,
                  parse_element_combo, serialize_algebra_doc)
from .errors import WorkbenchError
from .exactlin import Subspace
from .ideals import chain, classify, ideal_closure
from .oracle import (DEFAULT_BUDGET, bruteforce_baer_tower, bruteforce_nilpotents,
                     quotient_intersection)
from .radicals import (baer_radical, bound_certificates, lqr_radical,
                       quasi_inverse_lift, quasiregular_solve)

ENV_BUDGET = "NOVIKOV_ORACLE_BUDGET"


# ---------------------------------------------------------------------------
# rendering helpers (everything lands in JSON-ready structures)
# ---------------------------------------------------------------------------

def _vec(field, v):
    return [field.fmt(a) for a in v]


def _subspace(S):
    return {"ambient_dim": S.ambient_dim, "dim": S.dim,
            "basis": [_vec(S.field, r) for r in S.rows]}


def _identity_report(A, rep):
    out = {"ok": rep.ok}
    if rep.failure is not None:
        out["failure"] = {
            "law": rep.failure.law,
            "indices": list(rep.failure.indices),
            "lhs": _vec(A.field, rep.failure.lhs),
            "rhs": _vec(A.field, rep.failure.rhs),
        }
    return out


def _classify(report):
    return {key: ({"holds": idx is not None}
                  | ({"index": idx} if idx is not None else {}))
            for key, idx in report.as_dict().items()}


def _certificate(A, cert):
    F = A.field

    def render(value):
        if isinstance(value, Subspace):
            return _subspace(value)
        if isinstance(value, tuple):
            return _vec(F, value)
        if isinstance(value, list):
            return [render(v) for v in value]
        if isinstance(value, dict):
            return {k: render(v) for k, v in value.items()}
        return value

    return {"claim": cert.claim, "data": {k: render(v) for k, v in cert.data.items()}}


def _base_payload(doc, command):
    return {
        "version": __version__,
        "command": command,
        "field": doc.field.spec_string(),
        "algebra": {"dim": doc.dim, "basis": list(doc.basis)},
    }


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def _cmd_check(doc, options):
    A = doc.to_algebra()
    checks = {kind: _identity_report(A, verify_identity(A, kind))
              for kind in ("novikov", "eq1", "associative", "commutative")}
    maps = {}
    for name in sorted(doc.maps):
        maps[name] = {"leibniz": _identity_report(
            A, verify_identity(A, "leibniz", derivation=doc.map_matrix(name)))}
    payload = _base_payload(doc, "check")
    payload["checks"] = checks
    payload["maps"] = maps
    return payload


def _cmd_series(doc, options):
    A = doc.to_algebra()
    rep = chain(A, options["kind"])
    payload = _base_payload(doc, "series")
    payload["kind"] = options["kind"]
    payload["terms"] = [_subspace(t) for t in rep.terms]
    payload["stabilized"] = rep.stabilized
    payload["index"] = rep.index
    payload["route"] = f"successive {options['kind']} terms until zero or a fixed point"
    return payload


def _cmd_radical(doc, options):
    A = doc.to_algebra()
    report = baer_radical(A) if options["kind"] == "baer" else lqr_radical(A)
    payload = _base_payload(doc, "radical")
    payload["kind"] = options["kind"]
    payload["radical"] = _subspace(report.radical)
    payload["route"] = report.route
    payload["classify"] = _classify(classify(A))
    payload["witnesses"] = [_certificate(A, c) for c in report.witnesses]
    return payload


def _cmd_quasi_inverse(doc, options):
    A = doc.to_algebra()
    x = parse_element_combo(options["element"], doc)
    payload = _base_payload(doc, "quasi-inverse")
    payload["element"] = _vec(doc.field, x)
    payload["side"] = options["side"]
    y = quasiregular_solve(A, x, side=options["side"])
    payload["quasiregular"] = y is not None
    payload["solution"] = None if y is None else _vec(doc.field, y)
    payload["route"] = "linear solve against the multiplication operator"
    if options.get("lift"):
        if options["side"] != "left":
            raise WorkbenchError("lifting applies to the left side only")
        lifted = quasi_inverse_lift(A, x)
        if lifted is None:
            payload["lift"] = None
        else:
            ylift, cert = lifted
            payload["lift"] = {"solution": _vec(doc.field, ylift),
                               "certificate": _certificate(A, cert)}
        payload["route"] += "; lift through the commutative quotient"
    return payload


def _cmd_gd(doc, options):
    A = doc.to_algebra()
    name = options["derivation"]
    if name not in doc.maps:
        raise WorkbenchError(f"no map named {name!r} in the input")
    result = gd_construct(A, doc.map_matrix(name))
    payload = _base_payload(doc, "gd")
    payload["derivation"] = name
    payload["algebra_source"] = serialize_algebra_doc(doc_from_algebra(result))
    payload["checks"] = {
        kind: _identity_report(result, verify_identity(result, kind))
        for kind in ("novikov", "eq1")
    }
    payload["route"] = "product x . y = x d(y) on the commutative input"
    return payload


def _cmd_certify(doc, options):
    A = doc.to_algebra()
    x = parse_element_combo(options["element"], doc)
    ideal = None
    if options.get("ideal"):
        gens = [parse_element_combo(g, doc) for g in options["ideal"]]
        ideal = ideal_closure(A, Subspace.span(doc.field, gens, doc.dim))
    cert = bound_certificates(A, x, options["n"], ideal=ideal,
                              claim=options["claim"])
    payload = _base_payload(doc, "certify")
    payload["claim"] = options["claim"]
    payload["n"] = options["n"]
    payload["certificate"] = _certificate(A, cert)
    payload["route"] = ("ideal generated by the supplied combinations"
                        if ideal is not None else "element powers only")
    return payload


def _cmd_oracle(doc, options):
    A = doc.to_algebra()
    budget = options.get("budget")
    payload = _base_payload(doc, "oracle")
    payload["task"] = options["task"]
    payload["budget"] = DEFAULT_BUDGET if budget is None else budget
    if options["task"] == "tower":
        tower, radical = bruteforce_baer_tower(A, budget)
        payload["tower"] = [_subspace(t) for t in tower]
        payload["radical"] = _subspace(radical)
        payload["route"] = "sum of all trivial ideals, iterated through quotients"
    elif options["task"] == "nilpotents":
        nil = bruteforce_nilpotents(A, budget)
        payload["count"] = len(nil)
        payload["elements"] = [_vec(doc.field, v) for v in nil]
        payload["route"] = "direct power iteration over every point"
    else:
        kind = options.get("kind")
        if kind not in ("domain", "field"):
            raise WorkbenchError("intersection task needs --kind domain|field")
        payload["kind"] = kind
        payload["intersection"] = _subspace(quotient_intersection(A, kind, budget))
        payload["route"] = f"intersection of ideals with {kind} quotient"
    return payload


_COMMANDS = {
    "check": _cmd_check,
    "series": _cmd_series,
    "radical": _cmd_radical,
    "quasi-inverse": _cmd_quasi_inverse,
    "gd": _cmd_gd,
    "certify": _cmd_certify,
    "oracle": _cmd_oracle,
}


def run_report(doc, command, options=None):
    """Run one command against a parsed document; returns (JSON text, exit code)."""
    options = options or {}
    try:
        payload = _COMMANDS[command](doc, options)
        code = 0
    except WorkbenchError as exc:
        payload = _base_payload(doc, command)
        payload["error"] = {"code": exc.code, "message": str(exc)}
        code = 1
    except ParseError as exc:  # malformed element/ideal combination options
        payload = _base_payload(doc, command)
        payload["error"] = {"code": "PARSE_ERROR", "message": exc.message,
                            "line": exc.line, "col": exc.col}
        code = 2
    return json.dumps(payload, sort_keys=True, indent=2) + "\n", code


def _render_human(payload, out):
    def walk(value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            for k in sorted(value):
                v = value[k]
                if isinstance(v, (dict, list)):
                    out.write(f"{pad}{k}:\n")
                    walk(v, indent + 1)
                else:
                    out.write(f"{pad}{k}: {v}\n")
        elif isinstance(value, list):
            for v in value:
                if isinstance(v, (dict, list)):
                    walk(v, indent)
                    out.write("\n")
                else:
                    out.write(f"{pad}- {v}\n")
        else:
            out.write(f"{pad}{value}\n")

    walk(payload, 0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="novikov",
        description="Exact analysis of finite-dimensional Novikov algebras "
                    "defined by structure constants.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("path", help="algebra definition file")
        p.add_argument("--json", action="store_true",
                       help="emit the machine-readable JSON report")
        p.add_argument("--threads", type=int, default=1,
                       help="worker hint; analysis is deterministic regardless")

    common(sub.add_parser("check", help="run the identity suite"))

    p = sub.add_parser("series", help="power/series chains")
    common(p)
    p.add_argument("--kind", required=True,
                   choices=["right", "derived", "lie", "full"])

    p = sub.add_parser("radical", help="radical computation")
    common(p)
    p.add_argument("--kind", required=True, choices=["baer", "lqr"])

    p = sub.add_parser("quasi-inverse", help="solve x + y = yx or x + y = xy")
    common(p)
    p.add_argument("--element", required=True)
    p.add_argument("--side", required=True, choices=["left", "right"])
    p.add_argument("--lift", action="store_true",
                   help="also lift through the commutative quotient")

    p = sub.add_parser("gd", help="build the derived Novikov product")
    common(p)
    p.add_argument("--derivation", required=True, help="named map from the file")

    p = sub.add_parser("certify", help="power-bound certificates")
    common(p)
    p.add_argument("--claim", required=True,
                   choices=["lemma1", "lemma3", "theorem1"])
    p.add_argument("--element", required=True)
    p.add_argument("--ideal", action="append",
                   help="generator combination; may repeat")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("oracle", help="brute-force ground truth (prime fields)")
    common(p)
    p.add_argument("--task", required=True,
                   choices=["tower", "nilpotents", "intersection"])
    p.add_argument("--kind", choices=["domain", "field"],
                   help="quotient kind for the intersection task")

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("thread count must be positive", file=sys.stderr)
        return 1
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return 2
    try:
        doc = parse_algebra_source(text)
    except ParseError as exc:
        if args.json:
            payload = {"version": __version__,
                       "error": {"code": "PARSE_ERROR", "message": exc.message,
                                 "line": exc.line, "col": exc.col}}
            sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        else:
            print(f"parse error: {exc}", file=sys.stderr)
        return 2

    options = {k: v for k, v in vars(args).items()
               if k not in ("command", "path", "json", "threads")}
    if args.command == "oracle":
        env = os.environ.get(ENV_BUDGET)
        if env is not None:
            try:
                options["budget"] = int(env)
            except ValueError:
                print(f"{ENV_BUDGET} must be an integer", file=sys.stderr)
                return 1
    text_out, code = run_report(doc, args.command, options)
    if args.json:
        sys.stdout.write(text_out)
    else:
        _render_human(json.loads(text_out), sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
