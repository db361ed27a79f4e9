"""Command-line entry point. Every command prints one JSON document on stdout.

Exit codes: 0 success, 1 computation error or failed rows, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .errors import CycloError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(json.dumps({"status": "usage-error", "message": message}), file=sys.stderr)
        sys.exit(2)


def _class_set(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip().upper()
        if not tok.startswith("C") or not tok[1:].isdigit():
            raise argparse.ArgumentTypeError(f"bad class label {tok!r}, expected C0..C3")
        out.append(int(tok[1:]))
    return out


def _classes(a):
    from .cyclotomy import build_classes

    return build_classes(a.n, a.order).to_json(), True


def _decompose(a):
    from .cyclotomy import quartic_decomposition

    return quartic_decomposition(a.n).to_json(), True


def _code(a):
    from .codes import code_from_sequence
    from .field import gf
    from .sequences import SequenceSpec, p_rank, support

    spec = SequenceSpec(a.seq, a.n, gf(a.p ** a.m), a.rho)
    code = code_from_sequence(spec)
    out = code.to_json()
    out["name"] = spec.label()
    out["p_rank"] = p_rank(support(spec), a.n, a.p)
    return out, True


def _minweight(a):
    from .codes import CyclicCode
    from .weights import min_weight

    data = json.loads(Path(a.code_file).read_text())
    if "result" in data and isinstance(data["result"], dict):
        data = data["result"]
    code = CyclicCode.from_json(data)
    rep = min_weight(code, a.tier, seed=a.seed, threads=a.threads)
    out = rep.to_json()
    if not a.distribution:
        out.pop("distribution", None)
    if not a.timing:
        out.pop("time_ms", None)
    return out, True


def _bounds(a):
    from .bounds import o4_bounds
    from .field import gf

    return o4_bounds(a.n, gf(a.q), with_x_minus_1=a.affine).to_json(), True


def _verify(a):
    from .verify import theorem_sweep

    rows, failed = [], 0
    for (p, m, n, kind, rho), o in theorem_sweep(a.p, a.n_max):
        row = {"p": p, "m": m, "n": n, "kind": kind, "rho": rho}
        if isinstance(o, str):
            row["verdict"] = o
        else:
            row.update(theorem=o.case.theorem, case=o.case.case, verdict=o.verdict,
                       linear_span=o.linear_span, gcd_factors=sorted(o.computed_factors))
            failed += o.verdict == "mismatch"
        rows.append(row)
    return {"rows": rows, "checked": len(rows), "mismatches": failed}, failed == 0


def _repro(a):
    from .verify import reproduce_examples

    outs = reproduce_examples(a.example or None, weights=not a.no_weights, tier=a.tier, seed=a.seed,
                              threads=a.threads)
    rows = []
    for o in outs:
        j = o.to_json()
        if not a.timing:
            j.pop("time")
        rows.append(j)
    failed = sum(not o.ok for o in outs)
    return {"rows": rows, "passed": len(outs) - failed, "failed": failed}, failed == 0


def _prank(a):
    from .sequences import class_union, p_rank

    return p_rank(class_union(a.n, a.set), a.n, a.p), True


_INT = {"type": "integer"}
_BOUND = {"anyOf": [{"type": "integer"}, {"type": "null"},
                    {"type": "array", "items": {"type": ["integer", "null"]}, "minItems": 2, "maxItems": 2}]}

RESULT_SCHEMAS = {
    "classes": {"type": "object", "required": ["n", "order", "generator", "classes"],
                "properties": {"n": _INT, "order": _INT, "generator": _INT,
                               "classes": {"type": "array", "items": {"type": "array", "items": _INT}}}},
    "decompose": {"type": "object", "required": ["n", "u", "v"],
                  "properties": {"n": _INT, "u": _INT, "v": _INT}},
    "code": {"type": "object", "required": ["n", "q", "k", "generator", "p_rank"],
             "properties": {"n": _INT, "q": _INT, "k": _INT, "generator": {"type": "string"},
                            "modulus": {"type": "string"}, "name": {"type": "string"}, "p_rank": _INT}},
    "minweight": {"type": "object", "required": ["n", "k", "q", "strategy", "d", "d_even", "d_odd"],
                  "properties": {"n": _INT, "k": _INT, "q": _INT,
                                 "strategy": {"enum": ["direct", "dual-macwilliams", "bounds-only"]},
                                 "d": _BOUND, "d_even": _BOUND, "d_odd": _BOUND, "words_enumerated": _INT,
                                 "distribution": {"type": "array", "items": {"type": "string"}},
                                 "notes": {"type": "array", "items": {"type": "string"}}}},
    "bounds": {"type": "object", "required": ["bound", "params", "literal", "analytic", "conditions",
                                              "applicable"]},
    "verify": {"type": "object", "required": ["rows", "checked", "mismatches"],
               "properties": {"checked": _INT, "mismatches": _INT,
                              "rows": {"type": "array", "items": {
                                  "type": "object", "required": ["p", "m", "n", "kind", "rho", "verdict"],
                                  "properties": {"verdict": {"enum": ["exact-match", "swap-match", "mismatch",
                                                                      "out-of-hypothesis"]}}}}}},
    "repro": {"type": "object", "required": ["rows", "passed", "failed"],
              "properties": {"passed": _INT, "failed": _INT,
                             "rows": {"type": "array", "items": {
                                 "type": "object", "required": ["id", "params", "expected", "computed", "verdict",
                                                                "checks"],
                                 "properties": {"verdict": {"enum": ["pass", "fail"]}}}}}},
    "prank": _INT,
}


def command_schema(command: str) -> dict:
    """JSON schema of the document printed by ``command``."""
    return {
        "type": "object",
        "required": ["command", "argv", "status"],
        "properties": {
            "command": {"const": command},
            "argv": {"type": "array", "items": {"type": "string"}},
            "status": {"enum": ["ok", "failed", "error"]},
            "result": RESULT_SCHEMAS[command],
            "error": {"type": "object", "required": ["error", "message"]},
            "time_ms": {"type": "number"},
        },
    }


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cyclocode", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--threads", type=int, default=None, help="enumeration workers (default: all cores)")
    ap.add_argument("--timing", action="store_true", help="include wall-clock times in the output")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classes", help="cyclotomic classes of order N mod n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--order", type=int, default=4)
    s.set_defaults(func=_classes)

    s = sub.add_parser("decompose", help="n = u^2 + 4 v^2 with u = 1 mod 4")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=_decompose)

    s = sub.add_parser("code", help="cyclic code of a sequence")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seq", choices=("s1", "s2"), required=True)
    s.add_argument("--rho", type=int, choices=(0, 1), default=0)
    s.set_defaults(func=_code)

    s = sub.add_parser("minweight", help="minimum weight of a code given as JSON")
    s.add_argument("--code-file", required=True)
    s.add_argument("--tier", choices=("fast", "extended"), default="fast")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--distribution", action="store_true", help="include the weight distribution")
    s.set_defaults(func=_minweight)

    s = sub.add_parser("bounds", help="weight bounds for the order-4 cyclotomic codes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--affine", action="store_true", help="bound for the code including x - 1")
    s.set_defaults(func=_bounds)

    s = sub.add_parser("verify", help="check the case predictions against computed gcds")
    s.add_argument("--p", type=int, nargs="+", default=[2, 3, 5, 7])
    s.add_argument("--n-max", type=int, default=500)
    s.set_defaults(func=_verify)

    s = sub.add_parser("repro", help="rerun the worked examples")
    s.add_argument("--example", action="append", help="row id or label; repeatable")
    s.add_argument("--tier", choices=("fast", "extended"), default="fast")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--no-weights", action="store_true", help="skip minimum-weight computations")
    s.set_defaults(func=_repro)

    s = sub.add_parser("prank", help="p-rank of a union of order-4 classes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--set", type=_class_set, required=True, help="e.g. C0,C1")
    s.add_argument("--p", type=int, required=True)
    s.set_defaults(func=_prank)
    return ap


def run(argv: list[str] | None = None) -> tuple[int, dict]:
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    doc = {"command": args.command, "argv": list(sys.argv[1:] if argv is None else argv)}
    try:
        result, ok = args.func(args)
    except (CycloError, KeyError, ValueError) as exc:
        err = exc.to_json() if isinstance(exc, CycloError) else {"error": type(exc).__name__,
                                                                 "message": str(exc)}
        doc.update(status="error", error=err)
        code = 1
    else:
        doc.update(status="ok" if ok else "failed", result=result)
        code = 0 if ok else 1
    if args.timing:
        doc["time_ms"] = round((time.perf_counter() - t0) * 1e3, 3)
    return code, doc


def main(argv: list[str] | None = None) -> int:
    code, doc = run(argv)
    print(json.dumps(doc, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
