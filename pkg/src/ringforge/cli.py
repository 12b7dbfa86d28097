"""Command-line front end.

    ringforge vanish-check --ring Z2 --poly "x^2+x"
    ringforge snumber --ring "Z2[x]/(x^3+x^4)" --max-m 6 --format json
    ringforge roots-atlas --ring Z6
    ringforge verify

Exit status: 0 on success, 1 on a domain error (or a failed ``verify``),
2 on a parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import acceptance
from .errors import CoefficientOutOfRing, ParseError, RingError, SemanticError
from .parsing import format_ring_spec, parse_element, parse_poly, parse_ring_spec
from .poly import function_table
from .rings import PolyQuotientRing, ZnRing, build_ring
from .roots import ROOT_BUDGET, brute_force_root_counts, count_roots, feasible_root_counts_squarefree
from .snumber import bound_n, check_eq1_identity, z2_quotient_ring, s_of_ring, s_subring
from .vanishing import (
    DEFAULT_BUDGET,
    field_generator,
    find_nonroot,
    generator_quotient,
    is_vanishing,
    zn_vanishing_criterion,
    zp_x2_criterion,
    zp_x2_split,
)

SCHEMA = "ringforge.report/1"
PARSE_ERRORS = (ParseError, SemanticError, CoefficientOutOfRing)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _ring(args):
    R = build_ring(parse_ring_spec(args.ring))
    return R, format_ring_spec(R.spec)


def _need_poly(args):
    if args.poly is None:
        raise _UsageError(f"{args.command} requires --poly")
    return args.poly


# Each handler returns (ring, input, result, witness, method); witness None
# is left out of the report.


def cmd_ring_info(args):
    R, name = _ring(args)
    zd = R.zero_divisor_pair()
    result = {
        "order": R.order,
        "characteristic": R.characteristic,
        "is_field": zd is None,
        "zero_divisor_pair": None if zd is None else [R.format_element(c) for c in zd],
        "prime_subring": [R.format_element(c) for c in R.prime_subring_codes()],
    }
    if R.order <= 64:
        result["elements"] = [R.format_element(c) for c in range(R.order)]
    return name, {}, result, None, "direct"


def cmd_eval(args):
    R, name = _ring(args)
    F = parse_poly(_need_poly(args), R)
    if args.at is not None:
        a = parse_element(args.at, R)
        return name, {"poly": str(F), "at": str(a)}, str(F(a)), None, "horner"
    table = function_table(F)
    result = {R.format_element(a): R.format_element(v) for a, v in enumerate(table.codes)}
    return name, {"poly": str(F)}, result, None, "horner"


def cmd_vanish_check(args):
    R, name = _ring(args)
    F = parse_poly(_need_poly(args), R)
    ok = is_vanishing(F)
    # the witness carries the evidence: a non-root if there is one, and the
    # structural criterion where the ring has one
    witness = {}
    if not ok:
        a, v = find_nonroot(F)
        witness["nonroot"] = {"element": str(a), "value": str(v)}
    method = "exhaustive"
    if isinstance(R, ZnRing):
        crit, ff = zn_vanishing_criterion(F)
        witness.update(falling_factorial=ff, criterion=crit)
        method = "exhaustive+falling-factorial"
    elif isinstance(R, PolyQuotientRing) and R.modulus == (0, 0, 1):
        split = zp_x2_split(F)
        witness.update(
            J=str(split.J),
            K=str(split.K),
            **{"J'": str(split.J.derivative())},
            criterion=zp_x2_criterion(F),
        )
        method = "exhaustive+jk-split"
    return name, {"poly": str(F)}, ok, witness or None, method


def cmd_vanish_generator(args):
    R, name = _ring(args)
    V = field_generator(R)
    if args.poly is None:
        return name, {}, str(V), None, "product-of-linear-factors"
    G = parse_poly(args.poly, R)
    F = generator_quotient(G)
    return name, {"poly": str(G)}, {"generator": str(V), "quotient": str(F)}, None, "monic-division"


def _snumber_report(name, res, inputs):
    transcript = [{"m": m, "candidates": n, "found": f} for m, n, f in res.transcript]
    result = {"value": res.value, "transcript": transcript}
    return name, inputs, result, str(res.witness), res.method


def cmd_snumber(args):
    R, name = _ring(args)
    res = s_of_ring(R, max_m=args.max_m, budget=args.budget)
    return _snumber_report(name, res, {"max_m": args.max_m, "budget": args.budget})


def cmd_snumber_subring(args):
    R, name = _ring(args)
    res = s_subring(R, max_m=args.max_m, budget=args.budget, method=args.method)
    return _snumber_report(name, res, {"max_m": args.max_m, "method": args.method})


def cmd_eq1_check(args):
    R = z2_quotient_ring(args.a) if args.a >= 3 else None
    ok = check_eq1_identity(args.a)
    return format_ring_spec(R.spec), {"a": args.a}, ok, None, "exhaustive"


def cmd_roots_count(args):
    R, name = _ring(args)
    F = parse_poly(_need_poly(args), R)
    n, roots = count_roots(F)
    return name, {"poly": str(F)}, {"count": n, "roots": [str(r) for r in roots]}, None, "exhaustive"


def cmd_roots_atlas(args):
    R, name = _ring(args)
    rep = brute_force_root_counts(R, budget=args.budget)
    result = {
        "achievable": sorted(rep.achievable_counts),
        "unachievable": sorted(rep.unachievable),
    }
    method = rep.method
    if isinstance(R, ZnRing):
        try:
            formula = feasible_root_counts_squarefree(R.n)
        except RingError:
            pass
        else:
            result["formula_agrees"] = formula.achievable_counts == rep.achievable_counts
            method = "brute-force+squarefree-formula"
    witness = {str(c): str(P) for c, P in rep.per_count_witness.items()} or None
    return name, {"budget": args.budget}, result, witness, method


def cmd_bound_n(args):
    n = bound_n(args.x)
    old = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        digits = str(n)
    finally:
        sys.set_int_max_str_digits(old)
    return None, {"x": args.x}, {"n": digits, "digits": len(digits)}, None, "exact"


def cmd_verify(args):
    checks = []
    keys = args.only or [k for k, _, _ in acceptance.CRITERIA]
    for key in keys:
        c = acceptance.run_criterion(key, seed=args.seed)
        checks.append(
            {"criterion": c.key, "title": c.title, "passed": c.passed, "detail": c.detail}
        )
    return None, {"seed": args.seed, "only": args.only}, checks, None, "acceptance-replay"


HANDLERS = {
    "ring-info": cmd_ring_info,
    "eval": cmd_eval,
    "vanish-check": cmd_vanish_check,
    "vanish-generator": cmd_vanish_generator,
    "snumber": cmd_snumber,
    "snumber-subring": cmd_snumber_subring,
    "eq1-check": cmd_eq1_check,
    "roots-count": cmd_roots_count,
    "roots-atlas": cmd_roots_atlas,
    "bound-n": cmd_bound_n,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ringforge", description="Vanishing polynomials over finite rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    for verb in HANDLERS:
        p = sub.add_parser(verb, parents=[common])
        if verb not in ("eq1-check", "bound-n", "verify"):
            p.add_argument("--ring", required=True)
        if verb in ("eval", "vanish-check", "vanish-generator", "roots-count"):
            p.add_argument("--poly")
        if verb == "eval":
            p.add_argument("--at")
        if verb in ("snumber", "snumber-subring"):
            p.add_argument("--max-m", type=int, default=16)
        if verb == "snumber-subring":
            p.add_argument("--method", choices=("auto", "linear", "exhaustive"), default="auto")
        if verb == "eq1-check":
            p.add_argument("--a", type=int, required=True)
        if verb == "bound-n":
            p.add_argument("--x", type=int, required=True)
        if verb == "verify":
            p.add_argument("--only", action="append", metavar="KEY")
    return parser


def _render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key in ("schema", "elapsed_ms"):
            continue
        if key == "result" and report.get("command") == "verify":
            lines.append("result:")
            for c in value:
                status = "PASS" if c["passed"] else "FAIL"
                lines.append(f"  [{status}] {c['criterion']:>4} {c['title']}: {c['detail']}")
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, separators=(", ", ": "))
        elif isinstance(value, bool) or value is None:
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        out = json.dumps(report, indent=2) + "\n"
    else:
        out = _render_text(report)
    sys.stdout.write(out)
    sys.stdout.flush()


def _error_report(command, exc) -> dict:
    err = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        err["offset"] = exc.offset
    if isinstance(exc, _UsageError):
        err["type"] = "UsageError"
    return {"schema": SCHEMA, "command": command, "error": err}


def run_command(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json" if "--format=json" in argv or _flag_value(argv, "--format") == "json" else "text"
    command = next((a for a in argv if a in HANDLERS), None)
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        _emit(_error_report(command, exc), fmt)
        return 2
    if args.budget is None:
        args.budget = ROOT_BUDGET if args.command == "roots-atlas" else DEFAULT_BUDGET
    t0 = time.perf_counter()
    try:
        ring, inputs, result, witness, method = HANDLERS[args.command](args)
    except (_UsageError, *PARSE_ERRORS) as exc:
        _emit(_error_report(args.command, exc), args.format)
        return 2
    except RingError as exc:
        _emit(_error_report(args.command, exc), args.format)
        return 1
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "ring": ring,
        "input": inputs,
        "result": result,
    }
    if witness is not None:
        report["witness"] = witness
    report["method"] = method
    report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    _emit(report, args.format)
    if args.command == "verify" and not all(c["passed"] for c in result):
        return 1
    return 0


def _flag_value(argv, flag):
    if flag in argv:
        i = argv.index(flag)
        if i + 1 < len(argv):
            return argv[i + 1]
    return None


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
