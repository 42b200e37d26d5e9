"""Command-line interface.

Exit status: 0 when every record produced a result (an Undetermined verdict
included), 2 when some input was rejected, 1 on an internal error.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .analysis import analyze, eckardt_profile, summarize_discriminant
from .conic import (
    ECKARDT_RING,
    LEDGER_RING,
    STANDARD_IDENTITIES,
    IntersectionLedger,
    eckardt_homogenize,
    ledger_eval,
    ledger_eval_product,
)
from .errors import GeometryObstruction, InputRejected, ParseError, PreconditionViolation
from .io.parse import Record, parse_polynomial, split_records
from .io.report import (
    SCHEMA,
    discriminant_json,
    dumps,
    normal_form_json,
    profile_json,
    render_text,
    report_json,
    scalar,
    witness_json,
)
from .lattice import MAX_POINTS, lattice_check_surf
from .normal_form import normalize
from .singularities import DEFAULT_JET_ORDER
from .verdict import Flags, build_witness, verify_witness
from .wps import validate

EXIT_OK, EXIT_INTERNAL, EXIT_REJECTED = 0, 1, 2


# -- per-record commands -----------------------------------------------------------


def _analyze(F, opts) -> dict:
    flags = Flags(opts["assert_terminal"], opts["assert_q_factorial"])
    r = analyze(F, flags, jet_order=opts["jet_order"], timing=opts["timing"])
    return report_json(r, opts["jet_order"])


def _discriminant(F, opts) -> dict:
    X = validate(F)
    nf = normalize(X)
    out = {"normal_form": normal_form_json(nf), "discriminant": discriminant_json(summarize_discriminant(nf))}
    out["convention"] = opts["convention"]
    out["selected"] = out["discriminant"][opts["convention"]]
    return out


def _witness(F, opts) -> dict:
    X = validate(F)
    nf = normalize(X)
    try:
        w = build_witness(nf)
    except PreconditionViolation as exc:
        return {"witness": None, "verified": None, "reason": str(exc), "case": nf.case}
    return {"witness": witness_json(w), "verified": verify_witness(w, X), "case": nf.case}


def _eckardt(F, opts) -> dict:
    X = eckardt_homogenize(F)
    out = {"sextic": str(X.F)}
    if opts["profile"]:
        check = eckardt_profile(X, opts["jet_order"])
        out["profile"] = profile_json(check.profile)
        out["expected_profile"] = check.ok
        out["detail"] = check.detail
    return out


RECORD_COMMANDS = {
    "analyze": (_analyze, None),
    "discriminant": (_discriminant, None),
    "witness": (_witness, None),
    "eckardt": (_eckardt, ECKARDT_RING),
}


def run_record(command: str, record: Record, opts: dict) -> tuple[dict, int]:
    """Run one record; never raises. Returns the output dictionary and an exit code."""
    fn, ring = RECORD_COMMANDS[command]
    try:
        if ring is None:
            F = parse_polynomial(record.text, line=record.line)
        else:
            F = parse_polynomial(record.text, ring, line=record.line)
        out = fn(F, opts)
        code = EXIT_OK
    except InputRejected as exc:
        out = {"error": _error_json(exc, "input")}
        code = EXIT_REJECTED
    except GeometryObstruction as exc:
        out = {"error": _error_json(exc, "geometry")}
        code = EXIT_OK
    except Exception as exc:  # noqa: BLE001 - reported as an internal error
        out = {"error": _error_json(exc, "internal")}
        if opts.get("debug"):
            out["error"]["traceback"] = traceback.format_exc()
        code = EXIT_INTERNAL
    out.setdefault("schema", SCHEMA)
    out.setdefault("command", command)
    out["record_line"] = record.line
    return out, code


def _error_json(exc: Exception, category: str) -> dict:
    out = {"category": category, "type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        out["line"] = exc.line
        out["column"] = exc.column
    offending = getattr(exc, "offending", None)
    if offending:
        out["offending_exponents"] = [list(e) for e in offending]
    return out


def _run_batch(command: str, records: list[Record], opts: dict, jobs: int) -> tuple[list, int]:
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_record, [command] * len(records), records, [opts] * len(records)))
    else:
        results = [run_record(command, r, opts) for r in records]
    code = EXIT_OK
    for _, c in results:
        if c == EXIT_INTERNAL:
            code = EXIT_INTERNAL
        elif c == EXIT_REJECTED and code == EXIT_OK:
            code = EXIT_REJECTED
    return [o for o, _ in results], code


# -- standalone commands -------------------------------------------------------------


def _ledger(args) -> tuple[dict, int]:
    L = IntersectionLedger(a3=Fraction(args.a3), e3=Fraction(args.e3))
    rows = []
    for name, factors, expected in STANDARD_IDENTITIES:
        value = ledger_eval_product(L, *factors)
        rows.append({"expression": name, "value": scalar(value), "expected": scalar(expected)})
    for text in args.expr or []:
        try:
            value = ledger_eval(L, parse_polynomial(text, LEDGER_RING))
        except (InputRejected, PreconditionViolation) as exc:
            return {"schema": SCHEMA, "command": "ledger", "error": _error_json(exc, "input")}, EXIT_REJECTED
        rows.append({"expression": text, "value": scalar(value), "expected": None})
    return {
        "schema": SCHEMA,
        "command": "ledger",
        "values": {"A^3": scalar(L.a3), "A^2*E": scalar(L.a2e), "A*E^2": scalar(L.ae2), "E^3": scalar(L.e3)},
        "identities": rows,
    }, EXIT_OK


def _lattice(args) -> tuple[dict, int]:
    ls = [args.l] if args.l is not None else list(range(MAX_POINTS + 1))
    out = []
    for l in ls:
        rep = lattice_check_surf(l, args.lattice_bound)
        out.append({
            "l": rep.l,
            "bound": rep.bound,
            "k_squared": rep.k_squared,
            "enumerated": rep.enumerated,
            "candidates": rep.candidates,
            "violations": [
                {"d1": str(v.d1), "d2": str(v.d2), "-K.d1": v.minus_k_d1, "-K.d2": v.minus_k_d2}
                for v in rep.violations
            ],
            "minus2_classes": rep.minus2_classes,
            "parity_failures": rep.parity_failures,
            "side_conditions": rep.side_conditions,
            "ok": rep.ok,
        })
    return {"schema": SCHEMA, "command": "lattice-check", "results": out}, EXIT_OK


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--debug", action="store_true", help="include tracebacks of internal errors")

    records = argparse.ArgumentParser(add_help=False)
    records.add_argument("expression", nargs="?", help="polynomial expression (or use --input)")
    records.add_argument("--input", metavar="FILE", help="file of records ('-' for stdin)")
    records.add_argument("--jobs", type=int, default=1, help="worker processes for batch input")
    records.add_argument("--jet-order", type=int, default=DEFAULT_JET_ORDER)

    p = argparse.ArgumentParser(prog="sextic", description="Rationality analysis of sextics in P(1,1,2,2,3).")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common, records], help="full pipeline")
    a.add_argument("--assert-terminal", action="store_true")
    a.add_argument("--assert-q-factorial", action="store_true")
    a.add_argument("--timing", action="store_true", help="include wall-clock time in the report")

    d = sub.add_parser("discriminant", parents=[common, records], help="discriminant curve")
    d.add_argument("--convention", choices=("paper", "conic"), default="paper")

    sub.add_parser("witness", parents=[common, records], help="rationality witness")

    e = sub.add_parser("eckardt", parents=[common, records], help="homogenize x3^2 + phi(x1,x2,y2)")
    e.add_argument("--profile", action="store_true", help="also check the singularity profile")

    led = sub.add_parser("ledger", parents=[common], help="intersection ledger identities")
    led.add_argument("--a3", default="1/2")
    led.add_argument("--e3", default="4")
    led.add_argument("--expr", action="append", help="extra cubic in A, E to evaluate")

    lat = sub.add_parser("lattice-check", parents=[common], help="Picard-lattice enumeration")
    lat.add_argument("--l", type=int, choices=range(MAX_POINTS + 1))
    lat.add_argument("--lattice-bound", type=int, default=8)
    return p


def _read_records(args) -> list[Record]:
    if args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        return list(split_records(text))
    if args.expression is None:
        raise InputRejected("no expression given (positional argument or --input FILE)")
    return [Record(args.expression, 1)]


def _emit(obj: dict, as_json: bool, out) -> None:
    out.write((dumps(obj) if as_json else render_text(obj)) + "\n")


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ledger":
            obj, code = _ledger(args)
            _emit(obj, args.json, out)
            return code
        if args.command == "lattice-check":
            obj, code = _lattice(args)
            _emit(obj, args.json, out)
            return code
        try:
            records = _read_records(args)
        except (InputRejected, OSError) as exc:
            _emit({"schema": SCHEMA, "command": args.command, "error": _error_json(exc, "input")}, args.json, out)
            return EXIT_REJECTED
        opts = {
            "assert_terminal": getattr(args, "assert_terminal", False),
            "assert_q_factorial": getattr(args, "assert_q_factorial", False),
            "jet_order": args.jet_order,
            "timing": getattr(args, "timing", False),
            "convention": getattr(args, "convention", "paper"),
            "profile": getattr(args, "profile", False),
            "debug": args.debug,
        }
        results, code = _run_batch(args.command, records, opts, args.jobs)
        if len(results) == 1 and args.input is None:
            _emit(results[0], args.json, out)
        elif args.json:
            _emit({"schema": SCHEMA, "command": args.command, "records": results}, True, out)
        else:
            for i, obj in enumerate(results):
                if i:
                    out.write("\n")
                out.write(f"# record {i + 1} (line {obj['record_line']})\n")
                _emit(obj, False, out)
        return code
    except Exception as exc:  # noqa: BLE001
        _emit({"schema": SCHEMA, "command": args.command, "error": _error_json(exc, "internal")}, args.json, out)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
