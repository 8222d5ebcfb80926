"""Command line interface.

::

    semigraded check FILE [--bound D]
    semigraded analyze FILE nf EXPR
    semigraded analyze FILE rpp N [--bound D]
    semigraded analyze FILE center [--max-exp M]
    semigraded analyze FILE localize --den C EXPR
    semigraded schematic [FILE] [--two-gen=d,e,f,g --field F] --mode MODE ...

Human readable text goes to stdout, diagnostics to stderr, and a JSON report
is written only when ``--json PATH`` is given (``-`` for stdout).

Exit codes: 0 pass or positive verdict, 1 input error, 2 validation failure,
3 negative verdict, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .errors import SemigradedError
from .exact import QQ, field_from_id
from .grading import central_powers_search, r_double_prime, render_span
from .localization import central_denominator, frac_decompose, parse_fraction
from .ncpoly import decompose, normal_form
from .presentation import Presentation, parse_presentation, presentation_digest, validate
from .schematic import (
    EVIDENCE_SCHEMATIC,
    INCONCLUSIVE,
    SCHEMATIC,
    TwoGenParams,
    bounded_schematic_evidence,
    central_powers_criterion,
    classify_two_gen,
    ore_set_spec,
    two_gen_params_from,
)

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_NEGATIVE, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4
REPORT_SCHEMA = "semigraded-report/1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class _Abort(Exception):
    def __init__(self, code, message="", usage=False):
        super().__init__(message)
        self.code = code
        self.usage = usage


def _load(path) -> Presentation:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Abort(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_presentation(text)
    except SemigradedError as exc:
        raise _Abort(EXIT_INPUT, f"{path}: {exc}") from None


def _validated(p: Presentation, bound: int) -> None:
    report = validate(p, max(bound, 2))
    if not report.ok:
        for word, diff, kind in report.violations[:10]:
            print(f"validation failure ({kind}) at {word}: {diff}", file=sys.stderr)
        raise _Abort(EXIT_INVALID, f"presentation fails validation at bound {bound}")


def _verdict_payload(v) -> dict:
    cert = v.certificate
    ev = cert.evidence
    evidence = None
    if ev is not None:
        evidence = {
            "verdict": ev.verdict,
            "t": ev.t,
            "m": ev.m,
            "bound": ev.D,
            "fail_degree": ev.fail_degree,
            "witness": None if ev.witness is None else str(ev.witness),
            "multiplier_degree_used": ev.multiplier_degree_used,
            "capped": ev.capped,
        }
    return {
        "status": v.status,
        "certificate": {
            "kind": cert.kind,
            "case": cert.case,
            "witnesses": [w.render() for w in cert.witnesses],
            "t": cert.t,
            "m": cert.m,
            "bound": cert.bound,
            "evidence": evidence,
        },
        "narrative": v.narrative,
        "warnings": list(v.warnings),
    }


def cmd_check(args):
    p = _load(args.file)
    report = validate(p, args.bound)
    lines = []
    if report.ok:
        lines.append(f"PASS: confluent and semi-graded up to degree {args.bound}")
        code = EXIT_OK
    else:
        lines.append(f"FAIL: {len(report.violations)} violation(s) at bound {args.bound}")
        shown = report.violations[:20]
        lines += [f"  {kind} witness {word}: {diff}" for word, diff, kind in shown]
        if len(report.violations) > len(shown):
            lines.append(f"  ... {len(report.violations) - len(shown)} more in the JSON report")
        code = EXIT_INVALID
    result = {
        "ok": report.ok,
        "confluent_to_degree": report.confluent_to_degree,
        "sg_axiom_verified_to_degree": report.sg_axiom_verified_to_degree,
        "violations": [{"kind": k, "word": w, "discrepancy": d} for w, d, k in report.violations],
    }
    return code, lines, p, {"bound": args.bound}, result


def cmd_analyze(args):
    p = _load(args.file)
    _validated(p, args.bound)
    params = {"bound": args.bound, "analysis": args.analysis}
    if args.analysis == "nf":
        poly = normal_form(p, args.expr)
        params["expression"] = args.expr
        result = {"normal_form": str(poly), "components": {str(d): str(c) for d, c in decompose(poly).items()}}
        return EXIT_OK, [str(poly)], p, params, result
    if args.analysis == "rpp":
        rep = r_double_prime(p, args.n, args.bound)
        params["degree"] = args.n
        result = {
            "degree": rep.degree,
            "bound": rep.bound,
            "side": rep.side,
            "upper_bound": render_span(p, rep.upper_bound),
            "lower_bound": render_span(p, rep.lower_bound),
            "exact": rep.exact,
        }
        return EXIT_OK, [rep.render(p)], p, params, result
    if args.analysis == "center":
        found = central_powers_search(p, args.max_exp)
        params["max_exp"] = args.max_exp
        parts = []
        for name, w in zip(p.generators, found):
            parts.append(f"{w.render()} central" if w else f"{name}: no central power up to exponent {args.max_exp}")
        result = {"central_powers": {name: (w.exponent if w else None) for name, w in zip(p.generators, found)}}
        return EXIT_OK, ["; ".join(parts)], p, params, result
    # localize
    den = central_denominator(p, args.den)
    frac = parse_fraction(den, args.expr)
    comps = frac_decompose(frac)
    params.update(denominator=str(den), expression=args.expr)
    lines = [str(frac)] + [f"  degree {d}: {c}" for d, c in comps.items()]
    result = {"fraction": str(frac), "components": {str(d): str(c) for d, c in comps.items()}}
    return EXIT_OK, lines, p, params, result


def _parse_two_gen(text, field):
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 4:
        raise _Abort(EXIT_INPUT, "--two-gen expects four comma separated values d,e,f,g", usage=True)
    from fractions import Fraction

    try:
        return TwoGenParams.of(*(Fraction(s) for s in parts), field=field)
    except (ValueError, ZeroDivisionError) as exc:
        raise _Abort(EXIT_INPUT, f"bad --two-gen value: {exc}") from None


def cmd_schematic(args):
    field = field_from_id(args.field) if args.field else QQ
    if args.two_gen and args.file:
        raise _Abort(EXIT_INPUT, "give either a presentation file or --two-gen, not both", usage=True)
    if args.two_gen:
        tg = _parse_two_gen(args.two_gen, field)
        p = tg.presentation()
    elif args.file:
        p = _load(args.file)
        tg = None
    else:
        raise _Abort(EXIT_INPUT, "a presentation file or --two-gen is required", usage=True)
    params = {"mode": args.mode, "bound": args.bound}
    if args.mode == "classify":
        tg = tg or two_gen_params_from(p)
        params.update(d=str(tg.d), e=str(tg.e), f=str(tg.f), g=str(tg.g), field=tg.field.field_id)
        verdict = classify_two_gen(tg)
    else:
        _validated(p, min(args.bound, 6) if args.mode == "central-powers" else args.bound)
        if args.mode == "central-powers":
            params["max_exp"] = args.max_exp
            verdict = central_powers_criterion(p, args.max_exp, args.bound)
        else:
            if not args.ore or args.t is None:
                raise _Abort(EXIT_INPUT, "evidence mode needs --ore and -t", usage=True)
            ore = ore_set_spec(p, [s for s in args.ore.split(",") if s.strip()])
            params.update(ore=str(ore), t=args.t, m=args.m)
            verdict = bounded_schematic_evidence(p, ore, args.t, args.m, args.bound)
    cert = verdict.certificate
    label = cert.kind.lower().replace("_", " ")
    if cert.case:
        label += f", {cert.case if not cert.case.isdigit() else 'case (' + cert.case + ')'}"
    lines = [f"{verdict.status} [{label}]", f"  {verdict.narrative}"]
    if cert.evidence is not None:
        lines.append(f"  evidence at bound {cert.evidence.D}: {cert.evidence.render()}")
    lines += [f"  note: {w}" for w in verdict.warnings]
    if verdict.status in (SCHEMATIC, EVIDENCE_SCHEMATIC):
        code = EXIT_OK
    elif verdict.status == INCONCLUSIVE:
        code = EXIT_INCONCLUSIVE
    else:
        code = EXIT_NEGATIVE
    return code, lines, p, params, _verdict_payload(verdict)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a JSON report to PATH ('-' for stdout)")
    common.add_argument("--timing", action="store_true", help="record wall time in the JSON report")

    parser = _Parser(prog="semigraded", description="Exact analysis of finitely presented semi-graded algebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", parents=[common], help="validate a presentation")
    check.add_argument("file")
    check.add_argument("--bound", type=int, default=6)
    check.set_defaults(func=cmd_check)

    analyze = sub.add_parser("analyze", help="normal forms, R'' slices, central powers, fractions")
    analyze.add_argument("file")
    kinds = analyze.add_subparsers(dest="analysis", required=True, parser_class=_Parser)
    nf = kinds.add_parser("nf", parents=[common], help="normal form of an expression")
    nf.add_argument("expr")
    nf.add_argument("--bound", type=int, default=6)
    rpp = kinds.add_parser("rpp", parents=[common], help="bounds on R''_n")
    rpp.add_argument("n", type=int)
    rpp.add_argument("--bound", type=int, default=8)
    center = kinds.add_parser("center", parents=[common], help="least central powers of the generators")
    center.add_argument("--max-exp", type=int, default=6)
    center.add_argument("--bound", type=int, default=6)
    loc = kinds.add_parser("localize", parents=[common], help="canonical fraction over the powers of a central monomial")
    loc.add_argument("--den", required=True)
    loc.add_argument("expr")
    loc.add_argument("--bound", type=int, default=6)
    analyze.set_defaults(func=cmd_analyze)

    sch = sub.add_parser("schematic", parents=[common], help="schematicness verdicts")
    sch.add_argument("file", nargs="?")
    sch.add_argument("--two-gen", metavar="d,e,f,g", help="use yx = dxy + ex + fy + g (write --two-gen=-1,0,0,1 for negative d)")
    sch.add_argument("--field", help="Q or GF(p) for --two-gen (default Q)")
    sch.add_argument("--mode", choices=["classify", "central-powers", "evidence"], required=True)
    sch.add_argument("--ore", help="comma separated central denominators, e.g. x^2,y^2")
    sch.add_argument("-t", type=int)
    sch.add_argument("-m", type=int, default=1)
    sch.add_argument("--bound", type=int, default=8)
    sch.add_argument("--max-exp", type=int, default=6)
    sch.set_defaults(func=cmd_schematic, usage=sch.format_usage())
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code, lines, p, params, result = args.func(args)
    except _Abort as exc:
        if exc.usage and getattr(args, "usage", None):
            sys.stderr.write(args.usage)
        if str(exc):
            print(f"semigraded: {exc}", file=sys.stderr)
        return exc.code
    except SemigradedError as exc:
        print(f"semigraded: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for line in lines:
        print(line)
    if args.json:
        report = {
            "schema": REPORT_SCHEMA,
            "tool": "semigraded",
            "version": __version__,
            "command": argv,
            "presentation_digest": presentation_digest(p),
            "field": p.field.field_id,
            "parameters": params,
            "result": result,
            "exit_code": code,
            "wall_time_s": round(time.perf_counter() - start, 6) if args.timing else None,
        }
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text, encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
