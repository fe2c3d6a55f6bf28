"""Command-line front end.

Exit status: 0 success / verified, 1 well-formed input that is not an
identity (or fails the exchange hypotheses, or does not match), 2 parse or
validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .exterior import extract_colike
from .identity import FreeExpr, ReplacementRule, RuleSequence, injective_match, phi_A, project_pi
from .laurent import LaurentInt
from .minors import det_permuted, det_q, det_repeated_rows, minor
from .mq import NCPoly
from .textio import ParseError, parse_expr, read_expr_file, render_expr, render_ncpoly
from .transforms import (
    LAPLACE_FORMS,
    ExchangeSpec,
    HypothesisError,
    check_exchange_hypotheses,
    exchange,
    exchange_trace,
    laplace_identity,
    muir_extend,
)

EXIT_OK = 0
EXIT_NOT_IDENTITY = 1
EXIT_USAGE = 2

JSON_SCHEMA = 1


class UsageError(ValueError):
    pass


def _labels(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(x < 1 for x in out):
        raise argparse.ArgumentTypeError(f"labels must be positive: {text!r}")
    return out


def parse_rule(text: str, index: int) -> ReplacementRule:
    """``"K;L->K';L'"``; a side without ``;`` is rows only, an empty half is omitted.

    ``"2;1->3;1"``, ``"3,3;2,3->2,3;2,3"``, ``"1->2"`` (rows only),
    ``";2->;4"`` (columns only).
    """
    if "->" not in text:
        raise UsageError(f"rule {text!r} lacks '->'")
    lhs, rhs = text.split("->", 1)

    def halves(side: str) -> tuple[tuple | None, tuple | None]:
        if ";" in side:
            r, c = side.split(";", 1)
        else:
            r, c = side, ""
        r, c = r.strip(), c.strip()
        try:
            return (_labels(r) or None), (_labels(c) or None)
        except argparse.ArgumentTypeError as e:
            raise UsageError(str(e)) from None

    K, L = halves(lhs)
    Kp, Lp = halves(rhs)
    try:
        return ReplacementRule(index, K, Kp, L, Lp)
    except ValueError as e:
        raise UsageError(f"rule {text!r}: {e}") from None


# -- JSON helpers ----------------------------------------------------------


def coeff_json(c: LaurentInt) -> list:
    return [[e, v] for e, v in sorted(c.items())]


def ncpoly_json(p: NCPoly) -> dict:
    return {
        "text": render_ncpoly(p),
        "terms": [{"word": [list(g) for g in w], "coeff": coeff_json(c)} for w, c in p.sorted_items()],
    }


def expr_json(f: FreeExpr) -> dict:
    return {
        "text": render_expr(f),
        "terms": [
            {
                "monomial": [{"rows": list(s.rows), "cols": list(s.cols), "decoration": s.decoration} for s in m],
                "coeff": coeff_json(c),
            }
            for m, c in f.sorted_items()
        ],
    }


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": JSON_SCHEMA, "command": args.command, **payload}, indent=2))
    else:
        print(text)


def _read_input(args) -> FreeExpr:
    if getattr(args, "expr", None) is not None:
        return parse_expr(args.expr)
    if getattr(args, "file", None) is not None:
        return read_expr_file(args.file)
    raise UsageError("give an expression with -e or a file with -f")


# -- commands --------------------------------------------------------------


def cmd_nf(args) -> int:
    p = project_pi(_read_input(args))
    _emit(args, {"result": ncpoly_json(p)}, render_ncpoly(p))
    return EXIT_OK


def _verify_one(path: str) -> tuple[str, int, str]:
    try:
        f = read_expr_file(path)
    except (ParseError, ValueError, OSError) as e:
        return path, EXIT_USAGE, str(e)
    r = project_pi(f)
    return path, (EXIT_OK if not r else EXIT_NOT_IDENTITY), render_ncpoly(r)


def cmd_verify(args) -> int:
    if args.batch:
        files = sorted(str(p) for p in Path(args.batch).glob(args.pattern))
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_verify_one, files))
        else:
            results = [_verify_one(p) for p in files]
        codes = [c for _, c, _ in results]
        status = EXIT_USAGE if EXIT_USAGE in codes else (EXIT_NOT_IDENTITY if EXIT_NOT_IDENTITY in codes else EXIT_OK)
        label = {EXIT_OK: "identity", EXIT_NOT_IDENTITY: "NOT an identity", EXIT_USAGE: "error"}
        lines = [f"{p}: {label[c]}" + (f" ({msg})" if c == EXIT_USAGE else "") for p, c, msg in results]
        payload = {
            "files": [{"path": p, "status": c, "residual_or_error": msg} for p, c, msg in results],
            "status": status,
        }
        _emit(args, payload, "\n".join(lines) if lines else "no files")
        return status
    f = _read_input(args)
    r = project_pi(f)
    ok = not r
    text = "identity" if ok else f"NOT an identity; residual: {render_ncpoly(r)}"
    _emit(args, {"identity": ok, "residual": ncpoly_json(r)}, text)
    return EXIT_OK if ok else EXIT_NOT_IDENTITY


def cmd_minor(args) -> int:
    p = minor(args.K, args.L)
    _emit(args, {"result": ncpoly_json(p)}, render_ncpoly(p))
    return EXIT_OK


def cmd_detq(args) -> int:
    p = det_q(args.n)
    _emit(args, {"result": ncpoly_json(p)}, render_ncpoly(p))
    return EXIT_OK


def cmd_detperm(args) -> int:
    n = args.n or len(args.sigma)
    p = det_permuted(args.kind, args.sigma, args.tau, rows=args.rows, n=n)
    equal = p == det_q(n)
    _emit(args, {"result": ncpoly_json(p), "equals_det_q": equal}, render_ncpoly(p))
    return EXIT_OK


def cmd_detphi(args) -> int:
    p = det_repeated_rows(args.phi, args.n)
    _emit(args, {"result": ncpoly_json(p), "zero": not p}, render_ncpoly(p))
    return EXIT_OK


def cmd_colike(args) -> int:
    p = extract_colike(args.n, args.side)
    _emit(args, {"result": ncpoly_json(p), "equals_det_q": p == det_q(args.n)}, render_ncpoly(p))
    return EXIT_OK


def cmd_laplace(args) -> int:
    f = laplace_identity(args.n, args.K, args.L, args.form)
    payload = {"result": expr_json(f)}
    status = EXIT_OK
    if args.verify:
        ok = not project_pi(f)
        payload["identity"] = ok
        status = EXIT_OK if ok else EXIT_NOT_IDENTITY
    _emit(args, payload, render_expr(f))
    return status


def cmd_muir(args) -> int:
    f = _read_input(args)
    g = muir_extend(f, args.I, args.J, args.rows, args.cols)
    payload = {"result": expr_json(g)}
    status = EXIT_OK
    if args.verify:
        ok = not project_pi(g)
        payload["identity"] = ok
        status = EXIT_OK if ok else EXIT_NOT_IDENTITY
    _emit(args, payload, render_expr(g))
    return status


def cmd_exchange(args) -> int:
    f = _read_input(args)
    spec = ExchangeSpec(args.k, args.kprime, args.l0)
    report = check_exchange_hypotheses(f, spec)
    if not report.passed:
        text = "hypotheses fail:\n  " + "\n  ".join(report.messages)
        _emit(args, {"hypotheses": report.as_dict()}, text)
        return EXIT_NOT_IDENTITY
    payload: dict = {"hypotheses": report.as_dict()}
    lines = []
    status = EXIT_OK
    if args.trace:
        tr = exchange_trace(f, spec)
        payload["trace"] = [s.as_dict() for s in tr.steps]
        for s in tr.steps:
            mark = "ok" if s.passed else "FAILED"
            extra = f" [{s.detail}]" if s.detail else ""
            lines.append(f"({s.key}) {mark}: {s.description}{extra}")
            if not s.passed and s.residual is not None:
                lines.append(f"    residual: {render_ncpoly(s.residual)}")
        if not tr.passed:
            status = EXIT_NOT_IDENTITY
        out = tr.output
    else:
        out = exchange(f, spec, verify=False)
    if not args.no_verify:
        ok = not project_pi(out)
        payload["identity"] = ok
        if not ok:
            status = EXIT_NOT_IDENTITY
            lines.append("exchanged expression is NOT an identity")
    payload["result"] = expr_json(out)
    lines.append(render_expr(out))
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_match(args) -> int:
    f = _read_input(args)
    A = RuleSequence(parse_rule(r, i) for i, r in enumerate(args.rule, start=1))
    ok = injective_match(A, f)
    payload: dict = {"match": ok}
    text = "injective match" if ok else "no injective match"
    if args.apply:
        g = phi_A(A, f)
        payload["result"] = expr_json(g)
        text += "\n" + render_expr(g)
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_NOT_IDENTITY


# -- argument parsing --------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_input(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("-e", "--expr", help="inline expression")
    g.add_argument("-f", "--file", help="file holding one expression ('#' comments allowed)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qminors", description="Exact identities among quantum minors in M_q(n).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="emit a structured JSON report")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("nf", help="normal form in M_q of an expression (t[r,c] allowed)")
    _add_input(p)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("verify", help="check that an expression projects to zero")
    _add_input(p)
    p.add_argument("--batch", metavar="DIR", help="verify every matching file in DIR")
    p.add_argument("--pattern", default="*.qid", help="glob for --batch (default *.qid)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minor", help="quantum minor D[K;L]")
    p.add_argument("--K", type=_labels, required=True)
    p.add_argument("--L", type=_labels, required=True)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("detq", help="quantum determinant of M_q(n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_detq)

    p = sub.add_parser("detperm", help="permuted determinant d^{kind,sigma}_tau")
    p.add_argument("--kind", choices=["r", "c", "row", "col"], required=True)
    p.add_argument("--sigma", type=_labels, required=True)
    p.add_argument("--tau", type=_labels, required=True)
    p.add_argument("--rows", type=_labels, default=None, help="row selection (repeats allowed)")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_detperm)

    p = sub.add_parser("detphi", help="row determinant of T with rows phi(1..n)")
    p.add_argument("--phi", type=_labels, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_detphi)

    p = sub.add_parser("colike", help="top-form coefficient of a coaction on the exterior algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--side", choices=["left", "right"], default="right")
    p.set_defaults(func=cmd_colike)

    p = sub.add_parser("laplace", help="emit a q-Laplace expansion identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", type=_labels, required=True)
    p.add_argument("--L", type=_labels, required=True)
    p.add_argument("--form", choices=LAPLACE_FORMS, default="row-first")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_laplace)

    p = sub.add_parser("muir", help="Muir extension of a homogeneous identity")
    _add_input(p)
    p.add_argument("--I", type=_labels, default=None, help="rows of the submatrix (default: rows used)")
    p.add_argument("--J", type=_labels, default=None, help="columns of the submatrix (default: columns used)")
    p.add_argument("--rows", type=_labels, required=True, help="new rows")
    p.add_argument("--cols", type=_labels, required=True, help="new columns")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_muir)

    p = sub.add_parser("exchange", help="included-row exchange k -> k' with fixed column l0")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kprime", type=int, required=True)
    p.add_argument("--l0", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="check and print every step of the argument")
    p.add_argument("--no-verify", action="store_true", help="skip the final identity check")
    p.set_defaults(func=cmd_exchange)

    p = sub.add_parser("match", help="injective-match test for replacement rules")
    _add_input(p)
    p.add_argument("--rule", action="append", required=True, help="'K;L->K';L'' (repeatable, indices 1..r)")
    p.add_argument("--apply", action="store_true", help="also print phi_A of the input")
    p.set_defaults(func=cmd_match)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, HypothesisError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
