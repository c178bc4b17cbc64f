"""Batch command-line front end.

One invocation, one result, deterministic output.  Exit codes: 0 on
success, 1 for domain errors (non-residue square roots, divergent
logarithms, mismatched primes, ...), 2 for parse and usage errors.
``--prec`` always means absolute precision in digits; ``--order`` means
T-adic order for series.  The environment variable PADICORE_PREC_CAP
overrides the construction-time precision cap (default 64).
"""

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import analytic, hensel, measure, plog, sumlab, textforms
from .errors import DomainError, ParseError
from .measure import Ball
from .padics import DEFAULT_PRECISION_CAP
from .series import LaurentSeries, PowerSeries


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as ParseError (exit 2)."""

    def error(self, message):
        raise ParseError(message)


def _precision_cap():
    raw = os.environ.get("PADICORE_PREC_CAP")
    if raw is None:
        return DEFAULT_PRECISION_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ParseError(f"PADICORE_PREC_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise ParseError("PADICORE_PREC_CAP must be positive")
    return cap


def _check_prec(prec, cap):
    if prec is None:
        raise ParseError("--prec is required here")
    if prec < 1:
        raise ParseError("--prec must be at least 1")
    if prec > cap:
        raise ParseError(f"--prec {prec} exceeds the precision cap {cap}")
    return prec


def _padic_operand(text, p, prec, cap):
    value = textforms.parse_padic(text, p, prec, cap)
    if p is not None and value.p != p:
        raise ParseError(f"operand is {value.p}-adic but --p is {p}")
    return value


def _maybe_json(obj):
    """Canonical JSON for report dataclasses and simple values."""
    if isinstance(obj, Fraction):
        return str(obj)
    if obj is math.inf:
        return "inf"
    return obj


def _emit(args, pretty_text, json_obj):
    if args.format == "json":
        print(json.dumps(json_obj, sort_keys=True))
    else:
        print(pretty_text)
    return 0


# ------------------------------------------------------------------- padic


def _run_padic(args, cap):
    p = args.p
    prec = _check_prec(args.prec, cap)
    ops = [_padic_operand(t, p, prec, cap) for t in args.operands]

    def emit(x):
        return _emit(args, x.pretty(), x.to_json_dict())

    cmd = args.subcommand
    if cmd in ("add", "sub", "mul", "div"):
        if len(ops) != 2:
            raise ParseError(f"padic {cmd} takes exactly two operands")
        a, b = ops
        out = {
            "add": lambda: a + b,
            "sub": lambda: a - b,
            "mul": lambda: a * b,
            "div": lambda: a / b,
        }[cmd]()
        return emit(out)
    if len(ops) != 1:
        raise ParseError(f"padic {cmd} takes exactly one operand")
    x = ops[0]
    if cmd == "invert":
        return emit(x.invert())
    if cmd == "valuation":
        if x.is_zero:
            return _emit(args, f">= {x.abs_prec}", {"at_least": x.abs_prec})
        return _emit(args, str(x.valuation()), {"valuation": x.valuation()})
    if cmd == "digits":
        return _emit(
            args,
            f"digits {x.digits()} from exponent {x.valuation_bound}, "
            f"known mod {x.p}^{x.abs_prec}",
            {
                "digits": x.digits(),
                "valuation": None if x.is_zero else x.v,
                "abs_prec": x.abs_prec,
            },
        )
    if cmd == "reduce":
        r = x.residue(args.level)
        return _emit(
            args,
            f"{r.value} mod {r.p}^{r.level}",
            {"p": r.p, "level": r.level, "value": r.value},
        )
    raise ParseError(f"unknown padic subcommand {cmd!r}")


# ------------------------------------------------------------------ series


def _series_operand(text, args):
    field = textforms.parse_field(args.field) if args.field else None
    s = textforms.parse_series(text, field)
    if args.order is not None:
        if isinstance(s, PowerSeries):
            s = s.truncate(min(args.order, s.prec))
        else:
            s = s._truncated(min(args.order, s.prec_exponent))
    return s


def _emit_series(args, s):
    return _emit(args, s.pretty(), json.loads(textforms.series_to_json(s)))


def _run_series(args, cap):
    cmd = args.subcommand
    ops = [_series_operand(t, args) for t in args.operands]
    if cmd in ("add", "sub", "mul", "compose"):
        if len(ops) != 2:
            raise ParseError(f"series {cmd} takes exactly two operands")
        a, b = ops
        if cmd == "compose":
            if not isinstance(a, PowerSeries) or not isinstance(b, PowerSeries):
                raise DomainError("composition is defined for power series")
            return _emit_series(args, a.compose(b))
        if isinstance(a, LaurentSeries) or isinstance(b, LaurentSeries):
            if isinstance(a, PowerSeries):
                a = LaurentSeries.from_power_series(a)
            if isinstance(b, PowerSeries):
                b = LaurentSeries.from_power_series(b)
        out = {
            "add": lambda: a + b,
            "sub": lambda: a - b,
            "mul": lambda: a * b,
        }[cmd]()
        return _emit_series(args, out)
    if len(ops) != 1:
        raise ParseError(f"series {cmd} takes exactly one operand")
    s = ops[0]
    if cmd == "derive":
        if not isinstance(s, PowerSeries):
            raise DomainError("derivative is provided for power series")
        return _emit_series(args, s.derive())
    if cmd == "invert":
        if isinstance(s, PowerSeries):
            s = LaurentSeries.from_power_series(s)
        return _emit_series(args, s.invert())
    if cmd == "order":
        n = s.order()
        if n is None:
            bound = s.prec if isinstance(s, PowerSeries) else s.order_bound
            return _emit(args, f">= {bound}", {"at_least": bound})
        return _emit(args, str(n), {"order": n})
    if cmd == "norm":
        r = Fraction(args.ratio)
        value = s.norm(r)
        pretty = "0" if value.is_zero else f"({r})^{value.exponent}"
        return _emit(
            args,
            pretty,
            {"r": str(r), "exponent": value.exponent},
        )
    raise ParseError(f"unknown series subcommand {cmd!r}")


# ---------------------------------------------------------------- analytic


def _polynomial_operand(text, p, prec, cap):
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}") from None
        poly = textforms.polynomial_from_json(data, analytic.PadicPolynomial)
        if p is not None and poly.p != p:
            raise ParseError(f"polynomial is {poly.p}-adic but --p is {p}")
        return poly
    coeffs = textforms.parse_polynomial_rational_coeffs(text)
    if p is None:
        raise ParseError("text polynomials need --p")
    return analytic.PadicPolynomial(p, coeffs, abs_prec=prec)


def _run_analytic(args, cap):
    p = args.p
    prec = _check_prec(args.prec, cap)
    poly = _polynomial_operand(args.poly, p, prec, cap)
    cmd = args.subcommand
    if cmd == "eval":
        x = _padic_operand(args.operands[0], p, prec, cap)
        out = poly.evaluate(x, min_valuation=args.ball_exp)
        return _emit(args, out.pretty(), out.to_json_dict())
    if cmd == "recenter":
        x0 = _padic_operand(args.operands[0], p, prec, cap)
        out = poly.recenter(x0)
        pretty = ", ".join(c.pretty() for c in out.coeffs)
        return _emit(
            args, f"[{pretty}]", json.loads(textforms.polynomial_to_json(out))
        )
    if cmd == "bounds":
        m = args.radius_exp
        mu1 = analytic.lipschitz_bound(poly, m)
        mu2 = analytic.quadratic_bound(poly, m)
        return _emit(
            args,
            f"lipschitz valuation {mu1}, second-order valuation {_maybe_json(mu2)}",
            {"lipschitz": mu1, "second_order": _maybe_json(mu2), "radius_exp": m},
        )
    raise ParseError(f"unknown analytic subcommand {cmd!r}")


# ------------------------------------------------------------------ hensel


def _run_hensel(args, cap):
    p = args.p
    prec = _check_prec(args.prec, cap)
    cmd = args.subcommand

    def emit(x):
        return _emit(args, x.pretty(), x.to_json_dict())

    if cmd == "sqrt":
        u = _padic_operand(args.operands[0], p, prec, cap)
        return emit(hensel.sqrt(u))
    if cmd == "nthroot":
        u = _padic_operand(args.operands[0], p, prec, cap)
        return emit(hensel.nth_root(u, args.n))
    if cmd == "teichmuller":
        u = _padic_operand(args.operands[0], p, prec, cap)
        return emit(hensel.teichmuller(u))
    poly = _polynomial_operand(args.poly, p, prec, cap)
    x0 = _padic_operand(args.x0, p, prec, cap)
    if cmd == "check":
        report = hensel.check_condition(poly, x0, args.m, args.t)
        obj = {
            "ok": report.ok,
            "ok_nonstrict": report.ok_nonstrict,
            "derivative_valuation": report.derivative_valuation,
            "mu2": _maybe_json(report.mu2),
            "gap": _maybe_json(report.gap),
        }
        pretty = (
            f"strict={'ok' if report.ok else 'fails'} "
            f"nonstrict={'ok' if report.ok_nonstrict else 'fails'} "
            f"v(f'(x0))={report.derivative_valuation} mu2={report.mu2} "
            f"gap={report.gap}"
        )
        return _emit(args, pretty, obj)
    if cmd == "solve":
        z = _padic_operand(args.z, p, prec, cap)
        problem = hensel.HenselProblem(poly, x0, m=args.m, t_exp=args.t)
        return emit(hensel.solve(problem, z))
    if cmd == "image":
        report = hensel.ball_image_check(poly, x0, args.m, args.t, args.level)
        obj = {
            "status": report.status,
            "equal": report.equal,
            "level": report.level,
            "source_size": report.source_size,
            "image_size": report.image_size,
            "target_size": report.target_size,
        }
        pretty = (
            f"{report.status}: image==target is {report.equal} "
            f"(level {report.level}, {report.source_size} source residues)"
        )
        return _emit(args, pretty, obj)
    raise ParseError(f"unknown hensel subcommand {cmd!r}")


# -------------------------------------------------------------------- plog


def _run_plog(args, cap):
    p = args.p
    prec = _check_prec(args.prec, cap)
    cmd = args.subcommand
    if cmd == "log":
        x = _padic_operand(args.x, p, prec, cap)
        out = plog.log1p(x)
        return _emit(args, out.pretty(), out.to_json_dict())
    if cmd == "invert":
        z = _padic_operand(args.z, p, prec, cap)
        out = plog.log_inverse(z)
        return _emit(args, out.pretty(), out.to_json_dict())
    if cmd == "poly":
        poly = plog.log_series_polynomial(p, prec, args.domain_val)
        pretty = ", ".join(c.pretty() for c in poly.coeffs)
        return _emit(
            args, f"[{pretty}]", json.loads(textforms.polynomial_to_json(poly))
        )
    raise ParseError(f"unknown plog subcommand {cmd!r}")


# ----------------------------------------------------------------- measure


def _run_measure(args, cap):
    cmd = args.subcommand
    if cmd == "count":
        n = measure.residue_count(args.p, args.level)
        return _emit(args, str(n), {"count": n})
    if cmd == "split":
        try:
            data = json.loads(args.operands[0])
            ball = Ball(args.p, data["level"], data["center"])
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ParseError(f"bad ball JSON: {e}") from None
        parts = ball.split()
        obj = [b.to_json_dict() for b in parts]
        pretty = ", ".join(f"{b.center} mod {b.p}^{b.level}" for b in parts)
        return _emit(args, pretty, obj)
    sets = [textforms.parse_clopen(t) for t in args.operands]
    if cmd == "measure":
        (s,) = sets
        m = s.measure()
        return _emit(args, str(m), {"measure": str(m)})
    if cmd == "complement":
        (s,) = sets
        out = s.complement()
    elif cmd == "translate":
        (s,) = sets
        out = s.translate(args.shift)
    else:
        a, b = sets
        out = {
            "union": lambda: a.union(b),
            "intersect": lambda: a.intersect(b),
            "diff": lambda: a.difference(b),
        }[cmd]()
    return _emit(
        args,
        textforms.clopen_to_json(out),
        out.to_json_dict(),
    )


# -------------------------------------------------------------------- sums


def _run_sums(args, cap):
    cmd = args.subcommand
    if cmd == "fubini":
        try:
            data = json.loads(args.operands[0])
            mode = data["mode"]
            rows_raw = data["rows"]
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ParseError(f"bad grid JSON: {e}") from None
        rows = []
        for row in rows_raw:
            if mode == "rational":
                rows.append([Fraction(str(v)) for v in row])
            else:
                rows.append([textforms.padic_from_json(v) for v in row])
        report = sumlab.fubini_check(rows)

        def render(v):
            return str(v) if isinstance(v, Fraction) else v.pretty()

        obj = {
            "row_first": render(report.row_first),
            "column_first": render(report.column_first),
            "direct": render(report.direct),
            "equal": report.equal,
        }
        pretty = (
            f"row-first {obj['row_first']}, column-first {obj['column_first']}, "
            f"direct {obj['direct']}, equal={report.equal}"
        )
        return _emit(args, pretty, obj)
    family = textforms.parse_family(args.operands[0])
    if cmd == "bfs":
        value = sumlab.bfs_norm(family)
        return _emit(args, str(value), {"bfs": str(value)})
    if cmd == "norms":
        r = "inf" if args.r == "inf" else int(args.r)
        report = sumlab.norms(family, r)
        obj = {
            "sup": str(report.sup),
            "r": report.r if report.r == "inf" else int(report.r),
            "lr_power": str(report.lr_power),
        }
        pretty = f"sup {obj['sup']}, ||f||_{report.r}^{report.r} = {obj['lr_power']}"
        if report.r == "inf":
            pretty = f"sup {obj['sup']}"
        return _emit(args, pretty, obj)
    if cmd == "partition":
        try:
            blocks = json.loads(args.blocks)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad blocks JSON: {e}") from None
        blocks = [[lbl for lbl in block] for block in blocks]
        report = sumlab.partition_check(family, blocks)

        def render(v):
            return str(v) if isinstance(v, Fraction) else v.pretty()

        obj = {
            "block_totals": [render(v) for v in report.block_totals],
            "total_from_blocks": render(report.total_from_blocks),
            "direct": render(report.direct),
            "equal": report.equal,
        }
        pretty = (
            f"blocks {obj['block_totals']} -> {obj['total_from_blocks']}, "
            f"direct {obj['direct']}, equal={report.equal}"
        )
        return _emit(args, pretty, obj)
    raise ParseError(f"unknown sums subcommand {cmd!r}")


# ------------------------------------------------------------------ parser


def _build_parser():
    parser = _Parser(prog="padicore", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True)

    def common(sp, p=True, prec=True):
        if p:
            sp.add_argument("--p", type=int, help="prime of the ambient field")
        if prec:
            sp.add_argument("--prec", type=int, help="absolute precision in digits")
        sp.add_argument(
            "--format", choices=("pretty", "json"), default="pretty"
        )

    padic_cmd = top.add_parser("padic", help="p-adic arithmetic")
    padic_sub = padic_cmd.add_subparsers(dest="subcommand", required=True)
    for name in ("add", "sub", "mul", "div", "invert", "valuation", "digits"):
        sp = padic_sub.add_parser(name)
        common(sp)
        sp.add_argument("operands", nargs="+")
    sp = padic_sub.add_parser("reduce")
    common(sp)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("operands", nargs="+")

    series_cmd = top.add_parser("series", help="formal power and Laurent series")
    series_sub = series_cmd.add_subparsers(dest="subcommand", required=True)
    for name in ("add", "sub", "mul", "compose", "derive", "invert", "order"):
        sp = series_sub.add_parser(name)
        sp.add_argument("--field", help="coefficient field, e.g. fp:3 or q")
        sp.add_argument("--order", type=int, help="truncate operands to this order")
        sp.add_argument("--format", choices=("pretty", "json"), default="pretty")
        sp.add_argument("operands", nargs="+")
    sp = series_sub.add_parser("norm")
    sp.add_argument("--field", help="coefficient field, e.g. fp:3 or q")
    sp.add_argument("--order", type=int)
    sp.add_argument("--ratio", default="1/2", help="the ratio r in (0,1)")
    sp.add_argument("--format", choices=("pretty", "json"), default="pretty")
    sp.add_argument("operands", nargs="+")

    analytic_cmd = top.add_parser("analytic", help="p-adic polynomials on balls")
    analytic_sub = analytic_cmd.add_subparsers(dest="subcommand", required=True)
    sp = analytic_sub.add_parser("eval")
    common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--ball-exp", type=int, default=None)
    sp.add_argument("operands", nargs=1)
    sp = analytic_sub.add_parser("recenter")
    common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("operands", nargs=1)
    sp = analytic_sub.add_parser("bounds")
    common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--radius-exp", type=int, default=0)

    hensel_cmd = top.add_parser("hensel", help="ball root solving")
    hensel_sub = hensel_cmd.add_subparsers(dest="subcommand", required=True)
    for name in ("sqrt", "teichmuller"):
        sp = hensel_sub.add_parser(name)
        common(sp)
        sp.add_argument("operands", nargs=1)
    sp = hensel_sub.add_parser("nthroot")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("operands", nargs=1)
    sp = hensel_sub.add_parser("solve")
    common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--x0", required=True)
    sp.add_argument("--z", default="0")
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--t", type=int, default=None)
    sp = hensel_sub.add_parser("check")
    common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--x0", required=True)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--t", type=int, required=True)
    sp = hensel_sub.add_parser("image")
    common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--x0", required=True)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)

    plog_cmd = top.add_parser("plog", help="the p-adic logarithm")
    plog_sub = plog_cmd.add_subparsers(dest="subcommand", required=True)
    sp = plog_sub.add_parser("log")
    common(sp)
    sp.add_argument("--x", dest="x_flag", default=None)
    sp.add_argument("operands", nargs="*")
    sp = plog_sub.add_parser("invert")
    common(sp)
    sp.add_argument("--z", dest="z_flag", default=None)
    sp.add_argument("operands", nargs="*")
    sp = plog_sub.add_parser("poly")
    common(sp)
    sp.add_argument("--domain-val", type=int, default=1)

    measure_cmd = top.add_parser("measure", help="clopen ball algebra and measure")
    measure_sub = measure_cmd.add_subparsers(dest="subcommand", required=True)
    for name, arity in (
        ("measure", 1),
        ("complement", 1),
        ("union", 2),
        ("intersect", 2),
        ("diff", 2),
    ):
        sp = measure_sub.add_parser(name)
        sp.add_argument("--format", choices=("pretty", "json"), default="pretty")
        sp.add_argument("operands", nargs=arity)
    sp = measure_sub.add_parser("translate")
    sp.add_argument("--format", choices=("pretty", "json"), default="pretty")
    sp.add_argument("--shift", type=int, required=True)
    sp.add_argument("operands", nargs=1)
    sp = measure_sub.add_parser("split")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--format", choices=("pretty", "json"), default="pretty")
    sp.add_argument("operands", nargs=1)
    sp = measure_sub.add_parser("count")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--format", choices=("pretty", "json"), default="pretty")

    sums_cmd = top.add_parser("sums", help="finite summation laboratory")
    sums_sub = sums_cmd.add_subparsers(dest="subcommand", required=True)
    for name in ("bfs", "fubini"):
        sp = sums_sub.add_parser(name)
        sp.add_argument("--format", choices=("pretty", "json"), default="pretty")
        sp.add_argument("operands", nargs=1)
    sp = sums_sub.add_parser("norms")
    sp.add_argument("--r", default="1")
    sp.add_argument("--format", choices=("pretty", "json"), default="pretty")
    sp.add_argument("operands", nargs=1)
    sp = sums_sub.add_parser("partition")
    sp.add_argument("--blocks", required=True)
    sp.add_argument("--format", choices=("pretty", "json"), default="pretty")
    sp.add_argument("operands", nargs=1)

    return parser


_RUNNERS = {
    "padic": _run_padic,
    "series": _run_series,
    "analytic": _run_analytic,
    "hensel": _run_hensel,
    "plog": _run_plog,
    "measure": _run_measure,
    "sums": _run_sums,
}


def main(argv=None):
    """Run one command; returns the exit code instead of exiting."""
    try:
        cap = _precision_cap()
        parser = _build_parser()
        args = parser.parse_args(argv)
        if args.command == "plog" and args.subcommand in ("log", "invert"):
            flag = args.x_flag if args.subcommand == "log" else args.z_flag
            if flag is not None and args.operands:
                raise ParseError("give the operand once: positionally or by flag")
            if flag is None and not args.operands:
                raise ParseError("an operand is required")
            value = flag if flag is not None else args.operands[0]
            if args.subcommand == "log":
                args.x = value
            else:
                args.z = value
        return _RUNNERS[args.command](args, cap)
    except ParseError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # argparse --help and friends
        code = e.code
        return 0 if code in (None, 0) else int(code)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
