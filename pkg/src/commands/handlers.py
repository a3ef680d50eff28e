"""
One handler per CLI command. Each takes the parsed arguments and returns an
OutputEnvelope; the CLI decides how to print it.
"""
import json
import logging
from argparse import Namespace
from typing import Dict

from ..analysis.distribution_k1 import finite_dist, limit_dist
from ..core.exceptions import InvalidParameterError
from ..paths.bijections import from_tuple, lift_prepend, make_tuple, split_fg, to_tuple
from ..paths.brute_force import EnumSpec, count_strip, enumerate_kt
from ..paths.core_paths import coordinates, parse_path
from ..series.closed_forms import count_general, count_simple, d_poly, ratio_report, rho, ycoeff
from ..series.exact_series import mul, power, solve_y
from ..series.strip_solver import StripSpec, phi_series_cramer, phi_series_dp
from ..utils.helpers import decimal_list, fraction_payload
from .envelope import EXIT_MISMATCH, OutputEnvelope
from .verify import run_checks

logger = logging.getLogger(__name__)

COUNT_METHODS = ("formula", "series", "brute", "all")


def series_count(k: int, t: int, n: int) -> int:
    """[x^n] D_t y^(t+1) from the series engine."""
    y = solve_y(k, n)
    return mul(d_poly(k, t).to_series(n), power(y, t + 1))[n]


def brute_count(k: int, t: int, n: int) -> int:
    return sum(1 for _ in enumerate_kt(EnumSpec(k=k, t=t, n=n)))


def cmd_count(args: Namespace) -> OutputEnvelope:
    methods = ("formula", "series", "brute") if args.method == "all" else (args.method,)
    runners = {"formula": count_general, "series": series_count, "brute": brute_count}
    counts: Dict[str, int] = {m: runners[m](args.k, args.t, args.n) for m in methods}
    result = {"length": (args.k + 1) * args.n, "counts": counts}
    exit_code = 0
    if args.method == "all":
        if args.t <= args.k:
            counts["simple"] = count_simple(args.k, args.t, args.n)
        agree = len(set(counts.values())) == 1
        result["agree"] = agree
        if not agree:
            logger.error("count methods disagree: %s", counts)
            exit_code = EXIT_MISMATCH
    return OutputEnvelope(
        command="count",
        parameters={"k": args.k, "t": args.t, "n": args.n, "method": args.method},
        result=result,
        columns=["method", "count"],
        rows=[{"method": m, "count": c} for m, c in counts.items()],
        exit_code=exit_code,
    )


def cmd_table(args: Namespace) -> OutputEnvelope:
    rows = [
        {
            "n": n,
            "length": (args.k + 1) * n,
            "count": count_general(args.k, args.t, n),
            "unbounded_power": ycoeff(args.k, args.t + 1, n),
        }
        for n in range(args.nmax + 1)
    ]
    return OutputEnvelope(
        command="table",
        parameters={"k": args.k, "t": args.t, "nmax": args.nmax},
        columns=["n", "length", "count", "unbounded_power"],
        rows=rows,
    )


def cmd_dpoly(args: Namespace) -> OutputEnvelope:
    poly = d_poly(args.k, args.m)
    return OutputEnvelope(
        command="dpoly",
        parameters={"k": args.k, "m": args.m},
        result={"coeffs": decimal_list(poly.coeffs), "degree": poly.degree},
        columns=["power", "coefficient"],
        rows=[{"power": ell, "coefficient": c} for ell, c in enumerate(poly.coeffs)],
    )


def cmd_ratio(args: Namespace) -> OutputEnvelope:
    report = ratio_report(args.k, args.t, args.nmax)
    rows = [
        {"n": n, "num": q.numerator, "den": q.denominator, "float": float(q)}
        for n, q in report.quotients
    ]
    rows.append(
        {"n": "limit", "num": report.limit.numerator, "den": report.limit.denominator, "float": report.limit_float}
    )
    return OutputEnvelope(
        command="ratio",
        parameters={"k": args.k, "t": args.t, "nmax": args.nmax},
        result={"limit": fraction_payload(report.limit), "rho": fraction_payload(rho(args.k))},
        columns=["n", "num", "den", "float"],
        rows=rows,
    )


def cmd_dist(args: Namespace) -> OutputEnvelope:
    if args.limit:
        table = limit_dist(args.t, args.M)
    elif args.n is not None:
        table = finite_dist(args.t, args.n)
    else:
        raise InvalidParameterError("dist needs either --n or --limit")
    result = {
        "mean_J": fraction_payload(table.mean_j()),
        "support_bound": table.support_bound,
        "residual": fraction_payload(table.residual),
    }
    if table.total is not None:
        result["total"] = table.total
    return OutputEnvelope(
        command="dist",
        parameters={"t": args.t, "n": args.n, "limit": args.limit, "M": args.M},
        result=result,
        columns=["s", "J", "mass_num", "mass_den", "mass_float"],
        rows=table.rows(),
    )


def cmd_strip(args: Namespace) -> OutputEnvelope:
    order = -(-args.len // (args.k + 1))
    spec = StripSpec(k=args.k, t=args.t, h=args.h, i=args.i, N=order)
    dp = phi_series_dp(spec).by_length()
    cramer = phi_series_cramer(spec).by_length()
    oracle_spec = EnumSpec(k=args.k, t=args.t, n=0, h=args.h, i=args.i)
    rows = []
    agree = True
    for length in range(args.len + 1):
        brute = count_strip(oracle_spec, length)
        same = dp[length] == cramer[length] == brute
        agree = agree and same
        rows.append({"length": length, "dp": dp[length], "cramer": cramer[length], "brute": brute, "agree": same})
    if not agree:
        logger.error("strip counts disagree for %s", spec)
    return OutputEnvelope(
        command="strip",
        parameters={"k": args.k, "t": args.t, "h": args.h, "i": args.i, "len": args.len},
        result={"agree": agree},
        columns=["length", "dp", "cramer", "brute", "agree"],
        rows=rows,
        exit_code=0 if agree else EXIT_MISMATCH,
    )


def cmd_biject(args: Namespace) -> OutputEnvelope:
    if (args.path is None) == (args.tuple is None):
        raise InvalidParameterError("biject needs exactly one of --path or --tuple")
    if args.path is not None:
        if args.t is None:
            raise InvalidParameterError("biject --path needs --t")
        p = parse_path(args.path, args.k)
        parts = to_tuple(p, args.t)
        result = {"path": p.steps, "lifted": lift_prepend(p, args.t).steps, "tuple": parts.to_texts()}
    else:
        texts = json.loads(args.tuple)
        if not isinstance(texts, list) or not all(isinstance(x, str) for x in texts):
            raise InvalidParameterError("--tuple must be a JSON array of U/D strings")
        parts = make_tuple(texts, args.k, args.t)
        result = {"tuple": parts.to_texts(), "path": from_tuple(parts).steps}
    return OutputEnvelope(
        command="biject",
        parameters={"k": args.k, "t": parts.t},
        result=result,
        columns=["index", "part"],
        rows=[{"index": i, "part": text} for i, text in enumerate(parts.to_texts())],
    )


def cmd_split_fg(args: Namespace) -> OutputEnvelope:
    q = parse_path(args.path, args.k)
    if args.lift:
        q = lift_prepend(q, args.t)
    split = split_fg(q, args.t)
    return OutputEnvelope(
        command="split-fg",
        parameters={"k": args.k, "t": args.t, "path": args.path, "lift": args.lift},
        result={"q": q.steps, "F": split.f.steps, "G": split.g.steps, "J": split.j},
        columns=["part", "steps", "length"],
        rows=[
            {"part": "F", "steps": split.f.steps, "length": len(split.f)},
            {"part": "G", "steps": split.g.steps, "length": len(split.g)},
        ],
    )


def cmd_levels(args: Namespace) -> OutputEnvelope:
    p = parse_path(args.path, args.k)
    points = coordinates(p)
    return OutputEnvelope(
        command="levels",
        parameters={"k": args.k, "path": args.path},
        result={"end_level": p.end_level, "min_level": min(level for _, level in points)},
        columns=["x", "level"],
        rows=[{"x": x, "level": level} for x, level in points],
    )


def cmd_verify(args: Namespace) -> OutputEnvelope:
    outcomes = run_checks(args.profile)
    failed = [o.name for o in outcomes if not o.passed]
    return OutputEnvelope(
        command="verify",
        parameters={"profile": args.profile},
        result={"passed": len(outcomes) - len(failed), "failed": failed},
        columns=["check", "passed", "detail"],
        rows=[{"check": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes],
        exit_code=EXIT_MISMATCH if failed else 0,
    )


COMMANDS = {
    "count": cmd_count,
    "table": cmd_table,
    "dpoly": cmd_dpoly,
    "ratio": cmd_ratio,
    "dist": cmd_dist,
    "strip": cmd_strip,
    "biject": cmd_biject,
    "split-fg": cmd_split_fg,
    "levels": cmd_levels,
    "verify": cmd_verify,
}
