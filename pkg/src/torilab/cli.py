"""Command-line interface.

Every subcommand builds one JSON-friendly report dict.  ``--json`` prints
it as JSON, otherwise it is rendered as indented text.  Exit codes: 0 on
success, 1 for bad input, 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import battery
from .betti import betti_report, verify_double_gf
from .charpoly import CharPolyParseError, parse_char_poly
from .coinvariant import ClassFunction, _check_family, classes, graded_char, q_char_polys
from .errors import VerificationError
from .exactmath import format_rational
from .partitions import DoublePartition, Partition
from .symfunc import f_lambda_i, irreducible_character, mn_character
from .tori import (
    asymptotic_limit_poly,
    count_tori,
    count_tori_at,
    lehrer_verify,
    normalized_statistic_at,
    statistic_sum,
    total_tori_exponent,
)


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _family(text: str) -> str:
    try:
        return _check_family(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _class_label(family: str, text: str):
    if family == "A":
        if "|" in text:
            raise UsageError(f"type-A classes are partitions, got {text!r}")
        return Partition.from_text(text)
    if "|" not in text:
        raise UsageError(f"type-B/C classes are written 'mu|lambda', got {text!r}")
    return DoublePartition.from_text(text)


def _label_text(c) -> str:
    return c.to_text()


# -- subcommand handlers -----------------------------------------------------


def cmd_tori_count(args) -> dict:
    fam = args.family
    if args.cls is not None:
        picked = [_class_label(fam, args.cls)]
        if picked[0].size != args.n:
            raise UsageError(f"class {args.cls!r} has size {picked[0].size}, expected n = {args.n}")
    else:
        picked = classes(fam, args.n)
    if args.q is not None:
        if args.q < 2:
            raise UsageError("--q must be at least 2")
        counts = {_label_text(c): format_rational(count_tori_at(fam, c, args.q)) for c in picked}
        out = {"family": fam, "n": args.n, "q": args.q, "counts": counts}
        if args.cls is None:
            out["total"] = str(args.q ** total_tori_exponent(fam, args.n))
        return out
    counts = {}
    total = None
    for c in picked:
        value = count_tori(fam, c, args.n)
        counts[_label_text(c)] = value.format()
        total = value if total is None else total + value
    out = {"family": fam, "n": args.n, "q": "symbolic", "counts": counts}
    if args.cls is None:
        out["total"] = total.format()
    return out


def cmd_tori_stat(args) -> dict:
    P = parse_char_poly(args.poly)
    value = statistic_sum(args.family, P, args.n)
    e = total_tori_exponent(args.family, args.n)
    out = {"family": args.family, "n": args.n, "poly": P.format(),
           "sum": value.format(), "normalizer": f"q^{e}",
           "limit": asymptotic_limit_poly(args.family, P).format()}
    if args.q is not None:
        out["average_at_q"] = {"q": args.q,
                               "value": format_rational(normalized_statistic_at(args.family, P, args.n, args.q))}
    return out


def _chi_from_text(family: str, n: int, text: str) -> ClassFunction:
    kind, _, body = text.partition(":")
    if kind == "poly":
        return ClassFunction.from_char_poly(parse_char_poly(body), family, n)
    if kind == "irr":
        if family != "A":
            raise UsageError("irr:λ characters are available for type A only; use poly:EXPR")
        lam = Partition.from_text(body)
        if lam.size != n:
            raise UsageError(f"partition {body!r} has size {lam.size}, expected n = {n}")
        return irreducible_character(lam)
    raise UsageError(f"--chi must start with 'poly:' or 'irr:', got {text!r}")


def cmd_lehrer(args) -> dict:
    chi = _chi_from_text(args.family, args.n, args.chi)
    return {"chi": args.chi, **lehrer_verify(args.family, args.n, chi).to_json()}


def cmd_asympt(args) -> dict:
    P = parse_char_poly(args.poly)
    return {"family": args.family, "poly": P.format(), "limit": asymptotic_limit_poly(args.family, P).format()}


def cmd_coinv_graded(args) -> dict:
    G = graded_char(args.family, args.n)
    return {"family": args.family, "n": args.n, "top_degree": G.top_degree(),
            "classes": {row["class"]: [format_rational(c) for c in row["poly"]] for row in G.to_json()}}


def cmd_coinv_qpoly(args) -> dict:
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    return {"max_degree": args.max_degree,
            "Q": {str(i): Q.format() for i, Q in enumerate(q_char_polys(args.max_degree))}}


def cmd_betti(args) -> dict:
    if args.action == "double-gf":
        if args.cls is None:
            raise UsageError("betti double-gf needs --class")
        dp = _class_label("BC", args.cls)
        return verify_double_gf(dp, args.n_max, args.z_order).to_json()
    if args.poly is None:
        raise UsageError("betti needs --poly")
    if args.terms < 0:
        raise UsageError("--terms must be nonnegative")
    P = parse_char_poly(args.poly)
    return betti_report(P, args.terms, args.recurrence, args.quasipoly).to_json()


def cmd_symfunc(args) -> dict:
    lam = Partition.from_text(args.lam)
    if args.action == "mn":
        if args.mu is None:
            raise UsageError("symfunc mn needs --mu")
        mu = Partition.from_text(args.mu)
        return {"lambda": lam.to_text(), "mu": mu.to_text(), "value": mn_character(lam, mu)}
    return {"lambda": lam.to_text(), "f": {str(i): m for i, m in f_lambda_i(lam).items()}}


def cmd_verify(args) -> dict:
    results = battery.run_all(args.level, args.seed)
    rows = []
    for r in results:
        row = {k: r[k] for k in ("id", "key", "title", "status")}
        if r["error"]:
            row["error"] = r["error"]
            row["details"] = r["details"]
        if args.timing:
            row["seconds"] = round(r["seconds"], 3)
        rows.append(row)
    failed = [r["key"] for r in results if r["status"] != "pass"]
    report = {"level": args.level, "seed": args.seed, "checks": rows,
              "passed": len(rows) - len(failed), "failed": failed}
    if failed:
        raise VerificationError(f"{len(failed)} verification check(s) failed", report)
    return report


# -- parser ------------------------------------------------------------------


def _globals() -> argparse.ArgumentParser:
    # SUPPRESS defaults let the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")
    p.add_argument("--out", default=argparse.SUPPRESS, help="also write the output to FILE")
    p.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                   help="include wall-clock timings (output is then not byte-stable)")
    return p


def build_parser() -> argparse.ArgumentParser:
    g = _globals()
    parser = _Parser(prog="torilab", description="Exact statistics on maximal tori and coinvariant algebras.",
                     parents=[g])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tori = sub.add_parser("tori", help="count tori and sum statistics", parents=[g])
    tsub = tori.add_subparsers(dest="action", required=True, parser_class=_Parser)
    count = tsub.add_parser("count", parents=[g])
    count.add_argument("--family", type=_family, required=True)
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--class", dest="cls")
    mode = count.add_mutually_exclusive_group()
    mode.add_argument("--q", type=int)
    mode.add_argument("--symbolic", action="store_true")
    count.set_defaults(handler=cmd_tori_count)
    stat = tsub.add_parser("stat", parents=[g])
    stat.add_argument("--family", type=_family, required=True)
    stat.add_argument("--poly", required=True)
    stat.add_argument("--n", type=int, required=True)
    stat.add_argument("--q", type=int)
    stat.set_defaults(handler=cmd_tori_stat)

    lehrer = sub.add_parser("lehrer", help="check Lehrer's identity", parents=[g])
    lehrer.add_argument("--family", type=_family, required=True)
    lehrer.add_argument("--n", type=int, required=True)
    lehrer.add_argument("--chi", required=True, help="poly:EXPR or irr:PARTITION")
    lehrer.set_defaults(handler=cmd_lehrer)

    asympt = sub.add_parser("asympt", help="limit of the average of a statistic", parents=[g])
    asympt.add_argument("--family", type=_family, required=True)
    asympt.add_argument("--poly", required=True)
    asympt.set_defaults(handler=cmd_asympt)

    coinv = sub.add_parser("coinv", help="coinvariant algebra characters", parents=[g])
    csub = coinv.add_subparsers(dest="action", required=True, parser_class=_Parser)
    graded = csub.add_parser("graded", parents=[g])
    graded.add_argument("--family", type=_family, required=True)
    graded.add_argument("--n", type=int, required=True)
    graded.set_defaults(handler=cmd_coinv_graded)
    qpoly = csub.add_parser("qpoly", parents=[g])
    qpoly.add_argument("--max-degree", type=int, required=True)
    qpoly.set_defaults(handler=cmd_coinv_qpoly)

    betti = sub.add_parser("betti", help="stable twisted Betti numbers", parents=[g])
    betti.add_argument("action", nargs="?", choices=("double-gf",))
    betti.add_argument("--poly")
    betti.add_argument("--terms", type=int, default=12)
    betti.add_argument("--recurrence", action="store_true")
    betti.add_argument("--quasipoly", action="store_true")
    betti.add_argument("--class", dest="cls")
    betti.add_argument("--n-max", type=int, default=4)
    betti.add_argument("--z-order", type=int, default=8)
    betti.set_defaults(handler=cmd_betti)

    symfunc = sub.add_parser("symfunc", help="symmetric group characters", parents=[g])
    ssub = symfunc.add_subparsers(dest="action", required=True, parser_class=_Parser)
    mn = ssub.add_parser("mn", parents=[g])
    mn.add_argument("--lambda", dest="lam", required=True)
    mn.add_argument("--mu", required=True)
    mn.set_defaults(handler=cmd_symfunc)
    fmaj = ssub.add_parser("fmaj", parents=[g])
    fmaj.add_argument("--lambda", dest="lam", required=True)
    fmaj.set_defaults(handler=cmd_symfunc)

    verify = sub.add_parser("verify", help="run the verification battery", parents=[g])
    verify.add_argument("target", choices=("all",))
    verify.add_argument("--level", choices=battery.LEVELS, default="quick")
    verify.set_defaults(handler=cmd_verify)
    return parser


# -- rendering ---------------------------------------------------------------


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and not any(isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    return "\n".join(_render_text(report)) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cli_dispatch(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    as_json = "--json" in argv
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit(render({"status": "error", "error": {"kind": "usage", "message": str(exc)}}, as_json), None)
        return 1
    for name, default in (("json", False), ("seed", 0), ("out", None), ("timing", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    echo = {"command": " ".join(argv)}
    start = time.perf_counter()
    try:
        battery.thread_count()
        outputs = args.handler(args)
    except CharPolyParseError as exc:
        err = {"kind": "parse", "message": str(exc), "offset": exc.offset}
        _emit(render({**echo, "status": "error", "error": err}, args.json), args.out)
        return 1
    except VerificationError as exc:
        err = {"kind": "verification", "message": str(exc), "details": exc.details}
        _emit(render({**echo, "status": "fail", "error": err}, args.json), args.out)
        return 2
    except (UsageError, ValueError) as exc:
        err = {"kind": "validation", "message": str(exc)}
        _emit(render({**echo, "status": "error", "error": err}, args.json), args.out)
        return 1
    report = {**echo, "status": "pass", "outputs": outputs}
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    _emit(render(report, args.json), args.out)
    return 0


def main() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
