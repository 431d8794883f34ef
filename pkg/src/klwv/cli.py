"""Command-line driver.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on a usage
error (bad flags, malformed rationals, parameters outside an operation's
domain).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import embedcheck, extension, freefield, liecore, qhreduce, suites
from .ratcore import fmt_rat, parse_rat
from .report import Report, reports_to_csv, to_jsonable


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int(text: str) -> int:
    value = _rat(text)
    if value.denominator != 1:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    return int(value)


def _format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klwv", description="Exact checks for induced modules, reductions and free-field identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", help="conformal weight of sector i of an induced module")
    p.add_argument("kind", choices=("atypical", "typical"))
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--a", type=_rat)
    p.add_argument("--b", type=_int)
    p.add_argument("--mu", type=_rat)
    p.add_argument("--nu", type=_rat)
    p.add_argument("--j0", type=_int, default=0)
    p.add_argument("--i", type=_int, required=True)
    _format_flag(p)

    p = sub.add_parser("classify", help="locality, lower bound and class label of an induced module")
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--j0", type=_int, default=0)
    p.add_argument("--a", type=_rat)
    p.add_argument("--b", type=_int)
    p.add_argument("--mu", type=_rat)
    p.add_argument("--nu", type=_rat)
    _format_flag(p)

    p = sub.add_parser("enumerate", help="ordinary modules on a bounded parameter grid")
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--denom", type=_int, default=None, help="denominator bound (default m+2)")
    p.add_argument("--range", dest="range_", type=_int, default=10)
    _format_flag(p)

    p = sub.add_parser("sugawara", help="Sugawara, reduction and J(0) weights of an sl_N weight")
    p.add_argument("--k", type=_rat, required=True)
    p.add_argument("--weight", required=True, help="comma-separated coefficients l1,...,l_{N-1}")
    _format_flag(p)

    p = sub.add_parser("qhr", help="reduction data at level -(m+3)/2 of sl_{m+2}")
    p.add_argument("action", nargs="?", choices=("top", "sos", "eq1", "pieri", "match"), default="top")
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--lambda1", type=_int)
    p.add_argument("--lambda-last", dest="lambda_last", type=_int)
    p.add_argument("--a", type=_rat)
    p.add_argument("--b", type=_int)
    _format_flag(p)

    p = sub.add_parser("embed-check", help="top weights of the embedding decompositions")
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--range", dest="range_", type=_int, default=100)
    _format_flag(p)

    p = sub.add_parser("gram", help="h / h_bar Gram matrix and the Fock basis change")
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--i", type=_int)
    p.add_argument("--j", type=_int)
    _format_flag(p)

    p = sub.add_parser("char", help="singlet characters and the two free-field character identities")
    p.add_argument("--label", help="module label M:i or V:p/q")
    p.add_argument("--identity", choices=("sympfermion", "bg"))
    p.add_argument("--order", type=_rat, default=Fraction(10))
    p.add_argument("--charge-window", dest="charge_window", type=_int)
    _format_flag(p)

    p = sub.add_parser("report", help="all module suites in dependency order")
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--order", type=_int, default=20)
    p.add_argument("--range", dest="range_", type=_int, default=50)
    p.add_argument("--charge-window", dest="charge_window", type=_int, default=7)
    _format_flag(p)
    return parser


# --- output ----------------------------------------------------------------------

def _dump_json(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2) + "\n"


def _dump_values_csv(payload: Dict[str, Any]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["field", "value"])
    for key in sorted(payload):
        value = to_jsonable(payload[key])
        writer.writerow([key, value if isinstance(value, str) else json.dumps(value, sort_keys=True)])
    return buf.getvalue()


def _emit_values(payload: Dict[str, Any], fmt: str) -> int:
    sys.stdout.write(_dump_json(payload) if fmt == "json" else _dump_values_csv(payload))
    return 0


def _emit_reports(reports: List[Report], fmt: str, extra: Optional[Dict[str, Any]] = None) -> int:
    ok = all(r.ok for r in reports)
    if fmt == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        total = sum(len(r.checks) for r in reports)
        fails = sum(len(r.failures) for r in reports)
        payload: Dict[str, Any] = {
            "reports": [r.to_json() for r in reports],
            "summary": {"total": total, "pass": total - fails, "fail": fails},
            "ok": ok,
        }
        if extra:
            payload.update(extra)
        sys.stdout.write(_dump_json(payload))
    return 0 if ok else 1


# --- commands ----------------------------------------------------------------------

def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _induced(args: argparse.Namespace) -> extension.GenInduced:
    if args.b is not None:
        _need(args, "a")
        if args.mu is not None or args.nu is not None:
            raise UsageError("give either --a/--b or --mu/--nu")
        return extension.GenInduced.atypical(args.m, args.a, args.b, j0=args.j0)
    _need(args, "mu", "nu")
    return extension.GenInduced.typical(args.m, args.mu, args.nu, j0=args.j0)


def cmd_delta(args) -> int:
    extension.check_m(args.m)
    if args.kind == "atypical":
        _need(args, "a", "b")
        M = extension.GenInduced.atypical(args.m, args.a, args.b, j0=args.j0)
        value = extension.delta_atypical(args.m, args.a, args.b, args.i) if args.j0 == 0 else M.sector_delta(args.i)
    else:
        _need(args, "mu", "nu")
        M = extension.GenInduced.typical(args.m, args.mu, args.nu, j0=args.j0)
        value = extension.delta_typical(args.m, args.mu, args.nu, args.i) if args.j0 == 0 else M.sector_delta(args.i)
    return _emit_values({"delta": value}, args.format)


def cmd_classify(args) -> int:
    extension.check_m(args.m)
    return _emit_values(extension.classify(_induced(args)).to_json(), args.format)


def cmd_enumerate(args) -> int:
    denom = args.denom if args.denom is not None else args.m + 2
    rows = extension.enumerate_ordinary(args.m, denom, args.range_)
    counts: Dict[str, int] = {}
    for c in rows:
        counts[c.label.value] = counts.get(c.label.value, 0) + 1
    payload = {"m": args.m, "denom_bound": denom, "range_bound": args.range_,
               "count": len(rows), "counts": counts, "modules": [c.to_json() for c in rows]}
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["class", "j0", "a", "b", "nu", "local", "lower_bounded", "argmin", "delta_min", "top_dim"])
        for c in rows:
            d = c.to_json()
            mod = d["module"]
            argmin = d["argmin"] if isinstance(d["argmin"], str) else " ".join(str(x) for x in d["argmin"])
            writer.writerow([d["class"], mod["j0"], mod["a"], mod.get("b", ""), mod.get("nu", ""),
                             d["local"], d["lower_bounded"], argmin, d["delta_min"], d["top_dim"]])
        sys.stdout.write(buf.getvalue())
        return 0
    sys.stdout.write(_dump_json(payload))
    return 0


def cmd_sugawara(args) -> int:
    lam = liecore.WeightVec.parse(args.weight)
    lvl = liecore.LieLevel(lam.N, args.k)
    payload: Dict[str, Any] = {
        "N": lam.N,
        "k": args.k,
        "weight": str(lam),
        "sugawara": liecore.sugawara_weight(lvl, lam),
        "minimal_reduction": liecore.minimal_reduction_weight(lvl, lam),
    }
    if lam.N >= 3:
        payload["j0"] = liecore.j0_weight(lam)
    if lam.is_dominant_integral():
        payload["dim"] = liecore.weyl_dim(lam)
    return _emit_values(payload, args.format)


def cmd_qhr(args) -> int:
    m = args.m
    extension.check_m(m)
    if args.action == "top":
        _need(args, "lambda1", "lambda_last")
        lam = qhreduce.two_param_weight(m, args.lambda1, args.lambda_last)
        data = qhreduce.qhr_top_data(m, lam).to_json()
        data["delta_theta"] = fmt_rat(qhreduce.delta_theta(m, Fraction(args.lambda1), Fraction(args.lambda_last)))
        return _emit_values(data, args.format)
    if args.action == "sos":
        if m > 20:
            raise UsageError("qhr sos covers 4 <= m <= 20")
        return _emit_reports([qhreduce.sos_certificate(m)], args.format)
    if args.action == "eq1":
        sols = qhreduce.eq1_solutions(m)
        return _emit_reports([qhreduce.eq1_recheck(m)], args.format,
                             {"solutions": [[l1, ll] for l1, ll in sols]})
    if args.action == "pieri":
        _need(args, "lambda1", "lambda_last")
        return _emit_reports([qhreduce.pieri_obstruction(m, args.lambda1, args.lambda_last)], args.format)
    _need(args, "a", "b")
    lam, rep = qhreduce.match_reduction(m, args.a, args.b)
    return _emit_reports([rep], args.format, {"lambda": str(lam)})


def cmd_embed_check(args) -> int:
    reports = [embedcheck.ce_summand_check(args.m, args.range_)]
    if args.m % 2 == 0:
        reports.append(embedcheck.wdecomp_check(args.m, args.range_))
    return _emit_reports(reports, args.format)


def cmd_gram(args) -> int:
    reports = [embedcheck.gram_check(args.m), embedcheck.fock_basis_identity(args.m)]
    if args.i is not None or args.j is not None:
        _need(args, "i", "j")
        reports.append(embedcheck.fock_basis_change(args.m, args.i, args.j))
    return _emit_reports(reports, args.format)


def cmd_char(args) -> int:
    if (args.label is None) == (args.identity is None):
        raise UsageError("give exactly one of --label or --identity")
    if args.identity == "sympfermion":
        cw = 7 if args.charge_window is None else args.charge_window
        return _emit_reports([freefield.verify_sympfermion(args.order, cw)], args.format)
    if args.identity == "bg":
        return _emit_reports([freefield.verify_bg_decomposition(args.order, args.charge_window)], args.format)
    mod = freefield.parse_module_label(args.label)
    if isinstance(mod, freefield.FockModule):
        raise UsageError("char expects a singlet module label (M:i or V:p/q)")
    delta, series = freefield.singlet_char_with_offset(mod, args.order)
    payload = {"label": str(mod), "top_weight": delta, "order": args.order,
               "series_from_top": series.to_json()}
    return _emit_values(payload, args.format)


def cmd_report(args) -> int:
    return _emit_reports(suites.full_report(args.m, args.order, args.range_, args.charge_window), args.format)


COMMANDS = {
    "delta": cmd_delta,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "sugawara": cmd_sugawara,
    "qhr": cmd_qhr,
    "embed-check": cmd_embed_check,
    "gram": cmd_gram,
    "char": cmd_char,
    "report": cmd_report,
}


_NEGATIVE_RAT = re.compile(r"^-\d+(/\d+)?$")


def _glue_negative_values(argv: Sequence[str]) -> List[str]:
    """Turn ``--k -5/2`` into ``--k=-5/2``; argparse would read ``-5/2`` as a flag."""
    out: List[str] = []
    for tok in argv:
        if out and _NEGATIVE_RAT.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"klwv {args.command}: error: {exc}\n")
        return 2


def run(argv: Optional[Sequence[str]] = None) -> int:
    return main(argv)
