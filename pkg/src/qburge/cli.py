"""Command-line front end: evaluate single objects, run verification
campaigns, list the identity catalogue.

Exit codes: 0 success / all pass, 1 campaign failure, 2 usage error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .qpoly import LaurentPoly, TruncatedSeries
from .qcombinat import qbin, b_kernel, g_poly, d_poly
from .fermionic import (eval_F, eval_f, eval_H, eval_I, eval_limit_L,
                        eval_limit_both)
from .verify import CATALOGUE, CampaignBudget, SUITES, run_campaign


@dataclass
class RunConfig:
    suites: list = field(default_factory=lambda: list(SUITES))
    a_max: int = 5
    lm_max: int = 6
    n_max: int = 12
    T: int = 40
    pos_l_max: int = 20
    format: str = "plain"      # plain | json | csv
    out: str = None
    jobs: int = 1


def _fmt_poly(p):
    if isinstance(p, TruncatedSeries):
        return " ".join(f"{e}:{c}" for e, c in enumerate(p.coeffs))
    if p.is_zero():
        return "0"
    return " ".join(f"{e}:{c}" for e, c in p.items_sorted())


def _frac(s):
    return Fraction(s)


def _cmd_eval(args):
    obj = args.object
    v = args.params
    try:
        if obj == "qbin":
            n, m = int(v[0]), int(v[1])
            base = int(v[2]) if len(v) > 2 else 1
            res = qbin(n, m, base)
        elif obj == "B":
            L, M, a, b = map(int, v[:4])
            res = b_kernel(L, M, a, b)
        elif obj == "G":
            N, M = int(v[0]), int(v[1])
            res = g_poly(N, M, _frac(v[2]), _frac(v[3]), int(v[4]))
        elif obj == "D":
            K, i, N, M = map(int, v[:4])
            res = d_poly(K, i, N, M, _frac(v[4]), _frac(v[5]))
        elif obj in ("F", "f", "H", "I"):
            a, b = int(v[0]), int(v[1])
            fn = {"F": eval_F, "f": eval_f, "H": eval_H, "I": eval_I}[obj]
            res = fn(a, b, args.L, args.M)
        elif obj == "Ftilde":
            a, b = int(v[0]), int(v[1])
            res = eval_limit_L("F", a, b, args.M)
        elif obj == "series":
            fam, a, b = v[0], int(v[1]), int(v[2])
            res = eval_limit_both(fam, a, b, args.order)
        else:
            raise ValueError(f"unknown object {obj!r}")
    except (IndexError, ValueError, TypeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    print(_fmt_poly(res))
    return 0


def _report_record(r):
    rec = {"case": r.case, "params": dict(sorted(r.params.items())),
           "status": r.status}
    if r.status == "fail":
        rec["first_diff_exponent"] = r.first_diff_exponent
        rec["lhs_coeff"] = r.lhs_coeff
        rec["rhs_coeff"] = r.rhs_coeff
    rec["elapsed_ms"] = round(r.elapsed_ms, 3)
    return rec


def _render(reports, fmt):
    if fmt == "json":
        return json.dumps([_report_record(r) for r in reports],
                          sort_keys=False, indent=None, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["case", "params", "status", "first_diff_exponent",
                    "lhs_coeff", "rhs_coeff", "elapsed_ms"])
        for r in reports:
            w.writerow([r.case, json.dumps(dict(sorted(r.params.items()))),
                        r.status, r.first_diff_exponent, r.lhs_coeff,
                        r.rhs_coeff, round(r.elapsed_ms, 3)])
        return buf.getvalue()
    lines = []
    for r in reports:
        if r.status == "fail":
            lines.append(f"FAIL {r.case} {dict(sorted(r.params.items()))} "
                         f"first diff q^{r.first_diff_exponent}: "
                         f"{r.lhs_coeff} vs {r.rhs_coeff}")
    npass = sum(1 for r in reports if r.status == "pass")
    lines.append(f"{'PASS' if npass == len(reports) else 'FAIL'} "
                 f"{npass}/{len(reports)}")
    return "\n".join(lines) + "\n"


def _load_config(path, cfg):
    with open(path) as fh:
        data = json.load(fh)
    for key, val in data.items():
        if key == "suites":
            cfg.suites = list(val)
        elif hasattr(cfg, key):
            setattr(cfg, key, val)
        else:
            raise ValueError(f"unknown config key {key!r}")
    return cfg


def _cmd_verify(args):
    cfg = RunConfig()
    if args.config:
        try:
            _load_config(args.config, cfg)
        except OSError as exc:
            print(f"I/O error: {exc}", file=sys.stderr)
            return 3
        except (ValueError, json.JSONDecodeError) as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return 2
    if args.suite:
        cfg.suites = args.suite
    for name, attr in (("a_max", "a_max"), ("lm_max", "lm_max"),
                       ("n_max", "n_max"), ("order", "T"),
                       ("pos_l_max", "pos_l_max"), ("format", "format"),
                       ("out", "out"), ("jobs", "jobs")):
        v = getattr(args, name, None)
        if v is not None:
            setattr(cfg, attr, v)
    unknown = [s for s in cfg.suites if s not in SUITES]
    if unknown:
        print(f"usage error: unknown suite(s) {unknown}", file=sys.stderr)
        return 2
    bud = CampaignBudget(a_max=cfg.a_max, lm_max=cfg.lm_max, n_max=cfg.n_max,
                         T=cfg.T, pos_l_max=cfg.pos_l_max)
    reports = []
    for suite in cfg.suites:
        reports.extend(run_campaign(suite, bud))
    text = _render(reports, cfg.format)
    if cfg.out:
        try:
            with open(cfg.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"I/O error: {exc}", file=sys.stderr)
            return 3
        npass = sum(1 for r in reports if r.status == "pass")
        print(f"{'PASS' if npass == len(reports) else 'FAIL'} "
              f"{npass}/{len(reports)} -> {cfg.out}")
    else:
        sys.stdout.write(text)
    return 0 if all(r.status == "pass" for r in reports) else 1


def _cmd_list(args):
    for cid in sorted(CATALOGUE):
        case = CATALOGUE[cid]
        print(f"{cid:20s} [{case.kind}] {case.description}  "
              f"(domain: {case.param_domain})")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qburge",
        description="exact q-series identity engine and verifier")
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a single object")
    pe.add_argument("object",
                    choices=["qbin", "B", "G", "D", "F", "f", "H", "I",
                             "Ftilde", "series"])
    pe.add_argument("params", nargs="*",
                    help="positional parameters for the object")
    pe.add_argument("--L", type=int, default=None)
    pe.add_argument("--M", type=int, default=None)
    pe.add_argument("--order", type=int, default=20,
                    help="series truncation order")
    pe.set_defaults(fn=_cmd_eval)

    pv = sub.add_parser("verify", help="run verification campaigns")
    pv.add_argument("--suite", action="append", choices=list(SUITES),
                    help="suite to run (repeatable; default all)")
    pv.add_argument("--a-max", dest="a_max", type=int)
    pv.add_argument("--lm-max", dest="lm_max", type=int)
    pv.add_argument("--n-max", dest="n_max", type=int)
    pv.add_argument("--order", type=int, help="series order T")
    pv.add_argument("--pos-l-max", dest="pos_l_max", type=int)
    pv.add_argument("--format", choices=["plain", "json", "csv"])
    pv.add_argument("--out", help="write report to this path")
    pv.add_argument("--jobs", type=int, help="parallelism degree")
    pv.add_argument("--config", help="JSON config file (flags win)")
    pv.set_defaults(fn=_cmd_verify)

    pl = sub.add_parser("list-identities", help="list the identity catalogue")
    pl.set_defaults(fn=_cmd_list)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        raise
    code = args.fn(args)
    sys.exit(code)


if __name__ == "__main__":
    main()
