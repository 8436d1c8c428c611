"""Command-line front end: crystal, whittaker, verify, gauss."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import coefficients as coeffs
from .crystal import BOTH, BOXED, CIRCLED, decorations, demazure_members, enumerate_patterns, gamma_of, weight_of
from .gauss import GaussContext, gauss_gflat, gauss_hflat, check_gauss
from .operators import whittaker_value
from .sweep import ConfigError, STATEMENTS, SweepConfig, parse_range, read_config_file, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_DECO_MARK = {CIRCLED: "o", BOXED: "b", BOTH: "x"}


class UsageError(Exception):
    pass


def parse_weight(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _fmt_num(z: complex) -> str:
    re = 0.0 if abs(z.real) < 1e-13 else z.real
    im = 0.0 if abs(z.imag) < 1e-13 else z.imag
    if im == 0:
        return f"{re:#.12g}"
    return f"{re:#.12g}{im:+#.12g}i"


def _row_text(row) -> str:
    return ",".join(map(str, row))


def cmd_crystal(top: Sequence[int], n: int, w_length: Optional[int], fmt: str, out) -> int:
    try:
        pats = enumerate_patterns(top) if w_length is None else demazure_members(top, w_length)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for p in pats:
        g = gamma_of(p)
        deco = decorations(p)
        coeff = coeffs.gt_coefficient(p, n)
        wt = weight_of(p)
        if fmt == "json":
            rec = {
                "rows": [list(r) for r in p.rows],
                "gamma": g.as_lists(),
                "decorations": {f"{i},{j}": d for (i, j), d in sorted(deco.items())},
                "weight": list(wt),
                "coefficient": coeff.render(),
            }
            print(json.dumps(rec), file=out)
        else:
            marks = "/".join(
                "".join(_DECO_MARK.get(deco[(i, j)], ".") for j in range(i, p.r + 1)) for i in range(1, p.r + 1)
            )
            gam = "/".join(_row_text(r) for r in g.rows)
            print(f"{p.render():<24} gamma={gam:<14} deco={marks:<10} wt={_row_text(wt):<10} coeff={coeff.render()}", file=out)
    return EXIT_OK


def cmd_whittaker(lam: Sequence[int], n: int, fmt: str, out) -> int:
    try:
        f = whittaker_value(lam, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if fmt == "json":
        print(json.dumps({"lambda": list(lam), "n": n, "value": f.render(), "terms": f.to_json()}), file=out)
    else:
        print(f.render(), file=out)
    return EXIT_OK


def cmd_gauss(n: int, p: int, fmt: str, out) -> int:
    try:
        ctx = GaussContext(p, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [(a, gauss_gflat(a, ctx), gauss_hflat(a, ctx)) for a in range(0, 2 * n + 1)]
    rep = check_gauss(n, p)
    if fmt == "json":
        for a, g, h in rows:
            print(json.dumps({"a": a, "gflat": [g.real, g.imag], "hflat": h}), file=out)
        print(json.dumps(rep.to_json()), file=out)
    else:
        print(f"{'a':>3}  {'gflat(a)':<36} hflat(a)", file=out)
        for a, g, h in rows:
            print(f"{a:>3}  {_fmt_num(g):<36} {_fmt_num(h)}", file=out)
        print(rep.render() + (f" ({rep.detail})" if rep.passed and rep.detail else ""), file=out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify(cfg: SweepConfig, out) -> int:
    total = failed = 0
    for rep in run_sweep(cfg):
        total += 1
        failed += not rep.passed
        print(json.dumps(rep.to_json()) if cfg.format == "json" else rep.render(), file=out)
    summary = f"{total} checks, {failed} failed"
    if cfg.format == "json":
        print(json.dumps({"summary": {"checks": total, "failed": failed}}), file=out)
    else:
        print(summary, file=out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="metaplectic", description="Metaplectic Demazure crystals and Whittaker functions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, n_default="1"):
        p.add_argument("--n", default=n_default, help="metaplectic degree")
        p.add_argument("--format", choices=("text", "json"), default=None)

    c = sub.add_parser("crystal", help="list crystal vertices with coefficients")
    c.add_argument("--top-row", required=True)
    c.add_argument("--w-length", type=int, default=None)
    common(c)

    w = sub.add_parser("whittaker", help="print the Whittaker value for a dominant weight")
    w.add_argument("--lambda", dest="lam", required=True)
    common(w)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("--statement", choices=STATEMENTS, default=None)
    v.add_argument("--r", default=None, help="rank or range, e.g. 2 or 1-3")
    v.add_argument("--lambda-max", type=int, default=None)
    v.add_argument("--jobs", type=int, default=None)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--p", type=int, default=None)
    v.add_argument("--config", default=None, help="key=value file with SweepConfig fields")
    v.add_argument("--n", default=None, help="degree or range, e.g. 1-3")
    v.add_argument("--format", choices=("text", "json"), default=None)

    g = sub.add_parser("gauss", help="Gauss-sum table over F_p")
    g.add_argument("--p", type=int, required=True)
    common(g, n_default="2")
    return ap


def _config_from_args(args) -> SweepConfig:
    cfg = SweepConfig()
    if args.config:
        cfg.update(read_config_file(args.config))
    overrides = {
        "statement": args.statement,
        "r": args.r,
        "n": args.n,
        "lambda_max": args.lambda_max,
        "format": args.format,
        "jobs": args.jobs,
        "seed": args.seed,
        "samples": args.samples,
        "p": args.p,
    }
    cfg.update({k: str(v) for k, v in overrides.items() if v is not None})
    return cfg.validate()


def _single_int(text: str, name: str) -> int:
    lo, hi = parse_range(text)
    if lo != hi or lo < 1:
        raise UsageError(f"{name} must be a single positive integer")
    return lo


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "verify":
            return cmd_verify(_config_from_args(args), out)
        fmt = args.format or "text"
        n = _single_int(args.n, "--n")
        if args.command == "crystal":
            return cmd_crystal(parse_weight(args.top_row), n, args.w_length, fmt, out)
        if args.command == "whittaker":
            return cmd_whittaker(parse_weight(args.lam), n, fmt, out)
        return cmd_gauss(n, args.p, fmt, out)
    except (UsageError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
