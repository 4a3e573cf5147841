"""Command-line front end.

Exit codes: 0 ok, 1 usage or I/O error, 2 pole or domain error, 3 claim failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import analysis, claims, wmap
from .errors import DomainError, PoleError, RegistryError
from .specfun import SeriesConfig, riemann_zeta

EXIT_OK, EXIT_USAGE, EXIT_POLE, EXIT_CLAIM = 0, 1, 2, 3
STDOUT = "-"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class OutputSpec:
    format: str = "text"
    path: str = STDOUT
    precision: int = 15

    def __post_init__(self):
        if self.format not in ("csv", "json", "text"):
            raise UsageError(f"unknown output format {self.format!r}")
        if not 6 <= self.precision <= 17:
            raise UsageError(f"precision must lie in [6, 17], got {self.precision}")

    def num(self, x: float) -> str:
        if x == 0:
            return "0"
        return f"{x:.{self.precision}g}"

    def write(self, text: str) -> None:
        if self.path == STDOUT:
            sys.stdout.write(text)
        else:
            with open(self.path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _finite(x: float):
    return x if math.isfinite(x) else None


def _config(args) -> SeriesConfig:
    kw = {}
    if args.max_terms is not None:
        kw["max_terms"] = args.max_terms
    if args.rel_tol is not None:
        kw["rel_tol"] = args.rel_tol
    try:
        return SeriesConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _complex_text(z: complex, out: OutputSpec) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{out.num(z.real)} {sign} {out.num(abs(z.imag))}i"


def _eval_value(sigma: float, t: float, what: str, config: SeriesConfig):
    s = complex(sigma, t)
    kind = wmap.classify(s)
    if what in ("W", "absW", "dWdt", "dWdsigma", "G") and kind is wmap.Kind.POLE:
        raise PoleError(f"W has a pole at s = {sigma:g}{t:+g}i (odd positive integer)", s)
    if what == "W":
        return wmap.w_gamma_ratio(s).value
    if what == "absW":
        return wmap.w_abs(s)
    if what == "zeta":
        return riemann_zeta(s)
    if what == "G":
        return wmap.g_function(s)
    if what == "dWdt":
        return wmap.dw_abs_dt(s, config)
    if what == "dWdsigma":
        return wmap.dw_abs_dsigma(s)
    raise UsageError(f"unknown quantity {what!r}")


def cmd_eval(args, out: OutputSpec) -> int:
    value = _eval_value(args.sigma, args.t, args.what, _config(args))
    if args.json:
        if isinstance(value, complex):
            payload = {"re": _finite(value.real), "im": _finite(value.imag)}
        else:
            payload = _finite(value)
        out.write(_json({"sigma": args.sigma, "t": args.t, "what": args.what, "value": payload}))
    elif isinstance(value, complex):
        out.write(_complex_text(value, out) + "\n")
    else:
        out.write(out.num(value) + "\n")
    return EXIT_OK


def cmd_verify(args, out: OutputSpec) -> int:
    try:
        registry = claims.load_registry(args.registry) if args.registry else claims.builtin_registry()
        if not registry:
            raise RegistryError("registry holds no claims")
    except (OSError, RegistryError) as exc:
        print(f"error: cannot read registry: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = claims.run_claims(registry, _config(args))
    out.write(report.to_json() if out.format == "json" else report.to_text(min(out.precision, 12)))
    if out.path != STDOUT:
        s = report.summary
        print(f"{s['pass']} pass / {s['fail']} fail / {s['inconsistent']} paper-inconsistent", file=sys.stderr)
    return EXIT_CLAIM if report.failed else EXIT_OK


FIGURES = {
    "fig2": ("sigma", "absW_at_2pi", "absW_at_2.01pi"),
    "fig3": ("t", "u", "v"),
    "fig4": ("sigma", "t_star", "abs_zeta_s", "abs_zeta_1ms"),
}


def cmd_figure(args, out: OutputSpec) -> int:
    if args.which == "fig2":
        data = analysis.fig2_data()
    elif args.which == "fig3":
        data = analysis.fig3_data()
    else:
        data = analysis.fig4_data(workers=args.workers)
    columns = FIGURES[args.which]
    if out.format == "json":
        rows = [dict(zip(columns, map(float, row))) for row in data]
        out.write(_json({"figure": args.which, "columns": list(columns), "rows": rows}))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in data:
            writer.writerow([out.num(float(x)) for x in row])
        out.write(buf.getvalue())
    return EXIT_OK


def cmd_scan(args, out: OutputSpec) -> int:
    if args.t_max <= 0.01:
        raise UsageError("--t-max must exceed the scan start t = 0.01")
    try:
        grid = analysis.default_sigma_grid(args.sigma_step)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = analysis.boundedness_scan(grid, args.t_max, workers=args.workers)
    if out.format == "json":
        out.write(_json(report.to_dict()))
    else:
        lines = []
        for e in report.entries:
            ts = ", ".join(out.num(p.t_star) for p in e.crossings) or "none"
            lines.append(f"sigma={out.num(e.sigma)}  crossings: {ts}")
        for s in report.skipped:
            lines.append(f"sigma={out.num(s['sigma'])}  skipped: {s['note']}")
        for f in report.findings:
            lines.append(f"FINDING sigma={out.num(f.sigma)} {f.kind}: {f.detail}")
        lines.append(f"{len(report.findings)} finding(s)")
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("--precision", type=int, default=15, help="significant digits (6-17)")
    common.add_argument("--max-terms", type=int, default=None, help="series term cap")
    common.add_argument("--rel-tol", type=float, default=None, help="series relative stopping tolerance")
    common.add_argument("--out", default=STDOUT, help="output file (default stdout)")

    parser = _Parser(prog="zetamap", description="Evaluate W(s), audit published values, scan the |W| = 1 locus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a quantity at s = sigma + it")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--what", choices=["W", "absW", "zeta", "G", "dWdt", "dWdsigma"], default="W")
    p.set_defaults(func=cmd_eval, default_format="text")

    p = sub.add_parser("verify", parents=[common], help="recompute every registered claim")
    p.add_argument("--registry", default=None, help="JSON registry (default: built-in)")
    p.add_argument("--format", choices=["json", "text"], default=None)
    p.set_defaults(func=cmd_verify, default_format=None)

    p = sub.add_parser("figure", parents=[common], help="emit figure data")
    p.add_argument("which", choices=sorted(FIGURES))
    p.add_argument("--format", choices=["csv", "json"], default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_figure, default_format="csv")

    p = sub.add_parser("scan", parents=[common], help="locate |W| = 1 crossings over a sigma grid")
    p.add_argument("--t-max", type=float, default=50.0)
    p.add_argument("--sigma-step", type=float, default=0.05)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=["json", "text"], default=None)
    p.set_defaults(func=cmd_scan, default_format="text")
    return parser


def _resolve_format(args) -> str:
    if args.json:
        return "json"
    fmt = getattr(args, "format", None)
    if fmt:
        return fmt
    if args.default_format is None:
        return "json" if args.out != STDOUT else "text"
    return args.default_format


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = OutputSpec(_resolve_format(args), args.out, args.precision)
        return args.func(args, out)
    except UsageError as exc:
        print(f"zetamap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PoleError, DomainError) as exc:
        print(f"zetamap: {exc}", file=sys.stderr)
        return EXIT_POLE
    except OSError as exc:
        print(f"zetamap: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
