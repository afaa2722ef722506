"""Command-line interface: analyze, period, search, reduce1d.

Exit codes: 0 success, 2 parse or validation error, 3 budget exhausted,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import configparser
import dataclasses
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .algebra import (
    TwistedTorus,
    check_to_condition,
    factor_univariate,
    k_max,
    k_on_torus,
    minimal_full_k_twisted,
    minimal_period,
    standard_monomials,
    univariate_generator,
)
from .distance import DistancePolicy, NoLogicalSpace, css_distance
from .gb1d import DegenerateReduction, k_1d, reduce_to_1d
from .groebner import LEX_XY, LEX_YX, Budget, GroebnerBudgetExceeded, NotZeroDimensionalError, laurent_ideal_basis
from .lattice import CssCode, k_from_ranks, write_alist, write_dense
from .poly2 import PolyParseError, parse, render
from .search import SearchSpace, format_table, run_search, write_csv

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

EXACT_MAX_N = 200

ORDERS = {"lex-xy": LEX_XY, "lex-yx": LEX_YX}


class InvariantViolation(RuntimeError):
    pass


@dataclass
class Config:
    distance: str = "auto"  # exact up to n = EXACT_MAX_N, RIS beyond
    cap: int = 14
    trials: int = 100_000
    seed: int = 0xC0DE
    workers: int = 1
    format: str = "table"
    order: str = "lex-xy"
    max_pairs: int = 10**6
    max_support: int = 10**5

    def validate(self):
        if self.distance not in ("auto", "exact", "ris", "none"):
            raise ValueError(f"distance must be auto, exact, ris or none, got {self.distance!r}")
        if self.format not in ("json", "csv", "table"):
            raise ValueError(f"format must be json, csv or table, got {self.format!r}")
        if self.order not in ORDERS:
            raise ValueError(f"order must be one of {sorted(ORDERS)}")
        for name in ("cap", "trials", "workers", "max_pairs", "max_support"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    @property
    def budget(self) -> Budget:
        return Budget(self.max_pairs, self.max_support)

    @property
    def policy(self) -> DistancePolicy:
        return self.policy_for(0)

    def policy_for(self, n: int) -> DistancePolicy:
        ris = self.distance == "ris" or (self.distance == "auto" and n > EXACT_MAX_N)
        return DistancePolicy("ris" if ris else "exact", cap=self.cap, trials=self.trials)


def load_config(path: str | None) -> dict:
    """key = value lines (an optional [section] header is ignored)."""
    if not path:
        return {}
    text = Path(path).read_text()
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    if not text.lstrip().startswith("["):
        text = "[config]\n" + text
    parser.read_string(text)
    out = {}
    fields = {f.name: f for f in dataclasses.fields(Config)}
    for section in parser.sections():
        for key, raw in parser.items(section):
            key = key.replace("-", "_")
            if key not in fields:
                raise ValueError(f"unknown config key {key!r}")
            val = raw.strip().strip('"').strip("'")
            out[key] = int(val, 0) if fields[key].type in ("int", int) else val
    return out


def make_config(args) -> Config:
    values = load_config(getattr(args, "config", None))
    for f in dataclasses.fields(Config):
        v = getattr(args, f.name, None)
        if v is not None:
            values[f.name] = v
    cfg = Config(**values)
    cfg.validate()
    return cfg


def _emit(obj: dict, cfg: Config, out):
    if cfg.format == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
        return
    for key, val in obj.items():
        if isinstance(val, list):
            out.write(f"{key}:\n")
            for item in val:
                out.write(f"  {item}\n")
        else:
            out.write(f"{key}: {val}\n")


def _torus_arg(vals) -> TwistedTorus | None:
    if vals is None:
        return None
    return TwistedTorus(*vals)


def _write_matrices(code: CssCode, path: str, fmt: str):
    hx, hz = code.checks
    base = Path(path)
    base.parent.mkdir(parents=True, exist_ok=True)
    writer = write_alist if fmt == "alist" else write_dense
    ext = "alist" if fmt == "alist" else "txt"
    for name, m in (("hx", hx), ("hz", hz)):
        with open(f"{base}.{name}.{ext}", "w") as fh:
            writer(m, fh)


def _distance_report(code: CssCode, cfg: Config) -> dict:
    res = css_distance(code, cfg.policy_for(code.n), cfg.seed)
    return {"d": res.d, "d_exact": res.exact, "d_side": res.side, "d_lower_bound": res.lower_bound}


def cmd_analyze(args, cfg: Config, out) -> int:
    f, g = parse(args.f), parse(args.g)
    order = ORDERS[cfg.order]
    report: dict = {"f": render(f), "g": render(g)}
    to_ok = check_to_condition(f, g, cfg.budget)
    report["to_condition"] = to_ok
    status = EXIT_OK
    if to_ok:
        gb = laurent_ideal_basis(f, g, order=order, budget=cfg.budget)
        sm = standard_monomials(gb)
        report["groebner_basis"] = [str(p) for p in gb.gens]
        report["standard_monomials"] = [render_mono(e) for e in sm.monomials]
        report["k_max"] = 2 * sm.count
    else:
        report["k_max"] = None
        report["diagnostic"] = "f and g share a common factor: the topological-order condition fails"
        status = EXIT_INPUT
    torus = _torus_arg(args.torus)
    if torus is not None:
        code = CssCode(f, g, torus)
        k = k_on_torus(f, g, torus)
        kr = k_from_ranks(code)
        if k != kr:
            raise InvariantViolation(f"Groebner k={k} disagrees with rank k={kr}")
        report.update({"a1": list(torus.a1), "a2": list(torus.a2), "n": torus.n, "k": k})
        if cfg.distance != "none" and k > 0 and getattr(args, "with_distance", False):
            report.update(_distance_report(code, cfg))
        if args.emit_matrices:
            _write_matrices(code, args.emit_matrices, args.matrix_format)
            report["matrices"] = args.emit_matrices
    _emit(report, cfg, out)
    if status != EXIT_OK:
        print(f"error: {report['diagnostic']}", file=sys.stderr)
    return status


def render_mono(e) -> str:
    from .poly2 import LaurentPoly

    return render(LaurentPoly.monomial(*e))


def cmd_period(args, cfg: Config, out) -> int:
    f, g = parse(args.f), parse(args.g)
    report: dict = {"f": render(f), "g": render(g)}
    for var, label in (("y", "L_y"), ("x", "L_x")):
        h = univariate_generator(f, g, var, cfg.budget)
        fac = factor_univariate(h, var)
        report[f"h_{var}"] = render(h)
        report[f"factors_{var}"] = [
            f"({render(p)})^{m} order {minimal_period(p, var)}" if m > 1 else f"{render(p)} order {minimal_period(p, var)}"
            for p, m in fac.factors
        ]
        report[label] = minimal_period(h, var)
    report["k_max"] = k_max(f, g)
    if not args.no_twist:
        tw = minimal_full_k_twisted(f, g)
        if tw is not None:
            report["twisted_full_k"] = {"a1": list(tw.a1), "a2": list(tw.a2), "n": tw.n}
    _emit(report, cfg, out)
    return EXIT_OK


def _n_values(args) -> tuple[int, ...]:
    if args.n:
        return tuple(args.n)
    lo, hi = args.n_min, args.n_max
    if lo is None or hi is None:
        raise ValueError("give --n or both --n-min and --n-max")
    if lo % 2:
        lo += 1
    return tuple(range(lo, hi + 1, 2))


def cmd_search(args, cfg: Config, out) -> int:
    ns = _n_values(args)
    space = SearchSpace(ns, policy=cfg.policy_for(max(ns, default=0)), order=args.rank_by, prune=not args.all_records, seed=cfg.seed)
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "records.jsonl", "w") as fh:
        summary = run_search(space, cfg.workers, fh)
    optima = [summary.optima[n] for n in sorted(summary.optima)]
    with open(outdir / "optima.csv", "w") as fh:
        write_csv(optima, fh)
    if cfg.format == "csv":
        write_csv(optima, out)
    elif cfg.format == "json":
        for r in optima:
            out.write(r.to_json() + "\n")
    else:
        out.write(format_table(optima))
    return EXIT_OK


def cmd_reduce1d(args, cfg: Config, out) -> int:
    f, g = parse(args.f), parse(args.g)
    torus = TwistedTorus(args.alpha, 1, args.gamma)
    code = reduce_to_1d(f, g, torus)
    report = {"f_y": render(code.f), "g_y": render(code.g), "l": code.l, "n": code.n, "k": k_1d(code)}
    if getattr(args, "with_distance", False) and report["k"] > 0:
        report.update(_distance_report(code.as_css_code(), cfg))
    _emit(report, cfg, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value configuration file")
    common.add_argument("--order", choices=sorted(ORDERS), default=None)
    common.add_argument("--distance", choices=["auto", "exact", "ris", "none"], default=None)
    common.add_argument("--cap", type=int, default=None, help="largest distance certified exactly")
    common.add_argument("--trials", type=int, default=None, help="random information sets per side")
    common.add_argument("--seed", type=lambda s: int(s, 0), default=None)
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--format", choices=["json", "csv", "table"], default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="toricgb", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="TO condition, k_max, k on a torus")
    a.add_argument("f")
    a.add_argument("g")
    a.add_argument("--torus", nargs=3, type=int, metavar=("ALPHA", "BETA", "GAMMA"))
    a.add_argument("--with-distance", action="store_true")
    a.add_argument("--emit-matrices", metavar="PATH", help="write PATH.hx.* and PATH.hz.*")
    a.add_argument("--matrix-format", choices=["alist", "dense"], default="dense")
    a.set_defaults(func=cmd_analyze)

    pr = sub.add_parser("period", parents=[common], help="anyon periods and minimal tori")
    pr.add_argument("f")
    pr.add_argument("g")
    pr.add_argument("--no-twist", action="store_true", help="skip the twisted-torus scan")
    pr.set_defaults(func=cmd_period)

    s = sub.add_parser("search", parents=[common], help="search generalized toric codes")
    s.add_argument("--n", type=int, nargs="+")
    s.add_argument("--n-min", type=int)
    s.add_argument("--n-max", type=int)
    s.add_argument("--out-dir", default="search_out")
    s.add_argument("--rank-by", choices=["merit", "d"], default="merit")
    s.add_argument("--all-records", action="store_true", help="compute d for every k > 0 candidate")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("reduce1d", parents=[common], help="reduce a beta = 1 code to one dimension")
    r.add_argument("f")
    r.add_argument("g")
    r.add_argument("--alpha", type=int, required=True)
    r.add_argument("--gamma", type=int, required=True)
    r.add_argument("--with-distance", action="store_true")
    r.set_defaults(func=cmd_reduce1d)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = make_config(args)
        return args.func(args, cfg, out)
    except (PolyParseError, DegenerateReduction, NoLogicalSpace, NotZeroDimensionalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GroebnerBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
