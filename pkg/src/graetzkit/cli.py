"""Command-line front end.

    graetzkit figure fig2 --out fig2.csv
    graetzkit solve --order 6 --pe 10 --d 1 --out profile.csv
    graetzkit compare --methods order4,order6,fdm --pe 10
    graetzkit fdm-dump --pe 10 --out field.csv

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 invalid regime.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

import numpy as np

from . import __version__
from .compare import METHODS, check_methods, compare
from .core import Exchange, make_spec
from .errors import BCMismatch, GraetzError, InvalidRegime, NumericalError
from .exchange_rbf import solve_exchange_order4
from .fdm_oracle import FdmConfig, fdm_solve
from .figures import FIGURES, Table, emit_figure, log_sweep
from .series_ref import theta_series
from .wall_rbf import solve_wall_order4, solve_wall_order6

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_REGIME = 0, 1, 2, 3

# Problem defaults; every value ends up in the output header.
DEFAULTS = {
    "d": 0,
    "pe": None,
    "a": 1.0,
    "u0": 1.0,
    "fluid": "1,1,1,0",
    "ti": 1.0,
    "tw": 0.0,
    "h": None,
    "tinf": 0.0,
    "order": None,
    "method": None,
    "methods": None,
    "out": None,
    "format": "csv",
    "xi_range": None,
    "xi1_range": None,
    "points": 201,
    "pe_list": None,
    "pe_range": None,
    "alpha_list": None,
    "nr": 65,
    "nx": None,
    "length": None,
    "relax": 1.2,
    "tol": 1e-10,
    "tolerance": None,
    "convergence": False,
    "plot": True,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)

    def __getattr__(self, name):
        try:
            return self.__dict__["params"][name]
        except KeyError:
            raise AttributeError(name) from None

    def spec(self):
        k, rho, cp, mu = _floats(self.fluid, 4, "fluid")
        return make_spec(
            int(self.d),
            None if self.pe is None else float(self.pe),
            a=float(self.a),
            u0=float(self.u0),
            k=k,
            rho=rho,
            cp=cp,
            mu=mu,
            T_i=float(self.ti),
            T_w=float(self.tw),
            h=None if self.h is None else float(self.h),
            T_inf=float(self.tinf),
        )

    def fdm_config(self):
        return FdmConfig(
            nx=None if self.nx is None else int(self.nx),
            nr=int(self.nr),
            L=None if self.length is None else float(self.length),
            relax=float(self.relax),
            tol=float(self.tol),
        )

    def header_params(self):
        keys = sorted(k for k in self.params if k not in ("out", "format", "plot"))
        return " ".join(f"{k}={_fmt_param(self.params[k])}" for k in keys)


def _fmt_param(v):
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt_param(x) for x in v)
    return "none" if v is None else str(v)


def _floats(value, n=None, name="value"):
    if isinstance(value, str):
        parts = [p for p in value.split(",") if p.strip()]
    elif isinstance(value, (int, float)):
        parts = [value]
    else:
        parts = list(value)
    try:
        out = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"{name}: expected comma-separated numbers, got {value!r}") from None
    if n is not None and len(out) != n:
        raise UsageError(f"{name}: expected {n} numbers, got {len(out)}")
    if not out:
        raise UsageError(f"{name}: empty list")
    return out


def build_parser():
    p = _Parser(prog="graetzkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"graetzkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        g = sp.add_argument_group("problem (SI units)")
        g.add_argument("--d", type=int, choices=(0, 1), help="0 plates, 1 tube")
        g.add_argument("--pe", type=float, help="Peclet number u0 a / D (overrides --u0)")
        g.add_argument("--a", type=float, help="half-gap or radius [m]")
        g.add_argument("--u0", type=float, help="centreline velocity [m/s]")
        g.add_argument("--fluid", help="k,rho,cp,mu")
        g.add_argument("--ti", type=float, help="inlet temperature [K]")
        g.add_argument("--tw", type=float, help="wall temperature [K]")
        g.add_argument("--h", type=float, help="wall heat transfer coefficient; selects the exchange wall")
        g.add_argument("--tinf", type=float, help="surrounding temperature [K]")
        sp.add_argument("--out", help="output file (default stdout)")
        sp.add_argument("--format", choices=("csv", "json"))
        sp.add_argument("--config", help="JSON file with any of the flag values")
        sp.add_argument("--no-plot", dest="plot", action="store_const", const=False, default=None,
                        help="skip the PNG rendered next to --out")

    def grid(sp):
        g = sp.add_argument_group("finite-difference grid")
        g.add_argument("--nr", type=int)
        g.add_argument("--nx", type=int)
        g.add_argument("--length", type=float, help="axial domain length [m]")
        g.add_argument("--relax", type=float)
        g.add_argument("--tol", type=float)

    def axis(sp):
        sp.add_argument("--xi-range", help="lo,hi in x/a")
        sp.add_argument("--xi1-range", help="lo,hi in x/(a pe)")
        sp.add_argument("--points", type=int)

    f = sub.add_parser("figure", help="data (and PNG) for one of the figures")
    f.add_argument("fig_id", choices=FIGURES)
    f.add_argument("--pe-list", help="explicit pe values")
    f.add_argument("--pe-range", help="lo,hi,points (log spaced)")
    f.add_argument("--alpha-list", help="alpha values (fig6)")
    common(f)
    axis(f)

    s = sub.add_parser("solve", help="centreline/wall profiles for one case")
    s.add_argument("--method", choices=METHODS)
    s.add_argument("--order", type=int, choices=(4, 6))
    common(s)
    axis(s)
    grid(s)

    c = sub.add_parser("compare", help="deviations between methods on one case")
    c.add_argument("--methods", help="comma list from " + ",".join(METHODS))
    c.add_argument("--tolerance", action="append",
                   help="a:b=value, limit on the max deviation between two methods")
    c.add_argument("--convergence", action="store_const", const=True, default=None,
                   help="add an FDM observed-order check from three nested grids")
    common(c)
    axis(c)
    grid(c)

    dmp = sub.add_parser("fdm-dump", help="full FDM field as x,r,T")
    common(dmp)
    grid(dmp)
    return p


def load_config(args) -> RunConfig:
    """Defaults, then the JSON file, then explicit flags."""
    params = dict(DEFAULTS)
    cli = {k: v for k, v in vars(args).items() if k not in ("command", "config") and v is not None}
    if getattr(args, "config", None):
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        unknown = set(data) - set(DEFAULTS) - {"fig_id"}
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        params.update({k.replace("-", "_"): v for k, v in data.items()})
    params.update(cli)
    if params.get("fluid") is not None and not isinstance(params["fluid"], str):
        params["fluid"] = ",".join(str(v) for v in params["fluid"])
    return RunConfig(args.command, params)


def _xi_grid(cfg: RunConfig, spec, default_hi):
    points = int(cfg.points)
    if points < 2:
        raise UsageError("--points must be >= 2")
    if cfg.xi1_range is not None:
        lo, hi = _floats(cfg.xi1_range, 2, "xi1-range")
        if spec.peclet <= 0:
            raise UsageError("--xi1-range needs pe > 0")
        return np.linspace(lo, hi, points) * spec.peclet
    if cfg.xi_range is not None:
        lo, hi = _floats(cfg.xi_range, 2, "xi-range")
    else:
        lo, hi = 0.0, default_hi
    if lo < 0 or hi <= lo:
        raise UsageError("axial range must satisfy 0 <= lo < hi")
    return np.linspace(lo, hi, points)


def _default_xi_hi(spec, cfg):
    return cfg.fdm_config().resolve(spec).L / spec.a


# ---------------------------------------------------------------- output


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "" if math.isnan(v) else repr(v)
    return str(v)


def render(cfg: RunConfig, columns, rows, meta=None) -> str:
    header = f"graetzkit {__version__} {cfg.command} {cfg.header_params()}".rstrip()
    if cfg.format == "json":
        def clean(v):
            if isinstance(v, float) and math.isnan(v):
                return None
            return v
        doc = {
            "header": header,
            "meta": meta or {},
            "columns": list(columns),
            "rows": [[clean(v) for v in row] for row in rows],
        }
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(f"# {header}\n")
    for k, v in (meta or {}).items():
        buf.write(f"# {k}: {v}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _write(cfg: RunConfig, text: str):
    if cfg.out is None:
        sys.stdout.write(text)
        return None
    path = Path(cfg.out)
    try:
        path.write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None
    return path


def _plot_path(cfg, path):
    if path is None or not cfg.plot:
        return None
    return path.with_suffix(".png")


# ---------------------------------------------------------------- commands


def cmd_figure(cfg: RunConfig):
    pe_values = None
    if cfg.pe_list is not None:
        pe_values = _floats(cfg.pe_list, name="pe-list")
    elif cfg.pe_range is not None:
        lo, hi, n = _floats(cfg.pe_range, 3, "pe-range")
        pe_values = log_sweep(lo, hi, int(n))
    alpha = None if cfg.alpha_list is None else _floats(cfg.alpha_list, name="alpha-list")
    xi1 = None
    if cfg.fig_id == "fig4":
        lo, hi = (0.0, 1.0) if cfg.xi1_range is None else _floats(cfg.xi1_range, 2, "xi1-range")
        if lo < 0 or hi <= lo or int(cfg.points) < 2:
            raise UsageError("xi1 range must satisfy 0 <= lo < hi with at least 2 points")
        xi1 = np.linspace(lo, hi, int(cfg.points))
    if alpha is not None and not all(0 < x <= 1 for x in alpha):
        raise UsageError("alpha values must lie in (0, 1]")
    if pe_values is not None and not all(x >= 0 for x in pe_values):
        raise UsageError("pe values must be >= 0")
    table: Table = emit_figure(cfg.fig_id, pe_values, xi1, alpha)
    meta = dict(table.params)
    if cfg.fig_id == "fig4":
        meta["note"] = "series is the pe=inf plates solution; first pe block is its finite proxy"
    path = _write(cfg, render(cfg, table.columns, table.rows, meta))
    png = _plot_path(cfg, path)
    if png is not None:
        from .plotting import plot_table

        plot_table(table, png)
    return EXIT_OK


def cmd_solve(cfg: RunConfig):
    spec = cfg.spec()
    method = cfg.method or (f"order{cfg.order}" if cfg.order else "order4")
    if cfg.order and cfg.method and cfg.method != f"order{cfg.order}":
        raise UsageError("--order conflicts with --method")
    check_methods(spec, [method])
    xi = _xi_grid(cfg, spec, _default_xi_hi(spec, cfg))
    x = xi * spec.a
    meta = {"method": method}
    if method == "fdm":
        sol = fdm_solve(spec, cfg.fdm_config())
        if x[-1] > sol.x[-1] + 1e-12:
            raise UsageError("requested range extends past the FDM domain")
        T0 = np.interp(x, sol.x, sol.T0)
        Ta = np.interp(x, sol.x, sol.Ta)
        T1a = np.interp(x, sol.x, sol.T1a)
        meta.update(fdm_residual=sol.residual, fdm_iterations=sol.iterations,
                    nx=sol.config.nx, nr=sol.config.nr, L=sol.config.L)
    elif method == "series":
        T0 = spec.T_ref + (spec.T_i - spec.T_ref) * theta_series(xi / spec.peclet, 8)
        Ta = np.full_like(xi, spec.T_ref)
        T1a = np.full_like(xi, np.nan)
    else:
        if isinstance(spec.bc, Exchange):
            sol = solve_exchange_order4(spec)
            Ta = sol.wall(x)
            meta.update(beta1=sol.beta1, alpha=sol.alpha, lam=sol.lam, v_adv=sol.v_adv)
        else:
            sol = solve_wall_order4(spec) if method == "order4" else solve_wall_order6(spec)
            Ta = np.full_like(xi, spec.T_ref)
            meta.update(beta1=sol.beta1)
            if method == "order6":
                meta.update(beta2=sol.beta2)
        T0 = sol.centerline(x)
        T1a = sol.wall_gradient(x)
    rows = [[float(x[k]), float(T0[k]), float(Ta[k]), float(T1a[k])] for k in range(xi.size)]
    path = _write(cfg, render(cfg, ["x", "T0", "Ta", "T1a"], rows, meta))
    png = _plot_path(cfg, path)
    if png is not None:
        from .plotting import plot_profiles

        plot_profiles(xi, {"T0": T0, "Ta": Ta}, png, ylabel="T [K]")
    return EXIT_OK


def _parse_tolerances(items):
    out = {}
    for item in items or []:
        try:
            pair, value = item.split("=")
            a, b = pair.split(":")
            out[(a.strip(), b.strip())] = float(value)
        except ValueError:
            raise UsageError(f"bad --tolerance {item!r}; expected a:b=value") from None
    return out


def cmd_compare(cfg: RunConfig):
    spec = cfg.spec()
    methods = cfg.methods
    if methods is None:
        methods = ["order4", "fdm"] if isinstance(spec.bc, Exchange) else ["order4", "order6", "fdm"]
    elif isinstance(methods, str):
        methods = [m.strip() for m in methods.split(",") if m.strip()]
    check_methods(spec, methods)
    tolerances = cfg.tolerance
    if isinstance(tolerances, dict):
        tolerances = {tuple(k.split(":")): float(v) for k, v in tolerances.items()}
    else:
        tolerances = _parse_tolerances(tolerances)
    hi = _default_xi_hi(spec, cfg) if "fdm" in methods else 10.0
    xi = _xi_grid(cfg, spec, hi)
    report = compare(spec, methods, xi, cfg.fdm_config(), tolerances, bool(cfg.convergence))
    meta = {"methods": ",".join(methods), "xi_lo": float(xi[0]), "xi_hi": float(xi[-1]),
            "points": int(xi.size), "passed": report.passed}
    for k, note in enumerate(report.notes):
        meta[f"note{k}"] = note
    path = _write(cfg, render(cfg, report.columns, report.rows, meta))
    png = _plot_path(cfg, path)
    if png is not None:
        from .plotting import plot_profiles

        plot_profiles(report.xi, report.profiles, png)
    return EXIT_OK if report.passed else EXIT_NUMERIC


def cmd_fdm_dump(cfg: RunConfig):
    spec = cfg.spec()
    sol = fdm_solve(spec, cfg.fdm_config())
    rows = [
        [float(sol.x[i]), float(sol.r[j]), float(sol.T[i, j])]
        for i in range(sol.x.size)
        for j in range(sol.r.size)
    ]
    meta = {"residual": sol.residual, "iterations": sol.iterations,
            "nx": sol.config.nx, "nr": sol.config.nr, "L": sol.config.L}
    _write(cfg, render(cfg, ["x", "r", "T"], rows, meta))
    return EXIT_OK


COMMANDS = {"figure": cmd_figure, "solve": cmd_solve, "compare": cmd_compare, "fdm-dump": cmd_fdm_dump}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        return COMMANDS[args.command](cfg)
    except (UsageError, BCMismatch, ValueError) as exc:
        print(f"graetzkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidRegime as exc:
        print(f"graetzkit: invalid regime: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except NumericalError as exc:
        print(f"graetzkit: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except GraetzError as exc:
        print(f"graetzkit: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
