"""Tabular data behind the decay-constant and centreline-temperature figures.

Each builder returns a :class:`Table`; writing and plotting live elsewhere so
that the numbers can be tested without touching the filesystem.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from .charpoly import beta1_exchange, beta1_wall_order4, solve_quartic_wall_order6
from .core import make_spec
from .errors import NumericalError
from .series_ref import theta_series
from .wall_rbf import solve_wall_order4, solve_wall_order6

FIGURES = ("fig2", "fig3", "fig4", "fig6")
PE_PROXY = 1000.0


@dataclass
class Table:
    name: str
    columns: List[str]
    rows: List[List[Optional[float]]]
    params: Dict[str, object] = field(default_factory=dict)

    def column(self, name):
        k = self.columns.index(name)
        return np.array([np.nan if row[k] is None else row[k] for row in self.rows])


def log_sweep(lo=0.1, hi=1000.0, points=41):
    return [float(v) for v in np.logspace(math.log10(lo), math.log10(hi), points)]


def _safe(fn, *args):
    try:
        return float(fn(*args))
    except NumericalError:
        return None


def _beta2(pe, d):
    return solve_quartic_wall_order6(pe, d).beta2


def _beta1_o6(pe, d):
    return solve_quartic_wall_order6(pe, d).beta1


def fig2(pe_values: Sequence[float]) -> Table:
    """beta1 against pe at both expansion orders, plates and tube."""
    rows = []
    for pe in pe_values:
        rows.append(
            [
                pe,
                beta1_wall_order4(pe, 0),
                _safe(_beta1_o6, pe, 0),
                beta1_wall_order4(pe, 1),
                _safe(_beta1_o6, pe, 1),
            ]
        )
    cols = ["pe", "beta1_order4_d0", "beta1_order6_d0", "beta1_order4_d1", "beta1_order6_d1"]
    return Table("fig2", cols, rows, {"pe_points": len(rows)})


def fig3(pe_values: Sequence[float]) -> Table:
    rows = [[pe, _safe(_beta2, pe, 0), _safe(_beta2, pe, 1)] for pe in pe_values]
    return Table("fig3", ["pe", "beta2_d0", "beta2_d1"], rows, {"pe_points": len(rows)})


def fig4(xi1_values: Sequence[float], pe_values=(PE_PROXY, 1.0)) -> Table:
    """Centreline theta for plates against the Graetz coordinate ``x/(a pe)``.

    The series has no pe dependence; the expansion solutions are evaluated at
    each listed pe (the first standing in for pe = infinity).
    """
    xi1 = np.asarray(xi1_values, dtype=float)
    series = theta_series(xi1, 8)
    rows = []
    for pe in pe_values:
        spec = make_spec(0, pe=pe)
        o4 = solve_wall_order4(spec).theta0(xi1 * pe)
        o6 = solve_wall_order6(spec).theta0(xi1 * pe)
        for k in range(xi1.size):
            rows.append([float(pe), float(xi1[k]), float(series[k]), float(o4[k]), float(o6[k])])
    cols = ["pe", "xi1", "theta_series_8terms", "theta_order4", "theta_order6"]
    return Table("fig4", cols, rows, {"pe_proxy": pe_values[0], "d": 0, "A": 0})


def fig6(pe_values=(0.0, 1.0, 10.0, 100.0, 1000.0), alpha_values=None) -> Table:
    """Exchange-wall beta1 over (pe, alpha); pe = 0 is the conduction-dominated limit."""
    if alpha_values is None:
        alpha_values = [round(0.01 * k, 2) for k in range(1, 100)]
    rows = []
    for pe in pe_values:
        for alpha in alpha_values:
            rows.append(
                [float(pe), float(alpha), beta1_exchange(pe, alpha, 0), beta1_exchange(pe, alpha, 1)]
            )
    cols = ["pe", "alpha", "beta1_exchange_d0", "beta1_exchange_d1"]
    return Table("fig6", cols, rows, {"pe_list": list(pe_values)})


def emit_figure(fig_id: str, pe_values=None, xi1_values=None, alpha_values=None) -> Table:
    if fig_id not in FIGURES:
        raise ValueError(f"unknown figure {fig_id!r}; choose from {FIGURES}")
    if fig_id in ("fig2", "fig3"):
        pe_values = pe_values if pe_values is not None else log_sweep()
        return fig2(pe_values) if fig_id == "fig2" else fig3(pe_values)
    if fig_id == "fig4":
        xi1 = xi1_values if xi1_values is not None else np.linspace(0.0, 1.0, 101)
        return fig4(xi1) if pe_values is None else fig4(xi1, tuple(pe_values))
    if pe_values is None:
        return fig6(alpha_values=alpha_values)
    return fig6(tuple(pe_values), alpha_values)
