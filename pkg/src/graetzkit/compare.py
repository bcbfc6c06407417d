"""Run several solution methods on one problem and quantify how far apart they are."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .core import Exchange, ProblemSpec
from .errors import BCMismatch
from .exchange_rbf import solve_exchange_order4
from .fdm_oracle import FdmConfig, FdmSolution, fdm_solve
from .series_ref import theta_series
from .wall_rbf import solve_wall_order4, solve_wall_order6

METHODS = ("order4", "order6", "series", "fdm")


@dataclass
class CompareReport:
    xi: np.ndarray
    profiles: Dict[str, np.ndarray]
    rows: List[list]  # quantity, method_a, method_b, value, tolerance, passed
    passed: bool
    fdm: Optional[FdmSolution] = None
    notes: List[str] = field(default_factory=list)

    columns = ["quantity", "method_a", "method_b", "value", "tolerance", "pass"]

    def deviation(self, a, b, kind="max_dev"):
        for row in self.rows:
            if row[0] == kind and {row[1], row[2]} == {a, b}:
                return row[3]
        raise KeyError((kind, a, b))


def check_methods(spec: ProblemSpec, methods: Sequence[str]):
    """Raise BCMismatch for a method that cannot describe this problem."""
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}; choose from {METHODS}")
    exchange = isinstance(spec.bc, Exchange)
    if "order6" in methods and exchange:
        raise BCMismatch("order6 exists only for a uniform-temperature wall")
    if "series" in methods:
        if exchange or spec.d != 0:
            raise BCMismatch("the tabulated series covers parallel plates at uniform wall temperature only")
        if spec.peclet <= 0:
            raise BCMismatch("the series coordinate x/(a pe) needs pe > 0")


def centerline_theta(spec: ProblemSpec, method: str, xi, fdm: Optional[FdmSolution] = None):
    xi = np.asarray(xi, dtype=float)
    if method == "order4":
        sol = solve_exchange_order4(spec) if isinstance(spec.bc, Exchange) else solve_wall_order4(spec)
        return sol.theta0(xi)
    if method == "order6":
        return solve_wall_order6(spec).theta0(xi)
    if method == "series":
        return theta_series(xi / spec.peclet, 8)
    if fdm is None:
        raise ValueError("fdm profile requested without a solution")
    xg = fdm.x / spec.a
    if xi.max() > xg[-1] + 1e-12:
        raise ValueError(f"xi={xi.max()} lies beyond the FDM domain ({xg[-1]})")
    return np.interp(xi, xg, fdm.centerline_theta())


def observed_order(spec: ProblemSpec, config: FdmConfig):
    """Observed convergence order of the centreline from three nested grids.

    ``config`` is the coarsest grid; the other two halve both spacings once and
    twice on the same domain. Returns ``(order, (e_coarse, e_fine))``.
    """
    base = config.resolve(spec)
    base = replace(base, tol=min(base.tol, 1e-12))
    sols = [
        fdm_solve(spec, replace(base, nr=(base.nr - 1) * k + 1, nx=(base.nx - 1) * k + 1))
        for k in (1, 2, 4)
    ]
    nodes = [s.T0[:: (s.T0.size - 1) // (base.nx - 1)] for s in sols]
    e1 = np.abs(nodes[0] - nodes[1]).max()
    e2 = np.abs(nodes[1] - nodes[2]).max()
    order = math.log2(e1 / e2) if e2 > 0 and e1 > 0 else float("nan")
    return order, (e1, e2)


def compare(
    spec: ProblemSpec,
    methods: Sequence[str],
    xi,
    fdm_config: Optional[FdmConfig] = None,
    tolerances: Optional[Dict[Tuple[str, str], float]] = None,
    convergence: bool = False,
) -> CompareReport:
    """Align centreline profiles on ``xi`` and report pairwise deviations.

    Deviations are in units of the temperature scale ``T_i - T_ref``: the
    maximum absolute gap and the root-mean-square gap over the grid.
    ``passed`` is False if any declared tolerance on the max gap is exceeded.
    """
    methods = list(dict.fromkeys(methods))
    if len(methods) < 2:
        raise ValueError("compare needs at least two methods")
    check_methods(spec, methods)
    tolerances = {tuple(sorted(k)): v for k, v in (tolerances or {}).items()}
    xi = np.asarray(xi, dtype=float)

    fdm = None
    rows = []
    notes = []
    passed = True
    if "fdm" in methods:
        fdm = fdm_solve(spec, fdm_config or FdmConfig())
        rows.append(["fdm_residual", "fdm", "", fdm.residual, fdm.config.tol, fdm.residual <= fdm.config.tol])
        rows.append(["fdm_iterations", "fdm", "", float(fdm.iterations), None, None])
        if convergence:
            order, _ = observed_order(spec, fdm.config)
            rows.append(["fdm_observed_order", "fdm", "", order, None, None])
    if isinstance(spec.bc, Exchange) and "series" not in methods:
        notes.append("exchange wall: centreline from the wall-anchored order-4 reconstruction")

    profiles = {m: centerline_theta(spec, m, xi, fdm) for m in methods}
    for a, b in itertools.combinations(methods, 2):
        gap = profiles[a] - profiles[b]
        max_dev = float(np.abs(gap).max())
        l2_dev = float(np.sqrt(np.mean(gap**2)))
        tol = tolerances.get(tuple(sorted((a, b))))
        ok = None if tol is None else max_dev <= tol
        if ok is False:
            passed = False
        rows.append(["max_dev", a, b, max_dev, tol, ok])
        rows.append(["l2_dev", a, b, l2_dev, None, None])
    return CompareReport(xi, profiles, rows, passed, fdm, notes)
