"""Brute-force steady solver for the full axisymmetric advection-conduction PDE.

    v(r) dT/dx = D (T_rr + (d/r) T_r + T_xx) + A r^2/a^2

on a vertex-centred (x, r) grid with a Dirichlet inlet, symmetry at the axis,
a Dirichlet or Robin wall and a zero-gradient outlet. The five-point system is
relaxed with line SOR (one tridiagonal solve per axial station, stations swept
downstream) or, for cross-checking, handed to a sparse direct solver.

The hybrid scheme switches the advection term from central to first-order
upwind where the cell Peclet number ``v dx / D`` exceeds 2. Upwinding adds an
axial numerical diffusivity of ``v dx / 2`` in those cells.

Because each line solve treats the radial coupling implicitly, a smooth error
passed downstream from one station to the next is scaled by about
``omega * aW / (aW + aE)``. Under strong advection that ratio approaches 1, so
the relaxation factor of each station is capped at ``(aW + aE) / aW`` to keep
the downstream sweep from amplifying errors.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace
from typing import List, Optional

import numba as nb
import numpy as np

from .charpoly import beta1_exchange, beta1_wall_order4
from .core import Exchange, ProblemSpec, dimensionless
from .errors import InsulatedWithDissipation, NonConvergence

SCHEMES = ("hybrid", "central")
SOLVERS = ("sor", "direct")


@dataclass(frozen=True)
class FdmConfig:
    """Grid and iteration settings. ``None`` entries are filled by :meth:`resolve`."""

    nx: Optional[int] = None
    nr: int = 65
    L: Optional[float] = None
    relax: float = 1.2
    tol: float = 1e-10
    max_iter: int = 200_000
    scheme: str = "hybrid"
    solver: str = "sor"

    def __post_init__(self):
        if self.nx is not None and self.nx < 16:
            raise ValueError("nx must be >= 16")
        if self.nr < 8:
            raise ValueError("nr must be >= 8")
        if self.L is not None and not self.L > 0:
            raise ValueError("L must be > 0")
        if not 0.0 < self.relax < 2.0:
            raise ValueError("relax must lie in (0, 2)")
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}")
        if self.solver not in SOLVERS:
            raise ValueError(f"solver must be one of {SOLVERS}")

    def resolve(self, spec: ProblemSpec) -> "FdmConfig":
        """Fill in the domain length and axial count from the expected decay rate."""
        L, nx = self.L, self.nx
        if L is None:
            beta = _expected_decay(spec)
            L = spec.a * (max(10.0, 10.0 / beta) if beta > 0 else 10.0)
            if nx is None:
                # whole number of a/8 cells so grid nodes land on round xi
                L = spec.a / 8.0 * math.ceil(L / (spec.a / 8.0))
        if nx is None:
            nx = max(16, int(round(L / (spec.a / 8.0))) + 1)
        return replace(self, L=L, nx=nx)


def _expected_decay(spec):
    if isinstance(spec.bc, Exchange):
        g = dimensionless(spec)
        return beta1_exchange(g.pe, g.alpha, spec.d)
    return beta1_wall_order4(spec.peclet, spec.d)


@dataclass
class FdmSolution:
    spec: ProblemSpec
    config: FdmConfig
    x: np.ndarray
    r: np.ndarray
    T: np.ndarray  # shape (nx, nr)
    residual: float
    iterations: int
    history: List[float] = field(default_factory=list)

    @property
    def T0(self):
        return self.T[:, 0]

    @property
    def Ta(self):
        return self.T[:, -1]

    @property
    def T1a(self):
        dr = self.r[1] - self.r[0]
        return (3.0 * self.T[:, -1] - 4.0 * self.T[:, -2] + self.T[:, -3]) / (2.0 * dr)

    def centerline_theta(self):
        return (self.T0 - self.spec.T_ref) / self.spec.temperature_scale

    def to_csv(self, path):
        """Dump the field as ``x,r,T`` rows."""
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["x", "r", "T"])
            for i, xv in enumerate(self.x):
                for j, rv in enumerate(self.r):
                    w.writerow([repr(float(xv)), repr(float(rv)), repr(float(self.T[i, j]))])


def extract_boundary_functions(sol: FdmSolution):
    """Centreline T0(x), wall Ta(x) and second-order one-sided wall gradient T1a(x)."""
    return sol.T0.copy(), sol.Ta.copy(), sol.T1a


def assemble(spec: ProblemSpec, config: FdmConfig):
    """Five-point coefficients ``aP phi_P = aW phi_W + aE phi_E + aS phi_S + aN phi_N + b``.

    Unknowns are ``phi = T - T_ref``. Returns ``(config, x, r, coeffs, phi_init)``;
    coeffs is a (6, nx, nr) array ordered aP, aW, aE, aS, aN, b and config is resolved.
    """
    cfg = config.resolve(spec)
    nx, nr, L = cfg.nx, cfg.nr, cfg.L
    a, d, D = spec.a, spec.d, spec.D
    A = dimensionless(spec).A
    x = np.linspace(0.0, L, nx)
    r = np.linspace(0.0, a, nr)
    dx, dr = x[1] - x[0], r[1] - r[0]
    v = spec.u0 * (1.0 - (r / a) ** 2)
    inlet = spec.T_i - spec.T_ref

    aP, aW, aE, aS, aN, b = np.zeros((6, nx, nr))

    aW[:] = D / dx**2
    aE[:] = D / dx**2
    aP[:] = 2.0 * D / dx**2

    central = (v * dx / D <= 2.0) | (cfg.scheme == "central")
    aW += np.where(central, v / (2.0 * dx), v / dx)
    aE -= np.where(central, v / (2.0 * dx), 0.0)
    aP += np.where(central, 0.0, v / dx)

    # axis: (d/r) T_r -> d T_rr, with T_{-1} = T_1
    aN[:, 0] = 2.0 * (1 + d) * D / dr**2
    aP[:, 0] += 2.0 * (1 + d) * D / dr**2
    rj = r[1:-1]
    aN[:, 1:-1] = D / dr**2 + d * D / (2.0 * rj * dr)
    aS[:, 1:-1] = D / dr**2 - d * D / (2.0 * rj * dr)
    aP[:, 1:-1] += 2.0 * D / dr**2
    b[:] = A * (r / a) ** 2

    if isinstance(spec.bc, Exchange):
        # ghost node from k T_r = h (T_inf - T); T_inf - T_ref = 0
        hk = spec.bc.h / spec.fluid.k
        aS[:, -1] = 2.0 * D / dr**2
        aP[:, -1] += 2.0 * D / dr**2 + 2.0 * D * hk / dr + d * D * hk / a
    else:
        aP[:, -1], aW[:, -1], aE[:, -1], aS[:, -1], aN[:, -1], b[:, -1] = 1, 0, 0, 0, 0, 0

    # outlet: T_{nx} = T_{nx-2}
    aW[-1] += aE[-1]
    aE[-1] = 0.0

    aP[0], aW[0], aE[0], aS[0], aN[0] = 1.0, 0.0, 0.0, 0.0, 0.0
    b[0] = inlet
    if not isinstance(spec.bc, Exchange):
        b[0, -1] = 0.0

    phi = np.full((nx, nr), inlet)
    dirichlet = (aP == 1.0) & (aW == 0) & (aE == 0) & (aS == 0) & (aN == 0)
    phi[dirichlet] = b[dirichlet]
    return cfg, x, r, np.stack([aP, aW, aE, aS, aN, b]), phi


@nb.njit(cache=True)
def _residual(phi, c):
    aP, aW, aE, aS, aN, b = c[0], c[1], c[2], c[3], c[4], c[5]
    nx, nr = phi.shape
    num = 0.0
    den = 0.0
    for i in range(nx):
        for j in range(nr):
            s = b[i, j] - aP[i, j] * phi[i, j]
            if i > 0:
                s += aW[i, j] * phi[i - 1, j]
            if i < nx - 1:
                s += aE[i, j] * phi[i + 1, j]
            if j > 0:
                s += aS[i, j] * phi[i, j - 1]
            if j < nr - 1:
                s += aN[i, j] * phi[i, j + 1]
            s /= aP[i, j]
            num += s * s
            den += phi[i, j] * phi[i, j]
    return num, den


@nb.njit(cache=True)
def _line_sor_sweep(phi, c, omega, cp, dp):
    # omega holds one relaxation factor per axial station
    aP, aW, aE, aS, aN, b = c[0], c[1], c[2], c[3], c[4], c[5]
    nx, nr = phi.shape
    for i in range(1, nx):
        # Thomas algorithm on -aS phi_{j-1} + aP phi_j - aN phi_{j+1} = rhs_j
        for j in range(nr):
            rhs = b[i, j] + aW[i, j] * phi[i - 1, j]
            if i < nx - 1:
                rhs += aE[i, j] * phi[i + 1, j]
            if j == 0:
                cp[j] = -aN[i, j] / aP[i, j]
                dp[j] = rhs / aP[i, j]
            else:
                m = aP[i, j] + aS[i, j] * cp[j - 1]
                cp[j] = -aN[i, j] / m
                dp[j] = (rhs + aS[i, j] * dp[j - 1]) / m
        w = omega[i]
        new = dp[nr - 1]
        phi[i, nr - 1] += w * (new - phi[i, nr - 1])
        for j in range(nr - 2, -1, -1):
            new = dp[j] - cp[j] * new
            phi[i, j] += w * (new - phi[i, j])


def _relative_residual(phi, c):
    num, den = _residual(phi, c)
    return math.sqrt(num) / math.sqrt(den) if den > 0 else math.sqrt(num)


def station_relaxation(coeffs, relax):
    """Relaxation factor per axial station, ``min(relax, (aW + aE) / aW)``."""
    aW, aE = coeffs[1], coeffs[2]
    with np.errstate(divide="ignore", invalid="ignore"):
        cap = np.where(aW > 0, (aW + aE) / aW, np.inf).min(axis=1)
    return np.minimum(relax, np.maximum(cap, 1.0))


def _solve_sor(phi, coeffs, cfg):
    nr = phi.shape[1]
    cp = np.empty(nr)
    dp = np.empty(nr)
    omega = station_relaxation(coeffs, cfg.relax)
    res = _relative_residual(phi, coeffs)
    history = [res]
    it = 0
    while res > cfg.tol:
        if it >= cfg.max_iter or not math.isfinite(res):
            raise NonConvergence(
                f"line SOR stopped after {it} sweeps at residual {res:.3e}", history
            )
        _line_sor_sweep(phi, coeffs, omega, cp, dp)
        it += 1
        res = _relative_residual(phi, coeffs)
        history.append(res)
    return phi, res, it, history


def _solve_direct(phi, coeffs):
    from scipy.sparse import coo_matrix
    from scipy.sparse.linalg import spsolve

    aP, aW, aE, aS, aN, b = coeffs
    nx, nr = phi.shape
    idx = np.arange(nx * nr).reshape(nx, nr)
    rows, cols, vals = [idx.ravel()], [idx.ravel()], [aP.ravel()]
    for coef, di, dj in ((aW, -1, 0), (aE, 1, 0), (aS, 0, -1), (aN, 0, 1)):
        ii, jj = np.nonzero(coef)
        rows.append(idx[ii, jj])
        cols.append(idx[ii + di, jj + dj])
        vals.append(-coef[ii, jj])
    mat = coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(nx * nr, nx * nr),
    ).tocsc()
    phi = spsolve(mat, b.ravel()).reshape(nx, nr)
    res = _relative_residual(phi, coeffs)
    return phi, res, 1, [res]


def fdm_solve(spec: ProblemSpec, config: Optional[FdmConfig] = None) -> FdmSolution:
    """Solve the steady PDE on a structured grid.

    Raises
    ------
    InsulatedWithDissipation
        Insulated wall (``h == 0``) with viscous heating.
    NonConvergence
        SOR hit ``max_iter``; the residual history is attached.
    """
    config = config or FdmConfig()
    if isinstance(spec.bc, Exchange) and spec.bc.h == 0 and dimensionless(spec).A > 0:
        raise InsulatedWithDissipation("insulated wall with viscous heating has no steady state")
    cfg, x, r, coeffs, phi = assemble(spec, config)
    if cfg.solver == "direct":
        phi, res, it, history = _solve_direct(phi, coeffs)
    else:
        phi, res, it, history = _solve_sor(phi, coeffs, cfg)
    return FdmSolution(spec, cfg, x, r, phi + spec.T_ref, res, it, history)
