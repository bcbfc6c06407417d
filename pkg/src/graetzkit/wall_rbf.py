"""Steady solutions for a wall held at uniform temperature.

Two truncations of the radial Taylor series about the centreline are provided:
up to ``r**4`` (one axial mode) and up to ``r**6`` (two axial modes). Both are
stored in dimensionless form (see :mod:`graetzkit.core`) and converted to
kelvin on output.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charpoly import beta1_wall_order4, solve_quartic_wall_order6
from .core import ProblemSpec, UniformWall, dissipation_group, solve_small
from .errors import BCMismatch, DegenerateRoots

DEGENERATE_GAP = 1e-8

# Rows map (T20, T40, T60) to (T1a, T2a, T3a) on a channel of unit half-width.
_WALL_MOMENTS_O6 = np.array(
    [
        [1.0, 1.0 / 6.0, 1.0 / 120.0],
        [1.0, 1.0 / 2.0, 1.0 / 24.0],
        [0.0, 1.0, 1.0 / 6.0],
    ]
)
_WALL_MOMENTS_O4 = _WALL_MOMENTS_O6[:2, :2]


def _require_uniform_wall(spec):
    if not isinstance(spec.bc, UniformWall):
        raise BCMismatch("uniform-wall solution requested for a heat-exchange wall")


def _inlet_theta(spec):
    return (spec.T_i - spec.T_ref) / spec.temperature_scale


@dataclass(frozen=True)
class _WallSolution:
    spec: ProblemSpec

    @property
    def d(self):
        return self.spec.d

    @property
    def pe(self):
        return self.spec.peclet

    def _to_kelvin(self, theta):
        return self.spec.T_ref + self.spec.temperature_scale * theta

    def _xi(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(x < 0):
            raise ValueError("x must be >= 0")
        return x / self.spec.a

    def centerline(self, x):
        """Centreline temperature T0(x) [K]."""
        return self._to_kelvin(self.theta0(self._xi(x)))

    def wall_gradient(self, x):
        """Radial temperature gradient at the wall, T1a(x) [K/m]."""
        return self.spec.temperature_scale * self.theta1a(self._xi(x)) / self.spec.a

    def moments(self, x):
        """Even radial derivatives at the centreline (T20, T40[, T60]) in SI units."""
        m = self.theta_moments(self._xi(x))
        a = self.spec.a
        scale = self.spec.temperature_scale
        return tuple(scale * m[..., i] / a ** (2 * i + 2) for i in range(m.shape[-1]))

    def theta_field(self, xi, rho):
        """Dimensionless field at ``xi = x/a``, ``rho = r/a``."""
        m = self.theta_moments(xi)
        rho2 = np.asarray(rho, dtype=float) ** 2
        # r^(2n) / (2n)! for n = 1, 2, 3
        out = self.theta0(xi) + rho2 / 2.0 * m[..., 0] + rho2**2 / 24.0 * m[..., 1]
        if m.shape[-1] == 3:
            out = out + rho2**3 / 720.0 * m[..., 2]
        return out

    def wall_residual(self, x):
        """``T(x, a) - T_w`` of the reconstructed field [K]."""
        return self._to_kelvin(self.theta_field(self._xi(x), 1.0)) - self.spec.T_ref


@dataclass(frozen=True)
class WallSolutionO4(_WallSolution):
    beta1: float
    G: float

    order = 4

    @property
    def _offset(self):
        return self.G / (4.0 * (3 + self.d))

    @property
    def _amp(self):
        return _inlet_theta(self.spec) - self._offset

    @property
    def T_inf_limit(self) -> float:
        """Far-field centreline temperature [K]."""
        return self._to_kelvin(self._offset)

    @property
    def amp(self) -> float:
        return self.spec.T_i - self.T_inf_limit

    @property
    def t1a_amp(self) -> float:
        return -8.0 / (5 + self.d) * self.amp / self.spec.a

    @property
    def t1a_offset(self) -> float:
        return -self.spec.temperature_scale * self.G / ((3 + self.d) * self.spec.a)

    def theta0(self, xi):
        return self._amp * np.exp(-self.beta1 * np.asarray(xi, dtype=float)) + self._offset

    def theta1a(self, xi):
        decay = np.exp(-self.beta1 * np.asarray(xi, dtype=float))
        return -8.0 / (5 + self.d) * self._amp * decay - self.G / (3 + self.d)

    def theta_moments(self, xi):
        t1a = self.theta1a(xi)
        rhs = np.stack([t1a, -self.d * t1a - self.G], axis=-1)
        return solve_small(_WALL_MOMENTS_O4, rhs)


@dataclass(frozen=True)
class WallSolutionO6(_WallSolution):
    beta1: float
    beta2: float
    G: float
    c: tuple  # centreline amplitudes (c1, c2, c3), dimensionless
    dc: tuple  # wall-gradient amplitudes (d1, d2, d3), dimensionless

    order = 6

    @property
    def C1(self):
        return self.spec.temperature_scale * self.c[0]

    @property
    def C2(self):
        return self.spec.temperature_scale * self.c[1]

    @property
    def C3(self):
        return self._to_kelvin(self.c[2])

    def _D(self, i):
        return self.spec.temperature_scale * self.dc[i] / self.spec.a

    @property
    def D1(self):
        return self._D(0)

    @property
    def D2(self):
        return self._D(1)

    @property
    def D3(self):
        return self._D(2)

    def _modes(self, xi):
        xi = np.asarray(xi, dtype=float)
        return np.exp(-self.beta1 * xi), np.exp(-self.beta2 * xi)

    def theta0(self, xi):
        e1, e2 = self._modes(xi)
        return self.c[0] * e1 + self.c[1] * e2 + self.c[2]

    def theta1a(self, xi):
        e1, e2 = self._modes(xi)
        return self.dc[0] * e1 + self.dc[1] * e2 + self.dc[2]

    def theta1a_xx(self, xi):
        e1, e2 = self._modes(xi)
        return self.dc[0] * self.beta1**2 * e1 + self.dc[1] * self.beta2**2 * e2

    def theta_moments(self, xi):
        d, G = self.d, self.G
        t1a = self.theta1a(xi)
        t1a_xx = self.theta1a_xx(xi)
        t2a = -d * t1a - G
        t3a = -t1a_xx - d * t2a + d * t1a - 2.0 * G
        return solve_small(_WALL_MOMENTS_O6, np.stack([t1a, t2a, t3a], axis=-1))

    def theta20_direct(self, xi):
        """T20 from the centreline balance without the matrix inversion (cross-check)."""
        d = self.d
        return (
            -self.theta1a_xx(xi) / 8.0
            + (15 + 9 * d) / 8.0 * self.theta1a(xi)
            + self.G * (5 + d) / 8.0
        )


def solve_wall_order4(spec: ProblemSpec) -> WallSolutionO4:
    _require_uniform_wall(spec)
    return WallSolutionO4(spec, beta1_wall_order4(spec.peclet, spec.d), dissipation_group(spec))


def solve_wall_order6(spec: ProblemSpec) -> WallSolutionO6:
    """Two-mode centreline solution with the inlet closure.

    The inlet fixes ``T0(0) = T_i`` and ``u0 T0' = D T0''`` at ``x = 0``.
    """
    _require_uniform_wall(spec)
    d, pe = spec.d, spec.peclet
    G = dissipation_group(spec)
    roots = solve_quartic_wall_order6(pe, d)
    b1, b2 = roots.beta1, roots.beta2
    if abs(b2 - b1) < DEGENERATE_GAP:
        raise DegenerateRoots(f"beta1={b1} and beta2={b2} coincide")
    c3 = G * (5 + d) / (12.0 * (5 + 3 * d))
    q1 = b1 * (b1 + pe)
    q2 = b2 * (b2 + pe)
    excess = c3 - _inlet_theta(spec)
    c1 = -excess * q2 / (q2 - q1)
    c2 = excess * q1 / (q2 - q1)
    k = 11.0 * (3 + d)
    d1 = 48.0 * c1 / (b1**2 - k)
    d2 = 48.0 * c2 / (b2**2 - k)
    d3 = -G * (5 + d) / (3.0 * (5 + 3 * d))
    return WallSolutionO6(spec, b1, b2, G, (c1, c2, c3), (d1, d2, d3))


def _check_point(spec, x, r):
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r > spec.a):
        raise ValueError("r must lie in [0, a]")
    return r / spec.a


def reconstruct_field(sol, x, r):
    """Temperature T(x, r) [K] rebuilt from a boundary solution; broadcasts over x, r."""
    rho = _check_point(sol.spec, x, r)
    return sol._to_kelvin(sol.theta_field(sol._xi(x), rho))


@dataclass(frozen=True)
class FieldSampler:
    """Callable ``(x, r) -> T`` bound to one solution."""

    solution: object

    @property
    def order(self) -> int:
        return self.solution.order

    def __call__(self, x, r):
        return reconstruct_field(self.solution, x, r)
