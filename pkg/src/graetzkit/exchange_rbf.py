"""Steady fourth-order solution for a thin wall exchanging heat with surroundings.

The wall temperature obeys a one-dimensional advection-diffusion-reaction
balance whose advection speed is ``alpha * ubar``; the interior is rebuilt from
the wall temperature and its axial derivatives.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charpoly import beta1_exchange
from .core import Exchange, ProblemSpec, dimensionless, dissipation_group, solve_small
from .errors import BCMismatch, InsulatedWithDissipation
from .wall_rbf import _WALL_MOMENTS_O4, _inlet_theta, _WallSolution


@dataclass(frozen=True)
class ExchangeSolution(_WallSolution):
    beta1: float
    G: float
    alpha: float
    lam: float
    v_adv: float

    order = 4

    @property
    def _far(self):
        if self.alpha == 1.0:
            # insulated wall; only reachable with G == 0
            return 0.0
        return self.G * self.alpha / ((1.0 - self.alpha) * (3 + self.d) ** 2)

    @property
    def _amp(self):
        return _inlet_theta(self.spec) - self._far

    @property
    def T_far(self) -> float:
        """Far-field wall temperature [K]."""
        return self._to_kelvin(self._far)

    @property
    def amp(self) -> float:
        return self.spec.T_i - self.T_far

    def theta_a(self, xi):
        return self._amp * np.exp(-self.beta1 * np.asarray(xi, dtype=float)) + self._far

    def theta_a_x(self, xi):
        return -self.beta1 * self._amp * np.exp(-self.beta1 * np.asarray(xi, dtype=float))

    def theta_a_xx(self, xi):
        return self.beta1**2 * self._amp * np.exp(-self.beta1 * np.asarray(xi, dtype=float))

    def theta1a(self, xi):
        # Newton cooling; the reference temperature is T_inf so theta_inf = 0
        return -self.lam * self.theta_a(xi)

    def theta2a(self, xi):
        n = 3 + self.d
        return (
            self.theta1a(xi)
            + self.lam * self.theta_a_xx(xi) / n
            - 2.0 * self.pe * self.theta_a_x(xi) / n
            - 2.0 * self.G / n
        )

    def theta3a(self, xi):
        """Third radial derivative at the wall from the wall balance (diagnostic)."""
        n = 3 + self.d
        return -(
            6.0 * self.G
            - 3.0 * self.lam * self.theta_a_xx(xi)
            + 6.0 * self.pe * self.theta_a_x(xi)
        ) / n

    def theta_moments(self, xi):
        rhs = np.stack([self.theta1a(xi), self.theta2a(xi)], axis=-1)
        return solve_small(_WALL_MOMENTS_O4, rhs)

    def theta0(self, xi):
        m = self.theta_moments(xi)
        return self.theta_a(xi) - m[..., 0] / 2.0 - m[..., 1] / 24.0

    def wall(self, x):
        """Wall temperature Ta(x) [K]."""
        return self._to_kelvin(self.theta_a(self._xi(x)))

    def wall_flux_residual(self, x):
        """``k T1a - h (T_inf - Ta)`` [W/m^2]; zero by construction."""
        bc = self.spec.bc
        return self.spec.fluid.k * self.wall_gradient(x) - bc.h * (bc.T_inf - self.wall(x))


def solve_exchange_order4(spec: ProblemSpec) -> ExchangeSolution:
    """Wall-temperature solution for a heat-exchange wall.

    Raises
    ------
    InsulatedWithDissipation
        For ``h == 0`` with viscous heating, which has no steady state.
    """
    if not isinstance(spec.bc, Exchange):
        raise BCMismatch("heat-exchange solution requested for a uniform-temperature wall")
    groups = dimensionless(spec)
    G = dissipation_group(spec)
    if groups.lam == 0.0 and G != 0.0:
        raise InsulatedWithDissipation("insulated wall with viscous heating has no steady state")
    beta = beta1_exchange(groups.pe, groups.alpha, spec.d)
    return ExchangeSolution(
        spec,
        beta,
        G,
        groups.alpha,
        groups.lam,
        groups.alpha * groups.ubar,
    )


def reconstruct_field_exchange(sol: ExchangeSolution, x, r):
    """Temperature T(x, r) [K] for a heat-exchange wall."""
    from .wall_rbf import reconstruct_field

    return reconstruct_field(sol, x, r)
