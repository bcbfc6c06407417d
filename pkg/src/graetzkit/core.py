"""Problem definition, dimensionless groups and the Poiseuille velocity profile.

Every solver in the package works on the dimensionless temperature

    theta = (T - T_ref) / (T_i - T_ref)

and the axial coordinate ``xi = x / a``. ``T_ref`` is the wall temperature for a
uniform-temperature wall and the surrounding temperature for a heat-exchange
wall. When ``T_i == T_ref`` the normalisation would be 0/0, so the scale falls
back to 1 K and theta is simply the temperature excess in kelvin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import IntEnum
from typing import Optional, Sequence, Union

import numpy as np


class Geometry(IntEnum):
    """Channel shape flag ``d``: parallel plates (0) or circular tube (1)."""

    PLATES = 0
    TUBE = 1


def _finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class FluidProperties:
    """Constant fluid properties in SI units."""

    k: float
    rho: float
    cp: float
    mu: float = 0.0

    def __post_init__(self):
        for name in ("k", "rho", "cp", "mu"):
            _finite(name, getattr(self, name))
        for name in ("k", "rho", "cp"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")
        # mu = 0 is allowed: it is the "no viscous heating" switch.
        if self.mu < 0:
            raise ValueError("mu must be >= 0")

    @property
    def diffusivity(self) -> float:
        return self.k / (self.rho * self.cp)


@dataclass(frozen=True)
class UniformWall:
    T_w: float

    def __post_init__(self):
        _finite("T_w", self.T_w)

    @property
    def T_ref(self) -> float:
        return self.T_w


@dataclass(frozen=True)
class Exchange:
    """Thin wall exchanging heat with surroundings at ``T_inf`` (Newton cooling)."""

    h: float
    T_inf: float

    def __post_init__(self):
        _finite("h", self.h)
        _finite("T_inf", self.T_inf)
        if self.h < 0:
            raise ValueError("h must be >= 0")

    @property
    def T_ref(self) -> float:
        return self.T_inf


WallBC = Union[UniformWall, Exchange]


@dataclass(frozen=True)
class ProblemSpec:
    geometry: Geometry
    a: float
    u0: float
    fluid: FluidProperties
    T_i: float
    bc: WallBC

    def __post_init__(self):
        object.__setattr__(self, "geometry", Geometry(int(self.geometry)))
        for name in ("a", "u0", "T_i"):
            _finite(name, getattr(self, name))
        if self.a <= 0:
            raise ValueError("a must be > 0")
        if self.u0 < 0:
            raise ValueError("u0 must be >= 0")
        if not isinstance(self.bc, (UniformWall, Exchange)):
            raise TypeError("bc must be UniformWall or Exchange")

    @property
    def d(self) -> int:
        return int(self.geometry)

    @property
    def D(self) -> float:
        return self.fluid.diffusivity

    @property
    def peclet(self) -> float:
        return self.u0 * self.a / self.D

    @property
    def T_ref(self) -> float:
        return self.bc.T_ref

    @property
    def temperature_scale(self) -> float:
        """``T_i - T_ref``, or 1 K when the two coincide."""
        delta = self.T_i - self.T_ref
        return delta if delta != 0.0 else 1.0

    def with_peclet(self, pe: float) -> "ProblemSpec":
        """Copy of this problem with ``u0`` set so that ``u0 a / D == pe``."""
        return replace(self, u0=pe * self.D / self.a)


@dataclass(frozen=True)
class DimensionlessGroups:
    pe: float
    A: float
    ubar: float
    lam: Optional[float] = None
    alpha: Optional[float] = None


def dimensionless(spec: ProblemSpec) -> DimensionlessGroups:
    """Peclet number, viscous heating rate, mean velocity and wall-exchange groups."""
    d = spec.d
    fl = spec.fluid
    pe = spec.peclet
    A = 4.0 * fl.mu * spec.u0**2 / (fl.rho * fl.cp * spec.a**2)
    ubar = 2.0 * spec.u0 / (3 + d)
    lam = alpha = None
    if isinstance(spec.bc, Exchange):
        lam = spec.a * spec.bc.h / fl.k
        alpha = 1.0 / (1.0 + lam / (3 + d))
    return DimensionlessGroups(pe=pe, A=A, ubar=ubar, lam=lam, alpha=alpha)


def dissipation_temperature(spec: ProblemSpec) -> float:
    """Temperature scale of viscous heating, ``A a^2 / D`` [K]."""
    return dimensionless(spec).A * spec.a**2 / spec.D


def dissipation_group(spec: ProblemSpec) -> float:
    """``A a^2 / D`` in units of the problem's temperature scale."""
    return dissipation_temperature(spec) / spec.temperature_scale


def velocity(spec: ProblemSpec, r):
    """Poiseuille axial velocity ``u0 (1 - r^2/a^2)``."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0) or np.any(r_arr > spec.a):
        raise ValueError("r must lie in [0, a]")
    v = spec.u0 * (1.0 - (r_arr / spec.a) ** 2)
    return float(v) if v.ndim == 0 else v


def polyval(coeffs: Sequence[float], x):
    """Horner evaluation, highest degree first (same order as ``numpy.roots``)."""
    acc = 0.0 * np.asarray(x, dtype=float)
    for c in coeffs:
        acc = acc * x + c
    return acc


def solve_small(matrix, rhs):
    """Dense solve for the 2x2 / 3x3 moment systems; ``rhs`` may be batched (..., n)."""
    m = np.asarray(matrix, dtype=float)
    b = np.asarray(rhs, dtype=float)
    return np.linalg.solve(m, b[..., None])[..., 0] if b.ndim > 1 else np.linalg.solve(m, b)


def make_spec(
    d: int = 0,
    pe: Optional[float] = None,
    *,
    a: float = 1.0,
    u0: float = 1.0,
    k: float = 1.0,
    rho: float = 1.0,
    cp: float = 1.0,
    mu: float = 0.0,
    T_i: float = 1.0,
    T_w: Optional[float] = 0.0,
    h: Optional[float] = None,
    T_inf: float = 0.0,
) -> ProblemSpec:
    """Convenience constructor; ``h`` given selects the heat-exchange wall.

    With ``pe`` given, ``u0`` is overridden so that ``u0 a / D == pe``.
    """
    bc: WallBC = Exchange(h=h, T_inf=T_inf) if h is not None else UniformWall(T_w=T_w)
    spec = ProblemSpec(Geometry(d), a, u0, FluidProperties(k, rho, cp, mu), T_i, bc)
    return spec.with_peclet(pe) if pe is not None else spec
