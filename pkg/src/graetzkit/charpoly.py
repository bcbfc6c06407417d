"""Axial decay constants from the characteristic equations.

The fourth-order solutions decay with a single rate obtained from a quadratic.
The sixth-order wall solution needs the two negative roots of a quartic, which
is solved with companion-matrix eigenvalues and then polished with Newton steps
on the unscaled polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .core import polyval
from .errors import RootStructureError

_IMAG_TOL = 1e-8
_RESCALE_ABOVE = 100.0


@dataclass(frozen=True)
class DecayConstants:
    beta1: float
    beta2: Optional[float] = None

    def __post_init__(self):
        if not self.beta1 > 0:
            raise ValueError("beta1 must be > 0")
        if self.beta2 is not None and not self.beta2 > self.beta1:
            raise ValueError("beta2 must exceed beta1")


def _positive_root(b, c):
    """Positive root of ``beta**2 + b*beta - c = 0`` for b, c >= 0.

    Written as 2c / (b + sqrt(b^2 + 4c)) so nothing cancels when b >> sqrt(c).
    """
    if c == 0.0:
        return 0.0
    return 2.0 * c / (b + math.sqrt(b * b + 4.0 * c))


def _check_d(d):
    if d not in (0, 1):
        raise ValueError(f"d must be 0 or 1, got {d!r}")


def _check_pe(pe):
    if not (pe >= 0 and math.isfinite(pe)):
        raise ValueError(f"pe must be finite and >= 0, got {pe!r}")


def wall_order4_constant(d):
    return 4.0 * (d + 1) * (d + 3) / (d + 5)


def beta1_wall_order4(pe: float, d: int) -> float:
    """Decay constant of the fourth-order uniform-wall solution.

    Positive root of ``beta^2 + pe*beta - 4(d+1)(d+3)/(d+5) = 0``; equals
    ``2*sqrt((d+1)(d+3)/(d+5))`` at ``pe = 0`` and ~``4(d+1)(d+3)/((d+5) pe)``
    for large ``pe``.
    """
    _check_d(d)
    _check_pe(pe)
    return _positive_root(pe, wall_order4_constant(d))


def quartic_coefficients(pe: float, d: int) -> np.ndarray:
    """Coefficients (highest degree first) of the sixth-order characteristic quartic."""
    return np.array(
        [
            1.0,
            -pe,
            -(39.0 + 17.0 * d),
            11.0 * (3 + d) * pe,
            18.0 * (d + 1) * (5 + 3 * d),
        ]
    )


def _newton_polish(coeffs, root, steps=6):
    dcoeffs = np.polyder(coeffs)
    best, best_res = root, abs(polyval(coeffs, root))
    x = root
    for _ in range(steps):
        slope = polyval(dcoeffs, x)
        if slope == 0.0:
            break
        x = x - polyval(coeffs, x) / slope
        res = abs(polyval(coeffs, x))
        if res < best_res:
            best, best_res = x, res
        elif res >= best_res:
            break
    return float(best)


def solve_quartic_wall_order6(pe: float, d: int) -> DecayConstants:
    """Both decay constants of the sixth-order uniform-wall solution.

    Returns ``beta1 < beta2``, the negated negative real roots of the quartic.

    Raises
    ------
    RootStructureError
        If the quartic does not have exactly two negative real roots.
    """
    _check_d(d)
    _check_pe(pe)
    coeffs = quartic_coefficients(pe, d)
    if pe > _RESCALE_ABOVE:
        # r = pe*s keeps the companion matrix entries O(1).
        scaled = coeffs * np.array([1.0, 1.0 / pe, 1.0 / pe**2, 1.0 / pe**3, 1.0 / pe**4])
        roots = np.roots(scaled) * pe
    else:
        roots = np.roots(coeffs)
    real = [z.real for z in roots if abs(z.imag) <= _IMAG_TOL * abs(z)]
    negative = sorted(_newton_polish(coeffs, x) for x in real if x < 0)
    if len(negative) != 2:
        raise RootStructureError(
            f"expected 2 negative real roots at pe={pe}, d={d}; roots={roots}"
        )
    # sorted ascending: the more negative root is beta2
    return DecayConstants(beta1=-negative[1], beta2=-negative[0])


def exchange_constant(alpha, d):
    return (1.0 - alpha) * (d + 1) * (d + 3)


def beta1_exchange(pe: float, alpha: float, d: int) -> float:
    """Decay constant of the wall temperature for a heat-exchange wall.

    Positive root of ``beta^2 + (2 alpha pe/(3+d)) beta - (1-alpha)(d+1)(d+3) = 0``.
    Zero for an insulated wall (``alpha == 1``).
    """
    _check_d(d)
    _check_pe(pe)
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must lie in (0, 1], got {alpha!r}")
    return _positive_root(2.0 * alpha * pe / (3 + d), exchange_constant(alpha, d))


class Limit(str, Enum):
    """Closed-form limits of the decay constants (for cross-checks only)."""

    WALL_ORDER4_ADVECTION = "wall-order4-advection"
    WALL_ORDER6_SLOW_ADVECTION = "wall-order6-slow-advection"
    WALL_ORDER6_FAST_ADVECTION = "wall-order6-fast-advection"
    EXCHANGE_ADVECTION = "exchange-advection"
    EXCHANGE_CONDUCTION = "exchange-conduction"


def asymptote(kind, pe: float = math.inf, alpha: float = 1.0, d: int = 0) -> float:
    """Limit value of a decay constant.

    ``WALL_ORDER6_SLOW_ADVECTION`` is the dominant balance of the quartic for
    small roots, ``18(d+1)(5+3d) / (11(3+d) pe)``. The version commonly quoted
    without the ``11(3+d)`` factor does not match the quartic.
    """
    kind = Limit(kind)
    _check_d(d)
    if kind is Limit.WALL_ORDER4_ADVECTION:
        return wall_order4_constant(d) / pe
    if kind is Limit.WALL_ORDER6_SLOW_ADVECTION:
        return 18.0 * (d + 1) * (5 + 3 * d) / (11.0 * (3 + d) * pe)
    if kind is Limit.WALL_ORDER6_FAST_ADVECTION:
        return math.sqrt(11.0 * (d + 3))
    if kind is Limit.EXCHANGE_ADVECTION:
        return (1.0 - alpha) * (d + 1) * (d + 3) ** 2 / (2.0 * alpha * pe)
    return math.sqrt(exchange_constant(alpha, d))
