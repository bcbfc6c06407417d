"""Classical Graetz eigenseries for parallel plates without axial conduction.

Only the first eight eigenpairs are available; they are tabulated, not computed.
The series is valid for ``d = 0`` and ``pe -> inf``; other configurations may
still be evaluated for comparison plots, and :func:`applicability` says so.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import NoMoreEigenvalues


@dataclass(frozen=True)
class SeriesTable:
    eigenvalues: Tuple[float, ...]
    coefficients: Tuple[float, ...]

    def __post_init__(self):
        if len(self.eigenvalues) != len(self.coefficients):
            raise ValueError("eigenvalue and coefficient counts differ")

    def __len__(self):
        return len(self.eigenvalues)


# Shah & London (1978): centreline expansion for plates, velocity scaled with u0.
GRAETZ_PLATES = SeriesTable(
    eigenvalues=(1.6816, 5.6699, 9.6683, 13.6677, 17.6674, 21.6672, 25.6671, 29.6670),
    coefficients=(1.2005, -0.2991, 0.1608, -0.1074, 0.0796, -0.0628, 0.0512, -0.0483),
)


def theta_series(xi1, n_terms: int = 8, table: SeriesTable = GRAETZ_PLATES):
    """Dimensionless centreline temperature ``(T0 - T_w) / (T_i - T_w)``.

    Parameters
    ----------
    xi1 : float or array
        Graetz coordinate ``x / (a pe)``, must be >= 0.
    n_terms : int
        Number of series terms, 1..8.
    """
    if n_terms > len(table):
        raise NoMoreEigenvalues(f"only {len(table)} tabulated terms, asked for {n_terms}")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    xi1 = np.asarray(xi1, dtype=float)
    if np.any(xi1 < 0):
        raise ValueError("xi1 must be >= 0")
    lam = np.asarray(table.eigenvalues[:n_terms])
    coef = np.asarray(table.coefficients[:n_terms])
    out = np.exp(-np.multiply.outer(xi1, lam**2)) @ coef
    return float(out) if out.ndim == 0 else out


def applicability(d: int, pe: float) -> str:
    """'valid' for plates at infinite Peclet number, otherwise a warning string."""
    if d == 0 and pe == np.inf:
        return "valid"
    return f"series assumes d=0 and pe=inf; used for comparison at d={d}, pe={pe:g}"
