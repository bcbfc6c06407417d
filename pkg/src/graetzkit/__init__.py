"""Steady laminar convective heat transfer by reduced boundary functions.

Closed-form centreline/wall solutions for plates and tubes with axial conduction
and viscous heating, a tabulated Graetz series and a finite-difference solver of
the full PDE to check them against.
"""
__version__ = "0.1.0"

from .charpoly import (
    DecayConstants,
    Limit,
    asymptote,
    beta1_exchange,
    beta1_wall_order4,
    solve_quartic_wall_order6,
)
from .core import (
    DimensionlessGroups,
    Exchange,
    FluidProperties,
    Geometry,
    ProblemSpec,
    UniformWall,
    dimensionless,
    make_spec,
    velocity,
)
from .errors import (
    BCMismatch,
    DegenerateRoots,
    GraetzError,
    InsulatedWithDissipation,
    InvalidRegime,
    NoMoreEigenvalues,
    NonConvergence,
    RootStructureError,
)
from .exchange_rbf import ExchangeSolution, reconstruct_field_exchange, solve_exchange_order4
from .fdm_oracle import FdmConfig, FdmSolution, extract_boundary_functions, fdm_solve
from .series_ref import GRAETZ_PLATES, SeriesTable, theta_series
from .wall_rbf import (
    FieldSampler,
    WallSolutionO4,
    WallSolutionO6,
    reconstruct_field,
    solve_wall_order4,
    solve_wall_order6,
)
