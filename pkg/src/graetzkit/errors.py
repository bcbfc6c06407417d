"""Exception hierarchy shared by all solvers."""


class GraetzError(Exception):
    """Base class for every error raised by graetzkit."""


class BCMismatch(GraetzError, ValueError):
    """A solver was handed a problem with the wrong wall boundary type."""


class NumericalError(GraetzError):
    """Numerical failure: unexpected root structure, no convergence, ..."""


class RootStructureError(NumericalError):
    """The characteristic quartic does not have exactly two negative real roots."""


class DegenerateRoots(NumericalError):
    """The two decay constants coincide and the two-mode closure breaks down."""


class NonConvergence(NumericalError):
    """An iterative solve stopped at the iteration cap.

    The residual history is attached so callers can see how far it got.
    """

    def __init__(self, message, history=()):
        super().__init__(message)
        self.history = list(history)


class InvalidRegime(GraetzError):
    """The requested configuration has no steady state."""


class InsulatedWithDissipation(InvalidRegime):
    """Insulated wall (h = 0) with viscous heating: temperature grows without bound."""


class NoMoreEigenvalues(GraetzError, ValueError):
    """More series terms were requested than tabulated eigenvalues exist."""
