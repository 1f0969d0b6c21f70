"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter or argument is outside the admissible range."""


class PointMassMeasure(ValueError):
    """The representing measure degenerates to point masses.

    Raised by density queries for the boundary divergence orders whose
    measure is not absolutely continuous.  ``atoms`` lists (location, mass)
    pairs on [0, 1] so callers can special-case them.
    """

    def __init__(self, message, atoms):
        super().__init__(message)
        self.atoms = list(atoms)


class EigenFailure(RuntimeError):
    """The symmetric tridiagonal eigensolver did not converge."""


class DivergenceError(RuntimeError):
    """A weighted relative error grows without bound toward 0 or infinity."""


class ExtractionError(RuntimeError):
    """A rational function is not of quadrature form."""


class LPFailure(RuntimeError):
    """The linear-program subproblem could not be solved."""
