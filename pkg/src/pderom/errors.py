"""Exception types shared across the package."""


class PdeRomError(Exception):
    """Base class for all package-specific errors."""


class SolverDivergenceError(PdeRomError):
    """A full-order or reduced-order integration produced a non-finite or
    unbounded state. The message names the step index or time reached."""


class SolverConfigurationError(PdeRomError):
    """A solver invariant failed in a way that points at a setup problem
    (e.g. the Poisson residual exceeds tolerance)."""


class InsufficientDataError(PdeRomError):
    """Too few snapshots for the requested operation."""


class DatasetFormatError(PdeRomError):
    """A dataset or bundle directory is missing, inconsistent, or corrupt."""


class RankDeficiencyError(PdeRomError):
    """Requested more POD modes than the numerical rank of the snapshots."""


class UndefinedEnergyError(PdeRomError):
    """Energy fraction is undefined (all singular values are zero)."""


class SingularFitError(PdeRomError):
    """The regularized least-squares system is numerically singular.
    Increasing the regularization coefficient usually resolves this."""


class UndefinedMetricError(PdeRomError):
    """Relative error against a zero-norm reference window."""
