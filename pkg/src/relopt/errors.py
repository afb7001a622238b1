"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates an operation's precondition."""


class NumericalError(RuntimeError):
    """A numerical routine (SVD iteration, ...) failed to converge."""


class TruncationBudgetError(RuntimeError):
    """Series truncation hit the term budget before reaching tolerance.

    Carries the envelope bound that was actually achieved so callers can
    decide whether the partial sum is still usable.
    """

    def __init__(self, message, achieved_bound):
        super().__init__(message)
        self.achieved_bound = float(achieved_bound)


class DegenerateCurveError(RuntimeError):
    """The L-curve has no detectable corner (collinear in log-log space).

    Callers should fall back to an a-priori parameter rule.
    """
