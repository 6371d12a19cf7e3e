"""Shared exception types."""


class SizeGuardError(ValueError):
    """Requested size/order exceeds the supported guard."""


class NonUnitError(ValueError):
    """Series inversion attempted on a series with zero constant term."""


class SingularMinorError(ValueError):
    """A leading principal minor of a Hankel matrix vanished."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"singular leading principal minor of order {k + 1}")


class NoConvergenceError(RuntimeError):
    """Continued fraction failed to stabilize within the step budget."""
