"""Exceptions related with optimal transport and domain adaptation.
"""
from bathywave.core.exceptions import BathywaveError, BathywaveWarning


class UnbalancedMarginals(BathywaveError):
    """Raised when transport marginals are negative or carry different total masses."""

    def __init__(self, sum_a, sum_b):
        super().__init__(sum_a, sum_b)
        self.sum_a = sum_a
        self.sum_b = sum_b

    def __str__(self):
        return (
            f"marginals must be nonnegative with equal mass, got sum(a)={self.sum_a!r} "
            f"and sum(b)={self.sum_b!r}"
        )


class DegenerateTransport(BathywaveError):
    """Raised when a transport problem has an empty side or zero mass."""

    def __init__(self, msg: str):
        super().__init__(msg)
        self.msg = msg

    def __str__(self):
        return self.msg


class NumericalUnderflow(BathywaveError):
    """Raised when the standard-domain Sinkhorn kernel underflows and no fallback is allowed."""

    def __init__(self, epsilon):
        super().__init__(epsilon)
        self.epsilon = epsilon

    def __str__(self):
        return (
            f"Sinkhorn scaling underflowed with epsilon={self.epsilon:.3e}, "
            "use the log-domain solver"
        )


class ZeroColumnMass(BathywaveError):
    """Raised when a barycentric mapping meets a sample which receives no mass."""

    def __init__(self, index, mass):
        super().__init__(index, mass)
        self.index = index
        self.mass = mass

    def __str__(self):
        return f"sample {self.index} receives a transported mass of {self.mass:.3e}"


class SinkhornNotConverged(BathywaveWarning):
    """Issued when Sinkhorn stops at max_iter with a marginal violation above tol."""
