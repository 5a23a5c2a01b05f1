import logging
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
import ot
from scipy.spatial.distance import cdist

from bathywave.core.exceptions import ConfigError
from bathywave.core.exceptions.transport import (
    DegenerateTransport,
    NumericalUnderflow,
    SinkhornNotConverged,
    UnbalancedMarginals,
)
from bathywave.core.exceptions.waveform import LengthMismatch

logger = logging.getLogger(__name__)

#: largest ``C / epsilon`` whose kernel entry stays a normal float64
_EXP_LIMIT = 700.0

SINKHORN_METHODS = ("auto", "standard", "log")


@dataclass(frozen=True)
class SinkhornConfig:
    """Entropic transport settings.

    Args:
        epsilon (float, optional): regularization. Defaults to ``epsilon_scale * median(C)``.
        epsilon_scale (float, optional): Defaults to ``0.01``.
        tol (float, optional): target max marginal violation. Defaults to ``1e-9``.
        max_iter (int, optional): Defaults to ``10000``.
        method (str, optional): ``"standard"`` scaling, ``"log"`` domain, or ``"auto"`` which
            runs the standard kernel and falls back to the log domain on underflow.
    """

    epsilon: Optional[float] = None
    epsilon_scale: float = 0.01
    tol: float = 1e-9
    max_iter: int = 10_000
    method: str = "auto"

    def validate(self):
        if self.epsilon is not None and not self.epsilon > 0:
            raise ConfigError("adapt.sinkhorn.epsilon", "must be > 0")
        if not self.epsilon_scale > 0:
            raise ConfigError("adapt.sinkhorn.epsilon_scale", "must be > 0")
        if not self.tol > 0:
            raise ConfigError("adapt.sinkhorn.tol", "must be > 0")
        if self.max_iter < 1:
            raise ConfigError("adapt.sinkhorn.max_iter", "must be >= 1")
        if self.method not in SINKHORN_METHODS:
            raise ConfigError("adapt.sinkhorn.method", f"must be one of {SINKHORN_METHODS}")

    def resolve_epsilon(self, cost: np.ndarray) -> float:
        if self.epsilon is not None:
            return float(self.epsilon)
        scale = float(np.median(cost))
        if scale <= 0:
            scale = float(cost.max()) if cost.max() > 0 else 1.0
        return self.epsilon_scale * scale


@dataclass
class TransportPlan:
    """A coupling between ``a`` (rows) and ``b`` (columns).

    ``violation`` is the max absolute deviation of the row and column sums from the
    marginals; ``converged`` is false only for a Sinkhorn run which hit ``max_iter``.
    """

    coupling: np.ndarray
    a: np.ndarray
    b: np.ndarray
    cost: float
    n_iter: int
    violation: float
    converged: bool = True
    method: str = "emd"
    epsilon: Optional[float] = None

    @property
    def shape(self):
        return self.coupling.shape


def marginal_violation(coupling, a, b) -> float:
    return float(
        max(np.abs(coupling.sum(axis=1) - a).max(), np.abs(coupling.sum(axis=0) - b).max())
    )


def uniform_marginal(n: int) -> np.ndarray:
    return np.full(n, 1.0 / n)


def cost_matrix(xs, xt) -> np.ndarray:
    """Squared Euclidean distances between the flattened samples of ``xs`` (rows) and ``xt`` (columns)."""
    xs = np.asarray(xs, dtype=np.float64)
    xt = np.asarray(xt, dtype=np.float64)
    xs = xs.reshape(len(xs), -1)
    xt = xt.reshape(len(xt), -1)
    if xs.shape[1] != xt.shape[1]:
        raise LengthMismatch(xs.shape[1], xt.shape[1])
    return cdist(xs, xt, metric="sqeuclidean")


def _check_problem(a, b, C):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    C = np.ascontiguousarray(C, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1 or a.size == 0 or b.size == 0:
        raise DegenerateTransport(f"marginals must be non-empty vectors, got shapes {a.shape} and {b.shape}")
    if C.shape != (a.size, b.size):
        raise DegenerateTransport(f"cost matrix of shape {C.shape} does not match marginals ({a.size}, {b.size})")
    if not np.all(np.isfinite(C)):
        raise DegenerateTransport("cost matrix has non-finite entries")
    if np.any(a < 0) or np.any(b < 0):
        raise UnbalancedMarginals(a.sum(), b.sum())
    if a.sum() <= 0 or b.sum() <= 0:
        raise DegenerateTransport("marginals have zero mass")
    if abs(a.sum() - b.sum()) > 1e-12 * max(1.0, a.sum()):
        raise UnbalancedMarginals(a.sum(), b.sum())
    return a, b, C


def emd_transport(a, b, C, max_iter: int = 1_000_000) -> TransportPlan:
    """Exact optimal transport by the network simplex.

    The solver is deterministic: among optimal plans of a degenerate problem (ties in
    ``C``) it always returns the same vertex of the transportation polytope for the same
    inputs.

    Raises:
        UnbalancedMarginals: if a marginal is negative or the total masses differ.
        DegenerateTransport: if an input is empty, zero-mass or malformed.
    """
    a, b, C = _check_problem(a, b, C)
    coupling, log = ot.emd(a, b, C, numItermax=max_iter, log=True)
    if log.get("warning"):
        logger.warning(f"Network simplex: {log['warning']}")
    return TransportPlan(
        coupling=coupling,
        a=a,
        b=b,
        cost=float(np.sum(coupling * C)),
        n_iter=0,
        violation=marginal_violation(coupling, a, b),
        converged=log.get("result_code", 1) == 1,
        method="emd",
    )


def _run_sinkhorn(a, b, C, epsilon, cfg, method):
    pot_method = "sinkhorn" if method == "standard" else "sinkhorn_log"
    scaled = C / epsilon
    if method == "standard" and max(scaled.min(axis=1).max(), scaled.min(axis=0).max()) > _EXP_LIMIT:
        raise NumericalUnderflow(epsilon)
    coupling, log = ot.sinkhorn(
        a, b, C, epsilon, method=pot_method, numItermax=cfg.max_iter, stopThr=cfg.tol, log=True, warn=False
    )
    n_iter = int(log.get("niter", cfg.max_iter))
    errors = log.get("err", [])
    # POT leaves the loop early on numerical errors, before the marginal error reaches tol
    numerical = n_iter < cfg.max_iter - 1 and not (len(errors) and float(errors[-1]) < cfg.tol)
    if method == "standard" and (
        numerical
        or not np.all(np.isfinite(coupling))
        or np.any(coupling.sum(axis=1) <= 0)
        or np.any(coupling.sum(axis=0) <= 0)
    ):
        raise NumericalUnderflow(epsilon)
    return coupling, n_iter


def sinkhorn_transport(a, b, C, cfg: SinkhornConfig = None) -> TransportPlan:
    """Entropic optimal transport ``diag(u) exp(-C / epsilon) diag(v)``.

    Scaling iterations stop when the marginal error drops below ``cfg.tol`` or after
    ``cfg.max_iter`` iterations. A run which does not reach ``tol`` still returns its plan,
    flagged ``converged=False``, and issues a :class:`SinkhornNotConverged` warning.

    Raises:
        UnbalancedMarginals: if a marginal is negative or the total masses differ.
        DegenerateTransport: if an input is empty, zero-mass or malformed.
        NumericalUnderflow: with ``method="standard"`` when the kernel underflows.
    """
    cfg = SinkhornConfig() if cfg is None else cfg
    cfg.validate()
    a, b, C = _check_problem(a, b, C)
    epsilon = cfg.resolve_epsilon(C)

    method = "log" if cfg.method == "log" else "standard"
    try:
        coupling, n_iter = _run_sinkhorn(a, b, C, epsilon, cfg, method)
    except NumericalUnderflow:
        if cfg.method == "standard":
            raise
        logger.info(f"Sinkhorn kernel underflows at epsilon={epsilon}, switching to the log domain")
        method = "log"
        coupling, n_iter = _run_sinkhorn(a, b, C, epsilon, cfg, method)

    violation = marginal_violation(coupling, a, b)
    converged = violation < cfg.tol
    if not converged:
        message = (
            f"Sinkhorn stopped after {n_iter} iterations with marginal violation "
            f"{violation:.3g} >= tol {cfg.tol:.3g}"
        )
        logger.warning(message)
        warnings.warn(message, SinkhornNotConverged)

    return TransportPlan(
        coupling=coupling,
        a=a,
        b=b,
        cost=float(np.sum(coupling * C)),
        n_iter=n_iter,
        violation=violation,
        converged=converged,
        method=f"sinkhorn-{method}",
        epsilon=epsilon,
    )
