import numpy as np

from bathywave.core.exceptions.transport import ZeroColumnMass
from bathywave.core.exceptions.waveform import LengthMismatch

#: transported mass below which a sample is considered unreached
MIN_MASS = 1e-15

DIRECTIONS = ("target->source", "source->target")


def barycentric_map(plan, source, target, direction: str = "target->source") -> np.ndarray:
    """Move each sample of one side to the plan-weighted mean of the other side.

    The plan rows index ``source`` and its columns index ``target``. With
    ``"target->source"`` the target sample ``j`` becomes
    ``sum_i P[i, j] * source[i] / sum_i P[i, j]``; ``"source->target"`` is the same
    formula along the other axis.

    Args:
        plan (TransportPlan or array): the coupling.
        source (array): ``(n, ...)`` samples of the rows.
        target (array): ``(m, ...)`` samples of the columns.
        direction (str, optional): Defaults to ``"target->source"``.

    Raises:
        ZeroColumnMass: if a sample to map receives less than ``1e-15`` mass.
        LengthMismatch: if the plan does not match the sample counts.

    Returns:
        np.ndarray: mapped samples, shaped like the side being mapped.
    """
    coupling = np.asarray(getattr(plan, "coupling", plan), dtype=np.float64)
    source = np.asarray(source, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    if coupling.shape != (len(source), len(target)):
        raise LengthMismatch(coupling.shape, (len(source), len(target)))
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")

    if direction == "target->source":
        weights, support = coupling.T, source
    else:
        weights, support = coupling, target

    mass = weights.sum(axis=1)
    empty = np.flatnonzero(mass < MIN_MASS)
    if empty.size:
        raise ZeroColumnMass(int(empty[0]), float(mass[empty[0]]))

    flat = support.reshape(len(support), -1)
    mapped = (weights @ flat) / mass[:, None]
    return mapped.reshape((len(mass),) + support.shape[1:])
