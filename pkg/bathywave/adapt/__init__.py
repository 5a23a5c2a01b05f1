"""Optimal-transport domain adaptation of waveforms from a shifted domain onto the
simulated training domain, and fine-tuning on a small labeled target share.
"""
from bathywave.adapt._mapping import DIRECTIONS, barycentric_map
from bathywave.adapt._pipeline import (
    AdaptConfig,
    AdaptResult,
    adapt_and_predict,
    adapt_inputs,
    fine_tune,
    select_fine_tune_subset,
    transport_plan,
)
from bathywave.adapt._transport import (
    SinkhornConfig,
    TransportPlan,
    cost_matrix,
    emd_transport,
    marginal_violation,
    sinkhorn_transport,
    uniform_marginal,
)

__all__ = [
    "adapt_and_predict",
    "adapt_inputs",
    "AdaptConfig",
    "AdaptResult",
    "barycentric_map",
    "cost_matrix",
    "DIRECTIONS",
    "emd_transport",
    "fine_tune",
    "marginal_violation",
    "select_fine_tune_subset",
    "sinkhorn_transport",
    "SinkhornConfig",
    "transport_plan",
    "TransportPlan",
    "uniform_marginal",
]
