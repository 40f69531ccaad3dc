"""Embedding module.

Violation probabilities, correlation matrices and λ-scaling sweeps under global, local and
shuffled drives.
"""

from .metrics import correlation_matrix, non_independence_projector, quench_maxima, violation_probability
from .sweep import (
    EmbeddingProtocol,
    EmbeddingReport,
    ProtocolKind,
    ShuffledSummary,
    lambda_sweep,
    local_protocol_for_instance,
    shuffled_mean_violation,
)

__all__ = [
    "EmbeddingProtocol",
    "EmbeddingReport",
    "ProtocolKind",
    "ShuffledSummary",
    "correlation_matrix",
    "lambda_sweep",
    "local_protocol_for_instance",
    "non_independence_projector",
    "quench_maxima",
    "shuffled_mean_violation",
    "violation_probability",
]
