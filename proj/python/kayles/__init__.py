"""Node-Kayles on unions of paths: outcomes, values and engine moves."""

from ._kayles import (
    KaylesError,
    apply_move,
    audit,
    canonicalize,
    engine_move,
    enumerate_positions,
    fminus_sequence,
    fminus_stats,
    fplus,
    losing_paths,
    oracle_outcome,
    outcome,
    rho,
    variants,
)

__all__ = [
    "KaylesError",
    "apply_move",
    "audit",
    "canonicalize",
    "engine_move",
    "enumerate_positions",
    "fminus_sequence",
    "fminus_stats",
    "fplus",
    "losing_paths",
    "oracle_outcome",
    "outcome",
    "rho",
    "variants",
]
