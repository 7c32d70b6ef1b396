"""
Utility functions for the genext engine.
"""

from .cache_utils import (
    clear_cache,
    get_cache_key,
    get_cache_stats,
    get_cached_profile,
    set_cached_profile,
)
from .fanout import ParallelSweep
from .metrics_utils import get_metrics, log_metrics_summary, reset_metrics, track_metrics
from .seed_utils import derive_seed, trial_seeds

__all__ = [
    # Caching
    "clear_cache",
    "get_cache_key",
    "get_cache_stats",
    "get_cached_profile",
    "set_cached_profile",
    # Fan-out
    "ParallelSweep",
    # Metrics
    "get_metrics",
    "log_metrics_summary",
    "reset_metrics",
    "track_metrics",
    # Seeds
    "derive_seed",
    "trial_seeds",
]
