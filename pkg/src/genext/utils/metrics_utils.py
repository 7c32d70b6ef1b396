"""
Metrics utilities for rank computations and table cells.
"""

import logging
import threading
import time
from collections import defaultdict
from collections.abc import Callable
from functools import wraps
from typing import Any, ParamSpec, TypeVar

from ..config import METRICS_ENABLED

logger = logging.getLogger(__name__)

P = ParamSpec("P")
R = TypeVar("R")

# Thread lock: protects _stats when fan-out workers update concurrently
_lock = threading.Lock()


def _empty_stats() -> dict[str, Any]:
    return {
        "total_calls": 0,
        "error_count": 0,
        "total_latency_ms": 0.0,
        "min_latency_ms": float("inf"),
        "max_latency_ms": 0.0,
    }


_stats: dict[str, dict[str, Any]] = defaultdict(_empty_stats)


def track_metrics(name: str) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """
    Decorator to track call counts and latency of an operation.

    Args:
        name: Metric name
    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        if not METRICS_ENABLED:
            return func

        @wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            start_time = time.perf_counter()
            failed = False
            try:
                return func(*args, **kwargs)
            except Exception:
                failed = True
                raise
            finally:
                latency_ms = (time.perf_counter() - start_time) * 1000
                with _lock:
                    stats = _stats[name]
                    stats["total_calls"] += 1
                    if failed:
                        stats["error_count"] += 1
                    stats["total_latency_ms"] += latency_ms
                    stats["min_latency_ms"] = min(stats["min_latency_ms"], latency_ms)
                    stats["max_latency_ms"] = max(stats["max_latency_ms"], latency_ms)
                logger.debug("📊 %s: %.2fms", name, latency_ms)

        return wrapper

    return decorator


def get_metrics(name: str | None = None) -> dict[str, dict[str, Any]]:
    """
    Get metrics for one operation or all of them.

    Args:
        name: Specific metric name, or None for all

    Returns:
        Dict keyed by metric name
    """
    with _lock:
        names = [name] if name else sorted(_stats)
        result = {}
        for key in names:
            if key not in _stats:
                continue
            stats = dict(_stats[key])
            calls = stats["total_calls"]
            stats["avg_latency_ms"] = stats["total_latency_ms"] / calls if calls else 0.0
            result[key] = stats
        return result


def log_metrics_summary() -> None:
    """Log one line per tracked operation (stderr only)."""
    for key, stats in get_metrics().items():
        logger.info(
            "📊 %s: %s calls, avg %.1fms, max %.1fms",
            key,
            stats["total_calls"],
            stats["avg_latency_ms"],
            stats["max_latency_ms"],
        )


def reset_metrics() -> None:
    """Reset all metrics."""
    with _lock:
        _stats.clear()
    logger.debug("📊 Metrics reset")
