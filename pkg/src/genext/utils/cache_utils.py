"""
Caching utilities for rank profiles with LRU eviction.
"""

import hashlib
import logging
import threading
from collections import OrderedDict
from typing import Any

from ..config import CACHE_ENABLED, CACHE_MAX_SIZE

logger = logging.getLogger(__name__)

# Thread lock: fan-out workers read and write concurrently
_lock = threading.Lock()

# In-memory cache with LRU (OrderedDict maintains insertion order)
_cache: OrderedDict[str, tuple[int, ...]] = OrderedDict()
_hits = 0
_misses = 0


def get_cache_key(*parts: Any) -> str:
    """
    Generate a cache key for a computation.

    Args:
        *parts: Values identifying the computation (n, d, algebra, seed, prime)

    Returns:
        SHA256 hash (first 16 chars)
    """
    payload = "|".join(str(part) for part in parts)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def get_cached_profile(cache_key: str) -> tuple[int, ...] | None:
    """
    Get a cached rank profile if available.

    Args:
        cache_key: Cache key

    Returns:
        Cached profile or None
    """
    global _hits, _misses
    if not CACHE_ENABLED:
        return None
    with _lock:
        if cache_key not in _cache:
            _misses += 1
            return None
        # Move to end (mark as recently used in LRU)
        _cache.move_to_end(cache_key)
        _hits += 1
        logger.debug("💾 Cache hit for key: %s", cache_key)
        return _cache[cache_key]


def set_cached_profile(cache_key: str, profile: tuple[int, ...]) -> None:
    """
    Store a rank profile with LRU eviction.

    Args:
        cache_key: Cache key
        profile: Ranks of the multiplication maps, one per source degree
    """
    if not CACHE_ENABLED:
        return
    with _lock:
        if cache_key not in _cache and len(_cache) >= CACHE_MAX_SIZE:
            oldest_key = next(iter(_cache))
            del _cache[oldest_key]
            logger.debug("🗑️ LRU eviction: removed %s (cache at max size)", oldest_key)
        _cache[cache_key] = tuple(profile)
        _cache.move_to_end(cache_key)
    logger.debug("💾 Cached profile for key: %s", cache_key)


def clear_cache() -> None:
    """Clear all cached profiles."""
    global _hits, _misses
    with _lock:
        _cache.clear()
        _hits = 0
        _misses = 0
    logger.debug("🗑️ Cache cleared")


def get_cache_stats() -> dict[str, Any]:
    """
    Get cache statistics.

    Returns:
        Dict with cache stats
    """
    with _lock:
        lookups = _hits + _misses
        return {
            "enabled": CACHE_ENABLED,
            "total_entries": len(_cache),
            "max_size": CACHE_MAX_SIZE,
            "hits": _hits,
            "misses": _misses,
            "hit_rate": round(_hits / lookups, 3) if lookups else 0.0,
        }
