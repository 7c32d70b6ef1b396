"""
Deterministic seed derivation.

Every random draw in the engine is keyed by a path of labels below the master
seed, so independent calls get independent streams and a report never depends
on the order in which cells are scheduled.
"""

import hashlib

SEED_BITS = 64


def derive_seed(master: int, *path: int | str) -> int:
    """
    Derive a 64-bit child seed from ``master`` and a label path.

    Args:
        master: Master seed
        *path: Labels and indices identifying the consumer

    Returns:
        Non-negative integer below 2**64
    """
    payload = ":".join([str(master), *(str(part) for part in path)])
    digest = hashlib.sha256(payload.encode()).digest()
    return int.from_bytes(digest[: SEED_BITS // 8], "big")


def trial_seeds(master: int, n: int, degrees: tuple[int, ...], trials: int) -> list[int]:
    """Seeds of the random specialisations of one table cell."""
    return [derive_seed(master, "cell", n, *degrees, "trial", j) for j in range(trials)]
