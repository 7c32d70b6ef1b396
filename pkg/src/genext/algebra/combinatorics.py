"""
Square-free monomials as bitmasks.

A monomial x_{i_1} ... x_{i_k} with i_1 < ... < i_k is the integer whose bits
i_1 - 1, ..., i_k - 1 are set; the number of variables n is carried by the
caller. For a fixed degree, increasing integer order of the masks *is* colex
order, which is the order used for every matrix row and column.
"""

import math
from collections.abc import Iterable, Iterator
from functools import lru_cache

from ..exceptions import DegreeRangeError, SubsetIndexError

# One machine word per monomial
MAX_VARIABLES = 62

type Monomial = int
type Sign = int


def mask_from_indices(indices: Iterable[int]) -> Monomial:
    """Build a monomial from 1-based variable indices."""
    mask = 0
    for i in indices:
        if not 1 <= i <= MAX_VARIABLES:
            raise DegreeRangeError(f"variable index {i} outside 1..{MAX_VARIABLES}")
        mask |= 1 << (i - 1)
    return mask


def indices_from_mask(mask: Monomial) -> list[int]:
    """Return the sorted 1-based variable indices of a monomial."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def full_mask(n: int) -> Monomial:
    """The monomial x_1 ... x_n."""
    return (1 << n) - 1


def degree(mask: Monomial) -> int:
    return mask.bit_count()


def sigma(c: Monomial, r: Monomial) -> Sign:
    """
    Sign of the permutation sorting [C, R \\ C], or 0 when C is not inside R.

    The inversion count is sum over c in C of |{x in R \\ C : x < c}|, so a
    masked popcount per element of C suffices.
    """
    if c & ~r:
        return 0
    rest = r & ~c
    inversions = 0
    while c:
        low = c & -c
        inversions += (rest & (low - 1)).bit_count()
        c ^= low
    return -1 if inversions & 1 else 1


def wedge_sign(a: Monomial, b: Monomial) -> Sign:
    """Sign eps in x_A ∧ x_B = eps · x_{A∪B}; zero when A and B share a variable."""
    if a & b:
        return 0
    return sigma(a, a | b)


def permutation_sign(sequence: list[int]) -> Sign:
    """Sign of the permutation that sorts ``sequence`` (distinct entries), by inversion count."""
    inversions = sum(
        1
        for i in range(len(sequence))
        for j in range(i + 1, len(sequence))
        if sequence[i] > sequence[j]
    )
    return -1 if inversions % 2 else 1


def sigma_by_sorting(c: Monomial, r: Monomial) -> Sign:
    """Reference implementation of :func:`sigma` that literally sorts [C, R \\ C]."""
    if c & ~r:
        return 0
    return permutation_sign(indices_from_mask(c) + indices_from_mask(r & ~c))


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rank_subset(mask: Monomial) -> int:
    """Colex index of a k-subset: sum of C(c_i, i+1) over its 0-based sorted positions."""
    return sum(math.comb(pos - 1, i + 1) for i, pos in enumerate(indices_from_mask(mask)))


def unrank_subset(n: int, k: int, index: int) -> Monomial:
    """Inverse of :func:`rank_subset` on the k-subsets of [n]."""
    if not 0 <= index < binomial(n, k):
        raise SubsetIndexError(f"index {index} outside [0, C({n},{k})={binomial(n, k)})")
    mask = 0
    bound = n
    for i in range(k, 0, -1):
        # largest c < bound with C(c, i) <= index
        c = bound - 1
        while math.comb(c, i) > index:
            c -= 1
        mask |= 1 << c
        index -= math.comb(c, i)
        bound = c
    return mask


def iter_subsets(n: int, k: int) -> Iterator[Monomial]:
    """Yield the k-subsets of [n] in colex order (Gosper's hack)."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


@lru_cache(maxsize=256)
def subsets(n: int, k: int) -> tuple[Monomial, ...]:
    """All k-subsets of [n] in colex order."""
    return tuple(iter_subsets(n, k))


@lru_cache(maxsize=256)
def subset_index(n: int, k: int) -> dict[Monomial, int]:
    """Colex position of every k-subset of [n]."""
    return {mask: i for i, mask in enumerate(subsets(n, k))}


def submasks(mask: Monomial, k: int) -> Iterator[Monomial]:
    """Yield the k-element submasks of ``mask`` in colex order."""
    positions = [i - 1 for i in indices_from_mask(mask)]
    for local in iter_subsets(len(positions), k):
        out = 0
        for j in indices_from_mask(local):
            out |= 1 << positions[j - 1]
        yield out
