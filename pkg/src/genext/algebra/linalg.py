"""
Exact rank over a prime field.

Entries are stored as int64 residues; with p < 2^31 every product of two
residues fits a machine word, so a row update is a single vectorised
multiply-subtract followed by one reduction.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from sympy import isprime

from ..exceptions import DegreeRangeError

logger = logging.getLogger(__name__)

# Largest modulus whose products stay inside int64
MAX_PRIME = 2**31 - 1


@dataclass(frozen=True)
class PrimeField:
    """The field F_p."""

    p: int

    def __post_init__(self) -> None:
        if self.p <= 2 or self.p > MAX_PRIME or not isprime(self.p):
            raise ValueError(f"modulus must be an odd prime below 2^31, got {self.p}")

    def reduce(self, value: int) -> int:
        return value % self.p

    def inverse(self, value: int) -> int:
        return pow(value % self.p, -1, self.p)


class FieldMatrix:
    """A dense rows x cols matrix over F_p."""

    def __init__(self, field: PrimeField, data: np.ndarray):
        if data.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {data.shape}")
        self.field = field
        self.data = np.mod(data.astype(np.int64, copy=False), field.p)

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]]) -> "FieldMatrix":
        """Build from a list of integer rows (negative values are reduced)."""
        if not rows:
            return cls.zeros(field, 0, 0)
        return cls(field, np.array(rows, dtype=np.int64))

    @classmethod
    def from_triplets(
        cls,
        field: PrimeField,
        rows: int,
        cols: int,
        triplets: Iterable[tuple[int, int, int]],
    ) -> "FieldMatrix":
        """Build from (row, col, value) triplets; repeated positions accumulate."""
        entries = list(triplets)
        data = np.zeros((rows, cols), dtype=np.int64)
        if entries:
            idx = np.array(entries, dtype=np.int64)
            if idx[:, 0].min() < 0 or idx[:, 0].max() >= rows:
                raise DegreeRangeError("triplet row index out of range")
            if idx[:, 1].min() < 0 or idx[:, 1].max() >= cols:
                raise DegreeRangeError("triplet column index out of range")
            np.add.at(data, (idx[:, 0], idx[:, 1]), np.mod(idx[:, 2], field.p))
        return cls(field, data)

    @classmethod
    def hstack(cls, field: PrimeField, blocks: Sequence["FieldMatrix"]) -> "FieldMatrix":
        """Concatenate blocks sharing a row count side by side."""
        if not blocks:
            raise ValueError("hstack needs at least one block")
        return cls(field, np.hstack([b.data for b in blocks]))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.data.T.copy())

    def to_list(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def rank(self, consume: bool = False) -> int:
        """
        Rank by Gaussian elimination mod p.

        The elimination runs over the shorter dimension. With ``consume=True``
        the matrix storage is overwritten.
        """
        if self.rows == 0 or self.cols == 0:
            return 0
        work = self.data if consume else self.data.copy()
        if work.shape[1] > work.shape[0]:
            work = np.ascontiguousarray(work.T)
        return _eliminate(work, self.field.p)

    def kernel_dim(self) -> int:
        """Dimension of the null space of the map F_p^cols -> F_p^rows."""
        return self.cols - self.rank()

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols} over F_{self.field.p})"


def _eliminate(a: np.ndarray, p: int) -> int:
    """Row-reduce ``a`` in place (rows >= cols) and return its rank."""
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot], c:] = a[[pivot, r], c:]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = (a[r, c:] * inv) % p
        # only rows with a nonzero entry in the pivot column need updating
        below = r + 1 + np.flatnonzero(a[r + 1 :, c])
        if below.size:
            factors = a[below, c][:, None]
            a[below, c:] = (a[below, c:] - factors * a[r, c:]) % p
        r += 1
    return r


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Convenience wrapper: rank of an integer matrix reduced mod p."""
    return FieldMatrix.from_rows(PrimeField(p), rows).rank(consume=True)
