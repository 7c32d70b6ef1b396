"""Exact building blocks: subset encoding, integer series and prime-field rank."""

from .combinatorics import Monomial, Sign, binomial, sigma, subset_index, subsets
from .linalg import FieldMatrix, PrimeField, rank_mod_p
from .series import IntSeries, coeffwise_min

__all__ = [
    "FieldMatrix",
    "IntSeries",
    "Monomial",
    "PrimeField",
    "Sign",
    "binomial",
    "coeffwise_min",
    "rank_mod_p",
    "sigma",
    "subset_index",
    "subsets",
]
