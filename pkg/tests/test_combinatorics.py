"""
Unit tests for subset encoding, signs and colex ranking.
"""

import pytest

from src.genext.algebra.combinatorics import (
    binomial,
    degree,
    indices_from_mask,
    mask_from_indices,
    rank_subset,
    sigma,
    sigma_by_sorting,
    submasks,
    subset_index,
    subsets,
    unrank_subset,
    wedge_sign,
)
from src.genext.exceptions import DegreeRangeError, SubsetIndexError


def m(*indices: int) -> int:
    return mask_from_indices(indices)


class TestMasks:
    """Test suite for monomial bitmasks."""

    def test_round_trip_indices(self):
        """Test 1-based indices map to bits and back."""
        assert m(1, 2, 4) == 0b1011
        assert indices_from_mask(0b1011) == [1, 2, 4]
        assert degree(0b1011) == 3

    def test_index_out_of_range(self):
        """Test variable index 0 is rejected."""
        with pytest.raises(DegreeRangeError):
            mask_from_indices([0])


class TestSigns:
    """Test suite for sigma and wedge signs."""

    def test_sigma_identity(self):
        """Test sorted concatenations give +1."""
        assert sigma(m(1, 2), m(1, 2, 3)) == 1
        assert sigma(m(2, 3), m(2, 3)) == 1

    def test_sigma_one_transposition(self):
        """Test [1,3,2] needs one transposition."""
        assert sigma(m(1, 3), m(1, 2, 3)) == -1

    def test_sigma_not_contained(self):
        """Test sigma vanishes when C is not inside R."""
        assert sigma(m(2), m(1, 3)) == 0

    def test_sigma_matches_sorting(self):
        """Test the popcount formula against literal sorting for n <= 5."""
        for r in range(1 << 5):
            for k in range(degree(r) + 1):
                for c in submasks(r, k):
                    assert sigma(c, r) == sigma_by_sorting(c, r)

    def test_wedge_sign(self):
        """Test x_A ∧ x_B signs."""
        assert wedge_sign(m(1), m(2)) == 1
        assert wedge_sign(m(2), m(1)) == -1
        assert wedge_sign(m(1), m(1)) == 0


class TestBinomialAndColex:
    """Test suite for binomials and colex ranking."""

    def test_binomial(self):
        """Test binomials inside and outside the range."""
        assert binomial(4, 2) == 6
        assert binomial(4, 6) == 0
        assert binomial(16, 8) == 12870
        assert binomial(3, -1) == 0

    def test_colex_order(self):
        """Test Gosper enumeration is colex order."""
        assert [indices_from_mask(s) for s in subsets(4, 2)] == [
            [1, 2],
            [1, 3],
            [2, 3],
            [1, 4],
            [2, 4],
            [3, 4],
        ]

    def test_rank_and_unrank(self):
        """Test the combinatorial number system on 2-subsets of [4]."""
        assert rank_subset(m(1, 2)) == 0
        assert rank_subset(m(3, 4)) == 5
        assert unrank_subset(4, 2, 1) == m(1, 3)

    def test_rank_agrees_with_enumeration(self):
        """Test rank_subset reproduces the enumeration index."""
        index = subset_index(7, 3)
        for mask, position in index.items():
            assert rank_subset(mask) == position
            assert unrank_subset(7, 3, position) == mask

    def test_unrank_out_of_range(self):
        """Test indices beyond C(n, k) raise."""
        with pytest.raises(SubsetIndexError):
            unrank_subset(4, 2, 6)

    def test_degenerate_sizes(self):
        """Test k = 0 and k > n."""
        assert subsets(3, 0) == (0,)
        assert subsets(3, 4) == ()

    def test_submasks(self):
        """Test k-submasks come out in colex order."""
        assert list(submasks(m(1, 2, 4), 2)) == [m(1, 2), m(1, 4), m(2, 4)]


class TestProperties:
    """Test suite for exhaustive combinatorial invariants."""

    @pytest.mark.parametrize("n", range(13))
    def test_rank_unrank_round_trip(self, n):
        """Test rank and unrank are inverse bijections for every k, n <= 12."""
        for k in range(n + 1):
            seen = set()
            for index in range(binomial(n, k)):
                mask = unrank_subset(n, k, index)
                assert degree(mask) == k
                assert mask < 1 << n
                assert rank_subset(mask) == index
                seen.add(mask)
            assert len(seen) == binomial(n, k)

    def test_wedge_associativity(self):
        """Test wedge signs compose associatively on disjoint triples inside [6]."""
        n = 6
        for labels in range(4**n):
            parts = [0, 0, 0]
            for i in range(n):
                part = (labels >> (2 * i)) & 3
                if part < 3:
                    parts[part] |= 1 << i
            a, b, c = parts
            assert wedge_sign(a, b) * wedge_sign(a | b, c) == wedge_sign(b, c) * wedge_sign(
                a, b | c
            )
