import math

import pytest
from hypothesis import given, strategies as st

from stratvote.bitspace import Strategy, flip, hamming_distance, neighborhood, neighborhood_size


def s(text):
    return Strategy.from_string(text)


class TestStrategy:
    def test_string_roundtrip(self):
        assert str(s("0101")) == "0101"
        assert s("100").index == 4
        assert s("100").bits() == (1, 0, 0)

    def test_from_bits(self):
        assert Strategy.from_bits([1, 0, 1]) == s("101")

    @given(st.integers(1, 12), st.data())
    def test_index_bits_bijection(self, n, data):
        index = data.draw(st.integers(0, 2**n - 1))
        strat = Strategy(n, index)
        assert Strategy.from_bits(strat.bits()) == strat
        assert Strategy.from_string(str(strat)) == strat

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            Strategy(3, 8)
        with pytest.raises(ValueError):
            Strategy(0, 0)
        with pytest.raises(ValueError):
            Strategy.from_string("01x")
        with pytest.raises(ValueError):
            Strategy.from_bits([0, 2])

    def test_immutable_and_hashable(self):
        strat = s("01")
        with pytest.raises(AttributeError):
            strat.index = 3
        assert len({s("01"), s("01"), s("10")}) == 2


class TestHammingDistance:
    def test_identity(self):
        assert hamming_distance(s("0110"), s("0110")) == 0

    def test_full_complement(self):
        assert hamming_distance(s("0000"), s("1111")) == 4

    def test_bit_count(self):
        assert hamming_distance(s("000"), s("011")) == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            hamming_distance(s("00"), s("000"))

    @given(st.integers(1, 10), st.data())
    def test_metric_properties(self, n, data):
        a = Strategy(n, data.draw(st.integers(0, 2**n - 1)))
        b = Strategy(n, data.draw(st.integers(0, 2**n - 1)))
        c = Strategy(n, data.draw(st.integers(0, 2**n - 1)))
        assert hamming_distance(a, b) == hamming_distance(b, a)
        assert (hamming_distance(a, b) == 0) == (a == b)
        assert hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c)
        assert 0 <= hamming_distance(a, b) <= n


class TestNeighborhood:
    def test_binomial_sum_n10_c2(self):
        assert neighborhood_size(10, 2) == 55
        assert len(neighborhood(Strategy(10, 137), 2)) == 55

    def test_full_cube_minus_center(self):
        members = neighborhood(s("000"), 3)
        assert {str(m) for m in members} == {f"{i:03b}" for i in range(1, 8)}

    def test_single_flips(self):
        assert {str(m) for m in neighborhood(s("00"), 1)} == {"01", "10"}

    def test_invalid_radius(self):
        with pytest.raises(ValueError):
            neighborhood(s("000"), 0)
        with pytest.raises(ValueError):
            neighborhood(s("000"), 4)

    def test_canonical_order(self):
        members = neighborhood(Strategy(6, 41), 3)
        assert [m.index for m in members] == sorted(m.index for m in members)

    @pytest.mark.parametrize("n", [4, 5])
    def test_invariants_all_centers(self, n):
        for radius in range(1, n + 1):
            expected = sum(math.comb(n, k) for k in range(1, radius + 1))
            for idx in range(2**n):
                center = Strategy(n, idx)
                members = neighborhood(center, radius)
                assert len(members) == len(set(members)) == expected
                assert center not in members
                assert all(1 <= hamming_distance(m, center) <= radius for m in members)

    def test_cardinality_n10(self):
        center = Strategy(10, 999)
        for radius in (1, 2, 5, 10):
            expected = sum(math.comb(10, k) for k in range(1, radius + 1))
            assert len(neighborhood(center, radius)) == expected


class TestFlip:
    def test_single_position(self):
        assert flip(s("000"), {0}) == s("100")

    def test_empty(self):
        assert flip(s("101"), set()) == s("101")

    def test_all_positions(self):
        assert flip(s("11"), {0, 1}) == s("00")

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            flip(s("000"), {3})

    @given(st.integers(1, 10), st.data())
    def test_distance_equals_flip_count(self, n, data):
        center = Strategy(n, data.draw(st.integers(0, 2**n - 1)))
        positions = data.draw(st.sets(st.integers(0, n - 1)))
        assert hamming_distance(flip(center, positions), center) == len(positions)
