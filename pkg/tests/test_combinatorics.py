from math import factorial

import pytest
from hypothesis import given, strategies as st

from borelrange.combinatorics import (
    Bipartition,
    ParseError,
    Partition,
    ZeroRepresentation,
    bipartitions,
    det_twist,
    gln_dim,
    highest_weight,
    parse_bipartition,
    partitions,
    specht_dim,
)
from oracles import count_gt_patterns, count_syt

partition_st = st.lists(st.integers(1, 4), max_size=3).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))
bipartition_st = st.builds(Bipartition, partition_st, partition_st)


class TestParse:
    def test_basic(self):
        bp = parse_bipartition("3,1|2")
        assert bp.lam == Partition((3, 1))
        assert bp.lam_prime == Partition((2,))

    def test_zero(self):
        bp = parse_bipartition("0|0")
        assert bp.is_zero() and bp.size == 0 and bp.length == 0

    def test_four_four(self):
        bp = parse_bipartition("4|4")
        assert (bp.size, bp.degree, bp.length) == (8, 0, 2)

    @pytest.mark.parametrize("text", ["", "3,1", "1|2|3", "a|0", "1,,2|0", "1,2|0", "-1|0", "2,0|1", " | "])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_bipartition(text)

    @given(bipartition_st)
    def test_roundtrip(self, bp):
        assert parse_bipartition(str(bp)) == bp


def test_partition_normalizes_trailing_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition((0,)).length == 0
    with pytest.raises(ValueError):
        Partition((1, 2))


@given(bipartition_st)
def test_dual_is_involution(bp):
    assert bp.dual().dual() == bp
    assert bp.dual().degree == -bp.degree


class TestHighestWeight:
    def test_mixed(self):
        assert highest_weight(Bipartition.of((2, 1), (1,)), 4).entries == (2, 1, 0, -1)

    def test_zero(self):
        assert highest_weight(Bipartition.of(), 3).entries == (0, 0, 0)

    def test_no_padding(self):
        assert highest_weight(Bipartition.of((1,), (1,)), 2).entries == (1, -1)

    def test_zero_representation(self):
        with pytest.raises(ZeroRepresentation):
            highest_weight(Bipartition.of((1, 1, 1)), 2)

    @given(bipartition_st, st.integers(0, 3))
    def test_sum_is_degree_and_decreasing(self, bp, extra):
        w = highest_weight(bp, max(1, bp.length) + extra).entries
        assert sum(w) == bp.degree
        assert all(a >= b for a, b in zip(w, w[1:]))

    @given(bipartition_st, st.integers(0, 3))
    def test_dual_reverses_and_negates(self, bp, extra):
        n = max(1, bp.length) + extra
        assert highest_weight(bp.dual(), n).entries == tuple(-x for x in reversed(highest_weight(bp, n).entries))


class TestSpecht:
    @pytest.mark.parametrize("shape,expected", [((2, 1), 2), ((), 1), ((3,), 1), ((3, 2, 1), 16)])
    def test_values(self, shape, expected):
        assert specht_dim(Partition(shape)) == expected

    @pytest.mark.parametrize("m", range(0, 8))
    def test_matches_tableau_enumeration(self, m):
        for lam in partitions(m):
            assert specht_dim(lam) == count_syt(lam.parts)

    @pytest.mark.parametrize("m", range(0, 7))
    def test_sum_of_squares(self, m):
        assert sum(specht_dim(lam) ** 2 for lam in partitions(m)) == factorial(m)


class TestGlnDim:
    def test_adjoint(self):
        assert gln_dim((1, 0, 0, -1)) == 15

    def test_trivial(self):
        assert gln_dim((0, 0, 0, 0, 0)) == 1

    def test_sl2_adjoint(self):
        assert gln_dim((1, -1)) == 3

    @pytest.mark.parametrize(
        "bp,n", [(bp, n) for bp in bipartitions(3) for n in range(max(1, bp.length), 5)], ids=str
    )
    def test_matches_gelfand_tsetlin(self, bp, n):
        w = highest_weight(bp, n).entries
        assert gln_dim(w) == count_gt_patterns(w)


class TestDetTwist:
    def test_sl2(self):
        t = det_twist(Bipartition.of((1,), (1,)), 2)
        assert t.mu == Partition((2,)) and t.k == -1

    def test_trivial(self):
        t = det_twist(Bipartition.of(), 3)
        assert t.mu == Partition() and t.k == 0

    def test_polynomial(self):
        t = det_twist(Bipartition.of((2,)), 3)
        assert t.mu == Partition((2,)) and t.k == 0

    @given(bipartition_st, st.integers(0, 2))
    def test_reconstructs_weight(self, bp, extra):
        n = max(1, bp.length) + extra
        t = det_twist(bp, n)
        mu = t.mu.parts + (0,) * (n - t.mu.length)
        assert mu[-1] == 0
        assert tuple(m + t.k for m in mu) == highest_weight(bp, n).entries
        # twisting by a power of det does not change the dimension
        assert gln_dim(mu) == gln_dim(highest_weight(bp, n))


def test_bipartition_counts():
    # sum_{a+b<=S} p(a) p(b)
    assert [sum(1 for _ in bipartitions(s)) for s in range(5)] == [1, 3, 8, 18, 38]
