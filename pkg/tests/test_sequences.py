import pytest

from fareylattice.fracs import HALF, Frac, UnimodularMap
from fareylattice.sequences import (
    BOOLEAN,
    FAREY,
    LEFT_HALF,
    MAX_ORDER,
    FareySeq,
    SeqDescriptor,
    farey,
    farey_boolean,
    iter_farey,
    left_half,
    materialize,
    right_half,
    upper_subsequence,
)
from oracles import brute_boolean, brute_farey, brute_upper


def as_pairs(seq):
    return [(f.h, f.k) for f in seq]


class TestFarey:
    def test_golden_order_6(self, golden_farey_6):
        assert [str(f) for f in farey(6)] == golden_farey_6

    def test_order_1(self):
        assert as_pairs(farey(1)) == [(0, 1), (1, 1)]

    def test_order_7_count(self):
        assert len(farey(7)) == 19

    @pytest.mark.parametrize("n", range(1, 13))
    def test_matches_brute_force(self, n):
        assert as_pairs(farey(n)) == brute_farey(n)

    @pytest.mark.parametrize("n", [2, 5, 9, 16])
    def test_consecutive_terms_are_unimodular(self, n):
        terms = farey(n).terms
        for a, c in zip(terms, terms[1:]):
            assert c.h * a.k - a.h * c.k == 1

    def test_rejects_zero_order(self):
        with pytest.raises(ValueError):
            farey(0)

    def test_materialization_guard(self):
        with pytest.raises(ValueError, match="guard"):
            farey(MAX_ORDER + 1)

    def test_iterator_streams_same_terms(self):
        assert list(iter_farey(9)) == list(farey(9))


class TestUpper:
    def test_small_numerators_only(self):
        assert [str(f) for f in upper_subsequence(6, 1)] == \
            ["0/1", "1/6", "1/5", "1/4", "1/3", "1/2", "1/1"]

    def test_order_3(self):
        assert [str(f) for f in upper_subsequence(3, 2)] == \
            ["0/1", "1/3", "1/2", "2/3", "1/1"]

    def test_nothing_removed_when_m_is_max_numerator(self):
        assert upper_subsequence(6, 5).terms == farey(6).terms

    @pytest.mark.parametrize("n,m", [(n, m) for n in range(2, 11) for m in range(1, n)])
    def test_matches_brute_force(self, n, m):
        assert as_pairs(upper_subsequence(n, m)) == brute_upper(n, m)


class TestBoolean:
    def test_golden_12_6(self, golden_boolean_12_6):
        assert [str(f) for f in farey_boolean(12, 6)] == golden_boolean_12_6

    def test_smallest(self):
        assert as_pairs(farey_boolean(2, 1)) == [(0, 1), (1, 2), (1, 1)]

    def test_3_1(self):
        assert [str(f) for f in farey_boolean(3, 1)] == ["0/1", "1/3", "1/2", "1/1"]

    @pytest.mark.parametrize("n,m", [(n, m) for n in range(2, 11) for m in range(1, n)])
    def test_matches_brute_force(self, n, m):
        assert as_pairs(farey_boolean(n, m)) == brute_boolean(n, m)

    @pytest.mark.parametrize("n,m", [(n, m) for n in range(2, 17) for m in range(1, n)])
    def test_complement_reverses_into_dual(self, n, m):
        comp = UnimodularMap(-1, 1, 0, 1)
        images = [comp.apply(f) for f in farey_boolean(n, m)]
        assert images[::-1] == list(farey_boolean(n, n - m))

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            farey_boolean(6, 0)
        with pytest.raises(ValueError):
            farey_boolean(6, 6)


class TestHalves:
    def test_left_of_12_6(self, golden_boolean_12_6):
        left = left_half(farey_boolean(12, 6))
        assert [str(f) for f in left] == golden_boolean_12_6[:13]
        assert str(left[-1]) == "1/2"

    def test_right_of_12_6(self, golden_boolean_12_6):
        right = right_half(farey_boolean(12, 6))
        assert [str(f) for f in right] == golden_boolean_12_6[12:]

    def test_left_of_4_2(self):
        assert as_pairs(left_half(farey_boolean(4, 2))) == [(0, 1), (1, 3), (1, 2)]

    @pytest.mark.parametrize("m", range(1, 25))
    def test_halves_share_midpoint(self, m):
        s = farey_boolean(2 * m, m)
        le, ri = left_half(s), right_half(s)
        assert le[-1] == HALF == ri[0]
        assert len(le) + len(ri) == len(s) + 1

    def test_requires_symmetric_descriptor(self):
        with pytest.raises(ValueError, match="n = 2m"):
            left_half(farey_boolean(12, 5))
        with pytest.raises(ValueError, match="n = 2m"):
            right_half(farey(6))


class TestIndexing:
    def test_displayed_positions(self):
        s = farey_boolean(12, 6)
        assert s.index_of(Frac(1, 3)) == 6
        assert s.index_of(Frac(1, 2)) == 12

    def test_absent(self):
        assert farey(6).index_of(Frac(5, 7)) is None

    def test_contains(self):
        assert Frac(3, 8) in farey_boolean(12, 6)
        assert Frac(3, 8) not in farey(6)


class TestDescriptors:
    def test_farey_takes_no_m(self):
        with pytest.raises(ValueError):
            SeqDescriptor(FAREY, 6, 2)

    def test_range_check(self):
        with pytest.raises(ValueError):
            SeqDescriptor(BOOLEAN, 6, 6)

    def test_half_requires_symmetric(self):
        with pytest.raises(ValueError):
            SeqDescriptor(LEFT_HALF, 12, 5)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            SeqDescriptor("middle", 6, 2)

    @pytest.mark.parametrize("build", [
        lambda: farey(9),
        lambda: upper_subsequence(9, 4),
        lambda: farey_boolean(9, 4),
        lambda: left_half(farey_boolean(8, 4)),
        lambda: right_half(farey_boolean(8, 4)),
    ])
    def test_materialize_round_trips(self, build):
        seq = build()
        assert materialize(seq.descriptor) == seq

    def test_symmetric_flag(self):
        assert SeqDescriptor(BOOLEAN, 8, 4).is_symmetric_boolean
        assert not SeqDescriptor(BOOLEAN, 9, 4).is_symmetric_boolean


class TestFareySeqInvariants:
    def test_rejects_unsorted(self):
        d = SeqDescriptor(FAREY, 2)
        with pytest.raises(ValueError, match="ascending"):
            FareySeq(d, (Frac(1, 2), Frac(1, 3)))

    def test_rejects_duplicates(self):
        d = SeqDescriptor(FAREY, 2)
        with pytest.raises(ValueError, match="ascending"):
            FareySeq(d, (Frac(1, 2), Frac(1, 2)))

    def test_immutable(self):
        s = farey(3)
        with pytest.raises(AttributeError):
            s.terms = ()
