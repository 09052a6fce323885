from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from repstab import oracles
from repstab.charpoly import coinv_series, evaluate
from repstab.coinvariants import (
    MultiDegree,
    coinv_character_univariate,
    coinv_graded_dims,
    coinv_total_dim,
    orbit_count,
    univariate_invariant_dim,
)
from repstab.errors import InvalidParams, SizeCapExceeded
from repstab.partitions import Partition, partitions_of, unpad
from repstab.polyfit import newton_eval, newton_fit
from repstab.ranges import ranges_coinv
from repstab.symchar import decompose_class_function, irreducible_character, trivial_character


class TestMultiDegree:
    def test_forms(self):
        a = MultiDegree({"x": 2, "y": 1})
        assert a.total == 3 and a.as_tuple() == (2, 1) and a.to_json() == [2, 1]
        assert MultiDegree([2, 1]).as_tuple() == (2, 1)
        assert MultiDegree(a) == a

    def test_invalid(self):
        with pytest.raises(InvalidParams):
            MultiDegree({})
        with pytest.raises(InvalidParams):
            MultiDegree([1, -1])


class TestOrbits:
    @pytest.mark.parametrize("n,out", [(1, 1), (2, 3), (3, 4)])
    def test_two_one(self, n, out):
        assert orbit_count({"x": 2, "y": 1}, n) == out

    def test_stabilization(self):
        for total in range(1, 5):
            for J in [(total,)] + [(a, total - a) for a in range(total + 1)]:
                counts = [orbit_count(J, n) for n in range(total + 3)]
                assert all(a <= b for a, b in zip(counts, counts[1:]))
                assert len(set(counts[total:])) == 1
                assert counts[total - 1] < counts[total]

    @settings(max_examples=30)
    @given(st.lists(st.integers(0, 3), min_size=1, max_size=2), st.integers(0, 5))
    def test_matches_vector_partitions(self, J, n):
        assert orbit_count(J, n) == oracles.vector_partitions(tuple(J), n)

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            orbit_count([9], 2)
        with pytest.raises(SizeCapExceeded):
            orbit_count([1], 9)


class TestUnivariateInvariants:
    @pytest.mark.parametrize("j,n,out", [(4, 5, 5), (3, 1, 1), (4, 2, 3), (0, 0, 1), (2, 0, 0)])
    def test_examples(self, j, n, out):
        assert univariate_invariant_dim(j, n) == out

    def test_bounded_partitions(self):
        for j in range(9):
            for n in range(9):
                expected = sum(1 for p in oracles.partitions_by_filter(j) if len(p) <= n)
                assert univariate_invariant_dim(j, n) == expected
                assert univariate_invariant_dim(j, n) == orbit_count([j], n)

    def test_stable_value_is_partition_count(self):
        for j in range(9):
            assert univariate_invariant_dim(j, j) == oracles.partition_count(j)
            if j >= 2:
                assert univariate_invariant_dim(j, j - 1) < oracles.partition_count(j)


class TestGradedDims:
    def test_one_point(self):
        assert coinv_graded_dims(1, 1, 4) == {(0,): 1, (1,): 0, (2,): 0, (3,): 0, (4,): 0}

    def test_three_points(self):
        d = coinv_graded_dims(3, 1, 4)
        assert [d[(k,)] for k in range(5)] == [1, 2, 2, 1, 0]

    @pytest.mark.parametrize("n", range(0, 6))
    def test_hilbert_series(self, n):
        top = n * (n - 1) // 2
        d = coinv_graded_dims(n, 1, top + 1)
        q = oracles.q_factorial(n)
        assert [d[(k,)] for k in range(top + 1)] == q
        assert d[(top + 1,)] == 0
        assert sum(d.values()) == factorial(n)

    def test_diagonal_total(self):
        assert coinv_total_dim(3, 2) == 16 == (3 + 1) ** (3 - 1)
        assert coinv_total_dim(2, 2) == 3

    def test_key_order(self):
        assert list(coinv_graded_dims(2, 2, 1)) == [(0, 0), (1, 0), (0, 1)]

    def test_caps(self):
        with pytest.raises(SizeCapExceeded):
            coinv_graded_dims(6, 1, 2)
        with pytest.raises(SizeCapExceeded):
            coinv_graded_dims(2, 3, 2)
        with pytest.raises(SizeCapExceeded):
            coinv_graded_dims(2, 1, 13)
        assert coinv_graded_dims(2, 3, 1, override_caps=True)[(1, 0, 0)] == 1


class TestCharacter:
    def test_degree_zero(self):
        for n in range(6):
            assert coinv_character_univariate(0, n) == trivial_character(n)

    def test_degree_one(self):
        assert coinv_character_univariate(1, 3) == irreducible_character((2, 1))

    def test_identity_value_matches_linear_algebra(self):
        for n in range(1, 5):
            d = coinv_graded_dims(n, 1, n * (n - 1) // 2)
            for (j,), dim in d.items():
                assert coinv_character_univariate(j, n)((1,) * n) == dim

    def test_matches_series_in_range(self):
        C = coinv_series(4)
        for j in range(5):
            for n in range(6):
                agree = all(
                    evaluate(C[j], lam) == coinv_character_univariate(j, n)(lam)
                    for lam in partitions_of(n)
                )
                if n >= j:
                    assert agree
                elif j in (2, 3, 4) and n == j - 1:
                    assert not agree

    @pytest.mark.parametrize("j", range(1, 4))
    def test_specht_stability(self, j):
        def profile(n):
            dec = decompose_class_function(coinv_character_univariate(j, n))
            return {unpad(mu): m for mu, m in dec.items()}

        stable = profile(2 * j)
        assert stable[Partition((j,))] > 0
        for n in range(2 * j, 8):
            assert profile(n) == stable


class TestTupleConsistency:
    """Dimensions fit one polynomial of degree at most ``|J|`` past the claimed ``hmax``."""

    @pytest.mark.parametrize("j", range(1, 5))
    def test_univariate_q_factorial(self, j):
        R = ranges_coinv(j)
        dims = lambda n: (oracles.q_factorial(n) + [0] * (j + 1))[j]  # noqa: E731
        coeffs = newton_fit(dims, R.hmax + 1, j)
        assert all(newton_eval(coeffs, R.hmax + 1, n) == dims(n) for n in range(R.hmax + 1, 16))

    def test_linear_algebra_data(self):
        for total in (1, 2):
            R = ranges_coinv(total)
            for J in [(total, 0), (0, total), (1, total - 1)]:
                pts = list(range(R.hmax + 1, 5))
                dims = {n: coinv_graded_dims(n, 2, total)[J] for n in pts}
                coeffs = newton_fit(dims.__getitem__, pts[0], min(total, len(pts) - 1))
                assert all(newton_eval(coeffs, pts[0], n) == dims[n] for n in pts)
