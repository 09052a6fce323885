import json

import pytest
from hypothesis import given, strategies as st

from repstab.errors import (
    InvalidCharacteristic,
    InvalidParams,
    NotStrictlyIncreasing,
    ParamOutOfTheoremRange,
    ZeroDegree,
)
from repstab.ranges import (
    HypTriple,
    StableRanges,
    complex_generation_bound,
    hyper_invariants,
    literature_ranges,
    max_regularity,
    ranges_coinv,
    ranges_congruence,
    ranges_from_cg,
    ranges_from_hyper,
    ranges_from_hyper_chain,
    regularity_bound,
    t_bounds,
)

GRID = range(-1, 21)


class TestStableRanges:
    def test_invariant_on_A(self):
        with pytest.raises(InvalidParams):
            StableRanges(2, 3, 2, 0, 2, 4)
        StableRanges(2, 3, 3, 0, 2, 4)

    def test_lower_bounds(self):
        with pytest.raises(InvalidParams):
            StableRanges(-2, -1, 0, -1, 0, 0)
        with pytest.raises(InvalidParams):
            StableRanges(0, -1, 0, -1, 0, -1)

    def test_json(self):
        R = StableRanges(5, 6, 5, 2, 3, 6)
        assert json.dumps(R.to_json(), separators=(",", ":")) == (
            '{"t0":5,"t1":6,"A":5,"hmax":2,"delta":3,"M":6}'
        )
        assert StableRanges.from_json(R.to_json()) == R

    def test_undetermined_M_serializes_as_null(self):
        R = literature_ranges("cg", c=2, g=3)
        assert R.to_json()["M"] is None
        assert StableRanges.from_json(R.to_json()) == R

    def test_hyp_triple_validation(self):
        with pytest.raises(InvalidParams):
            HypTriple(-2, 0)


class TestRegularity:
    @pytest.mark.parametrize("a,b,out", [(0, 0, -2), (2, 3, 4), (5, 3, 4)])
    def test_max_regularity(self, a, b, out):
        assert max_regularity(a, b) == out

    @pytest.mark.parametrize("c,g,out", [(-1, 5, -2), (3, 1, 4), (3, 4, 6), (3, -1, 3)])
    def test_regularity_bound(self, c, g, out):
        assert regularity_bound(HypTriple(c, g)) == out

    @pytest.mark.parametrize("c,g,out", [(-1, 3, (3, -1)), (2, -1, (2, 3)), (2, 3, (5, 6))])
    def test_t_bounds(self, c, g, out):
        assert t_bounds(HypTriple(c, g)) == out

    @pytest.mark.parametrize("a,b,out", [(1, 3, 5), (3, 3, 6), (0, 0, 0)])
    def test_complex_generation(self, a, b, out):
        assert complex_generation_bound(a, b) == out

    def test_presentation_bound_is_regularity_plus_one(self):
        for c in range(21):
            for g in GRID:
                t = HypTriple(c, g)
                assert t_bounds(t)[1] - 1 == regularity_bound(t)


class TestFromCG:
    @pytest.mark.parametrize("c,g,out", [
        (-1, 2, (2, -1, 3, -1, 2, 4)),
        (2, 1, (3, 4, 3, 2, 1, 3)),
        (2, 3, (5, 6, 5, 2, 3, 6)),
    ])
    def test_examples(self, c, g, out):
        assert ranges_from_cg(HypTriple(c, g)).as_tuple() == out

    def test_every_grid_point_is_valid(self):
        for c in GRID:
            for g in GRID:
                R = ranges_from_cg(HypTriple(c, g))
                assert R.A >= max(0, 2 * R.delta - 1)

    def test_degree_delta_tuple(self):
        for d in range(1, 21):
            assert ranges_from_cg(HypTriple(2 * d - 2, d)).as_tuple() == (
                2 * d, 2 * d + 1, 2 * d - 1, 2 * d - 2, d, 2 * d,
            )

    def test_dominates_literature(self):
        for c in GRID:
            for g in GRID:
                new = ranges_from_cg(HypTriple(c, g))
                old = literature_ranges("cg", c=c, g=g)
                assert all(a <= b for a, b in zip(new.as_tuple()[:5], old.as_tuple()[:5]))
                assert new.dominated_by(old)

    def test_accepts_pairs(self):
        assert ranges_from_cg((2, 3)) == ranges_from_cg(HypTriple(2, 3))


class TestHyper:
    def test_zero(self):
        h = hyper_invariants(-1, 2)
        assert h.is_zero and h.h_bound(0) == -1

    def test_generic(self):
        h = hyper_invariants(2, 1)
        assert not h.is_zero
        assert (h.delta_bound, h.t0_bound, h.h_bound(0), h.h_bound(1)) == (2, 4, 2, 0)
        assert h.reg_bound <= max(2 * h.delta_bound, 2)

    def test_reg_when_theta_zero(self):
        assert hyper_invariants(0, 0).reg_bound == -2

    @pytest.mark.parametrize("a,b,out", [
        (0, 0, (0, -1, 0, -1, 0, 0)),
        (2, 1, (4, 5, 3, 2, 2, 4)),
        (1, 3, (2, 5, 5, 4, 1, 5)),
    ])
    def test_ranges(self, a, b, out):
        assert ranges_from_hyper(a, b).as_tuple() == out

    def test_independent_of_second_degree(self):
        for t in range(1, 21):
            assert len({ranges_from_hyper(t, u) for u in range(-1, t + 1)}) == 1

    def test_no_case(self):
        with pytest.raises(ParamOutOfTheoremRange):
            ranges_from_hyper(0, -1)

    @pytest.mark.parametrize("theta,k,out", [
        ((1, 2), 0, (1, 2, 3, 2, 1, 3)),
        ((0, 2, 4), 1, (4, 5, 7, 6, 2, 7)),
        ((0, 1, 4), 1, (2, 4, 6, 5, 1, 6)),
    ])
    def test_chain(self, theta, k, out):
        assert ranges_from_hyper_chain(theta, k).as_tuple() == out

    def test_chain_errors(self):
        with pytest.raises(NotStrictlyIncreasing):
            ranges_from_hyper_chain([0, 2, 2], 0)
        with pytest.raises(InvalidParams):
            ranges_from_hyper_chain([0, 2], 1)
        with pytest.raises(InvalidParams):
            ranges_from_hyper_chain([-1, 2], 0)

    @given(st.lists(st.integers(1, 6), min_size=2, max_size=6), st.data())
    def test_chain_tuples_valid(self, steps, data):
        theta = [sum(steps[:i]) for i in range(len(steps))]
        k = data.draw(st.integers(0, len(theta) - 2))
        R = ranges_from_hyper_chain(theta, k)
        assert R.delta == theta[k]


class TestCoinvAndCongruence:
    @pytest.mark.parametrize("J,out", [(1, (2, 3, 1, 0, 1, 2)), (4, (8, 9, 7, 6, 4, 8))])
    def test_coinv(self, J, out):
        assert ranges_coinv(J).as_tuple() == out

    def test_coinv_matches_cg(self):
        assert ranges_coinv(3) == ranges_from_cg(HypTriple(4, 3))

    def test_zero_degree(self):
        with pytest.raises(ZeroDegree):
            ranges_coinv(0)

    @pytest.mark.parametrize("s,k,out", [
        (1, 0, (0, -1, 0, -1, 0, 0)),
        (1, 1, (2, 4, 6, 5, 2, 6)),
        (2, 2, (9, 10, 13, 12, 4, 13)),
        (1, 3, (12, 13, 15, 14, 6, 15)),
    ])
    def test_congruence(self, s, k, out):
        assert ranges_congruence(s, k).as_tuple() == out

    def test_congruence_params(self):
        with pytest.raises(InvalidParams):
            ranges_congruence(0, 1)


class TestLiterature:
    def test_cg(self):
        R = literature_ranges("cg", c=2, g=3)
        assert R.as_tuple() == (6, 9, 17, 2, 3, None)

    def test_cg_with_characteristic(self):
        assert literature_ranges("cg", c=2, g=3, characteristic=0).M == 18
        assert literature_ranges("cg", c=2, g=3, characteristic=5).M is None
        assert literature_ranges("cg", c=2, g=3, characteristic=19).M == 18

    def test_congruence_rows(self):
        assert literature_ranges("congruence", s=1, k=1).as_tuple()[:5] == (2, 4, 7, 5, 2)
        assert literature_ranges("congruence", s=1, k=1).M is None

    def test_congruence_M_table(self):
        # M_k = 8k + 4s + 9 for k >= 3
        assert literature_ranges("congruence", s=1, k=3, characteristic=0).M == 37

    def test_new_congruence_ranges_improve(self):
        for s in range(1, 8):
            for k in range(1, 8):
                new = ranges_congruence(s, k)
                old = literature_ranges("congruence", s=s, k=k, characteristic=0)
                assert new.dominated_by(old)

    def test_errors(self):
        with pytest.raises(InvalidParams):
            literature_ranges("other", c=0, g=0)
        with pytest.raises(InvalidParams):
            literature_ranges("congruence", s=1, k=0)
        with pytest.raises(InvalidCharacteristic):
            literature_ranges("cg", c=0, g=0, characteristic=4)
