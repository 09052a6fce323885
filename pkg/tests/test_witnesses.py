from fractions import Fraction
from math import comb

import pytest

from repstab.errors import InvalidParams, ParamOutOfTheoremRange
from repstab.partitions import pad, specht_dim
from repstab.ranges import HypTriple, ranges_from_cg
from repstab.symchar import decompose_class_function, irreducible_character, zero_character
from repstab.witnesses import (
    KINDS,
    WitnessFamily,
    is_acyclic,
    s_plus_i,
    sharpness_check,
    witness_character,
    witness_dim,
    witness_profile,
)


def fam(kind, p):
    return WitnessFamily(kind, p)


class TestDimensions:
    def test_examples(self):
        assert witness_dim(fam("V", 2), 4) == 2
        assert witness_dim(fam("I", 3), 5) == 10
        assert witness_dim(fam("T", 2), 2) == 1
        assert witness_dim(fam("T", 2), 3) == 0
        assert [witness_dim(fam("S", 1), n) for n in range(4)] == [0, 0, 1, 1]

    def test_v_vanishes_for_small_params(self):
        for g in (-1, 0):
            assert all(witness_dim(fam("V", g), n) == 0 for n in range(10))

    @pytest.mark.parametrize("g", range(1, 11))
    def test_v_formula_integral_and_specht(self, g):
        for n in range(41):
            value = Fraction(n - (2 * g - 1), g) * comb(n, g - 1)
            if n > 2 * g - 2:
                assert value.denominator == 1
                assert witness_dim(fam("V", g), n) == value
            else:
                assert witness_dim(fam("V", g), n) == 0
            if n >= 2 * g:
                assert witness_dim(fam("V", g), n) == specht_dim(pad((g,), n))

    def test_direct_sum_adds(self):
        w = s_plus_i(3, 1)
        assert all(witness_dim(w, n) == witness_dim(fam("S", 3), n) + n for n in range(10))

    def test_invalid(self):
        with pytest.raises(InvalidParams):
            fam("Q", 1)
        with pytest.raises(InvalidParams):
            fam("I", -2)


class TestCharacters:
    def test_examples(self):
        assert witness_character(fam("V", 2), 4) == irreducible_character((2, 2))
        chi = witness_character(fam("I", 1), 3)
        assert [chi(l) for l in [(1, 1, 1), (2, 1), (3,)]] == [3, 1, 0]
        assert witness_character(fam("S", 2), 1) == zero_character(1)

    @pytest.mark.parametrize("kind", KINDS)
    def test_dimension_at_identity(self, kind):
        for a in range(-1, 5):
            w = fam(kind, a)
            for n in range(8):
                assert witness_dim(w, n) == witness_character(w, n)((1,) * n)

    def test_v_is_irreducible_from_2g(self):
        for g in range(1, 4):
            for n in range(2 * g, 8):
                assert decompose_class_function(witness_character(fam("V", g), n)) == {
                    pad((g,), n): 1
                }


class TestProfiles:
    def test_v2(self):
        p = witness_profile(fam("V", 2))
        assert p.t_values(4) == [4, 5, 6, 7, 8]
        assert p.regularity == 4
        assert p.hyp_triple == HypTriple(2, 2)
        assert p.stable_ranges.as_tuple() == (4, 5, 3, 2, 2, 4)
        assert all(p.sharp.values())

    def test_t3(self):
        p = witness_profile(fam("T", 3))
        assert p.t_values(3) == [3, 4, 5, 6]
        assert p.regularity == 3
        assert p.stable_ranges.as_tuple() == (3, 4, 4, 3, -1, 4)

    def test_s_regularity(self):
        assert witness_profile(fam("S", 2)).regularity == 3

    def test_i0(self):
        p = witness_profile(fam("I", 0))
        assert p.t_values(3) == [0, -1, -1, -1]
        assert p.regularity == -2

    def _families(self, upto=10):
        out = [fam("I", g) for g in range(-1, upto + 1)]
        out += [fam(k, c) for k in ("T", "S") for c in range(upto + 1)]
        out += [fam("V", g) for g in range(1, upto + 1)]
        out += [s_plus_i(c, g) for c in range(upto + 1) for g in range(-(-c // 2) + 1)]
        return out

    def test_ranges_match_cg(self):
        for w in self._families():
            p = witness_profile(w)
            assert p.stable_ranges == ranges_from_cg(p.hyp_triple)

    def test_gan_chain(self):
        for w in self._families(6):
            p = witness_profile(w)
            shifted = [p.t(i) - i for i in range(1, 7)]
            if is_acyclic(w):
                assert p.regularity == max(shifted)
            else:
                assert all(a <= b for a, b in zip(shifted, shifted[1:]))
                assert shifted[-1] == p.regularity

    @pytest.mark.parametrize("w", [fam("T", -1), fam("S", -1), fam("V", 0), fam("V", -1)])
    def test_out_of_range(self, w):
        with pytest.raises(ParamOutOfTheoremRange):
            witness_profile(w)

    def test_sum_out_of_range(self):
        with pytest.raises(ParamOutOfTheoremRange):
            witness_profile(s_plus_i(2, 2))

    def test_json(self):
        data = witness_profile(fam("V", 2)).to_json()
        assert data["stable_ranges"]["t0"] == 4 and data["t"][:2] == [4, 5]


class TestSharpness:
    def test_v2(self):
        rep = sharpness_check(fam("V", 2))
        assert rep.passed
        assert rep.details["polynomial_at_hmax"] == "-1"

    @pytest.mark.parametrize("g", range(1, 5))
    def test_v_negative_below(self, g):
        rep = sharpness_check(fam("V", g), specht=False)
        assert rep.passed and Fraction(rep.details["polynomial_at_hmax"]) < 0

    def test_i2_specht(self):
        rep = sharpness_check(fam("I", 2))
        assert rep.passed
        assert rep.ranges.M == 4
        assert rep.details["specht_multiplicities"] == {"[]": 1, "[1]": 1, "[2]": 1}

    def test_t2(self):
        rep = sharpness_check(fam("T", 2))
        assert rep.passed and rep.ranges.A == 3

    @pytest.mark.parametrize("w", [fam("I", g) for g in range(-1, 5)]
                             + [fam(k, c) for k in "TS" for c in range(5)]
                             + [fam("V", g) for g in range(1, 5)], ids=str)
    def test_all_families(self, w):
        rep = sharpness_check(w, override_caps=True)
        assert rep.passed, rep.to_json()

    @pytest.mark.parametrize("field,delta", [("A", 1), ("hmax", 1), ("M", 1), ("t0", 1)])
    def test_loosened_claim_is_rejected(self, monkeypatch, field, delta):
        import dataclasses
        from repstab import witnesses

        real = witnesses.witness_profile

        def loosened(w):
            p = real(w)
            R = p.stable_ranges
            return dataclasses.replace(p, stable_ranges=dataclasses.replace(R, **{field: getattr(R, field) + delta}))

        monkeypatch.setattr(witnesses, "witness_profile", loosened)
        assert not sharpness_check(fam("V", 2)).passed
