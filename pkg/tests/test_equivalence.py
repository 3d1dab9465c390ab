from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dageo.equivalence import (IDENTITY, REVERSING, classify_pair,
                               coefficient_bridge, diag_section_similarity,
                               final_theorem_feet, intro_observation_check,
                               shift, sss_not_aa_witness)
from dageo.errors import DegenerateConfigurationError
from dageo.gauge import Point
from dageo.parabola import Parabola
from dageo.triangle import DATriangle

STD = Parabola(F(1), F(0), F(0))
small = st.fractions(min_value=-20, max_value=20, max_denominator=8)


def on_curve(curve, *xs):
    return DATriangle(*(curve.point_at(F(x)) for x in xs))


def on_std(*xs):
    return on_curve(STD, *xs)


class TestClassifyPair:
    def test_scaled_pair_sss_not_aa(self):
        t1, t2 = on_std(0, 1, 2), on_std(0, 2, 4)
        verdict = classify_pair(t1, t2)
        assert verdict.sim_sss and not verdict.sim_aa
        # the middle angles differ: -2 against -4
        assert t1.angle_at("B") == -2 and t2.angle_at("B") == -4

    def test_shifted_pair_congruent(self):
        t = on_std(0, 1, 3)
        verdict = classify_pair(t, shift(t, F(2)))
        assert verdict.da_congruent and verdict.norm_congruent
        assert verdict.sim_aa and verdict.sim_sas_signed and verdict.sim_sss

    def test_norm_congruent_not_congruent(self):
        t1 = on_std(0, 1, 3)
        t2 = on_curve(Parabola(F(2), F(0), F(0)), 0, 1, 3)
        verdict = classify_pair(t1, t2)
        assert verdict.norm_congruent and not verdict.da_congruent

    def test_symmetry_under_swap(self):
        t1, t2 = on_std(0, 1, 3), on_std(5, 7, 8)
        v12 = classify_pair(t1, t2)
        v21 = classify_pair(t2, t1)
        assert (v12.sim_sss, v12.sim_aa, v12.norm_congruent) \
            == (v21.sim_sss, v21.sim_aa, v21.norm_congruent)

    def test_invalid_correspondence(self):
        with pytest.raises(DegenerateConfigurationError):
            classify_pair(on_std(0, 1, 2), on_std(0, 1, 2),
                          {"A": "A", "B": "A", "C": "C"})

    @given(small, small, small, st.fractions(min_value=F(1, 6), max_value=9,
                                             max_denominator=6))
    def test_chain_invariants_random(self, x0, g1, g2, k):
        if g1 <= 0 or g2 <= 0:
            return
        xs = (x0, x0 + g1, x0 + g1 + g2)
        t1 = on_std(*xs)
        t2 = on_std(*(k * x for x in xs))
        verdict = classify_pair(t1, t2)  # chain asserted internally
        assert verdict.sim_sss


class TestCoefficientBridge:
    def test_opposite_openings_congruent(self):
        t1 = on_std(0, 1, 3)
        t2 = on_curve(Parabola(F(-1), F(0), F(0)), 0, 1, 3)
        assert coefficient_bridge(t1, t2) is True

    def test_different_magnitude_not_congruent(self):
        t1 = on_std(0, 1, 3)
        t2 = on_curve(Parabola(F(2), F(0), F(0)), 0, 1, 3)
        assert coefficient_bridge(t1, t2) is False

    def test_same_coefficient(self):
        t1 = on_std(0, 1, 3)
        assert coefficient_bridge(t1, shift(t1, F(5))) is True

    def test_requires_norm_congruence(self):
        with pytest.raises(DegenerateConfigurationError):
            coefficient_bridge(on_std(0, 1, 3), on_std(0, 1, 4))


class TestWitnessFamily:
    def test_default_witness(self):
        t1, t2, verdict = sss_not_aa_witness(F(0), F(1), F(3), F(2))
        assert verdict.sim_sss and not verdict.sim_aa

    def test_rejects_trivial_scale(self):
        with pytest.raises(DegenerateConfigurationError):
            sss_not_aa_witness(F(0), F(1), F(3), F(1))


class TestShift:
    def test_reference_shift(self):
        t = on_std(0, 1, 3)
        image = shift(t, F(2))
        assert [v.x for v in (image.a, image.b, image.c)] == [2, 3, 5]
        assert classify_pair(t, image).da_congruent

    def test_identity_and_inverse(self):
        t = on_std(0, 1, 3)
        assert shift(t, F(0)) == t
        assert shift(shift(t, F(1)), F(-1)) == t

    def test_general_curve_scaling(self):
        # on y = 2x^2 a shift by angle theta moves abscissae by theta/2
        curve = Parabola(F(2), F(0), F(0))
        t = on_curve(curve, 0, 1, 3)
        image = shift(t, F(2))
        assert [v.x for v in (image.a, image.b, image.c)] == [1, 2, 4]

    @given(small, small)
    def test_group_law(self, th1, th2):
        t = on_std(0, 1, 3)
        assert shift(shift(t, th1), th2) == shift(t, th1 + th2)


class TestDiagSection:
    def test_unit_spacing(self):
        pts = [STD.point_at(F(x)) for x in (0, 1, 2, 3)]
        verdict = diag_section_similarity(*pts)
        assert verdict.xab_xcd and verdict.xbc_xad

    def test_symmetric_spacing(self):
        pts = [STD.point_at(F(x)) for x in (0, 1, 3, 4)]
        verdict = diag_section_similarity(*pts)
        assert verdict.xab_xcd and verdict.xbc_xad

    def test_off_curve_rejected(self):
        pts = [STD.point_at(F(x)) for x in (0, 1, 3)]
        with pytest.raises(DegenerateConfigurationError):
            diag_section_similarity(*pts, Point(F(4), F(15)))


class TestFinalTheorem:
    def make_pair(self):
        gamma = STD
        delta = Parabola(F(1), F(-10), F(25))  # y = (x-5)^2
        t1 = on_curve(gamma, 0, 1, 2)
        t2 = DATriangle(delta.point_at(F(7)), delta.point_at(F(6)),
                        delta.point_at(F(5)))
        return t1, t2

    def test_reference_instance(self):
        t1, t2 = self.make_pair()
        result = final_theorem_feet(t1, t2)
        assert result.feet == (Point(F(0), F(-5)), Point(F(1), F(-8)),
                               Point(F(2), F(-11)))
        assert result.det_residual == 0
        assert result.menelaus_product == -1

    def test_reversed_opening(self):
        gamma = STD
        delta = Parabola(F(-1), F(3), F(2))
        t1 = on_curve(gamma, 0, 1, 3)
        # mirror congruence: label A gets the rightmost primed abscissa
        t2 = DATriangle(delta.point_at(F(13)), delta.point_at(F(12)),
                        delta.point_at(F(10)))
        result = final_theorem_feet(t1, t2)
        assert result.det_residual == 0

    def test_nonuniform_spacing(self):
        t1 = on_std(0, 1, 3)
        t2 = DATriangle(STD.point_at(F(13)), STD.point_at(F(12)),
                        STD.point_at(F(10)))
        assert final_theorem_feet(t1, t2).det_residual == 0

    def test_same_order_translate_rejected(self):
        # same-gap translate is label-congruent but orientation-preserving
        t1 = on_std(0, 1, 3)
        t2 = DATriangle(STD.point_at(F(10)), STD.point_at(F(11)),
                        STD.point_at(F(13)))
        with pytest.raises(DegenerateConfigurationError):
            final_theorem_feet(t1, t2)

    def test_broken_congruence_rejected(self):
        t1, _ = self.make_pair()
        delta = Parabola(F(1), F(-10), F(25))
        stretched = DATriangle(delta.point_at(F(8)), delta.point_at(F(6)),
                               delta.point_at(F(5)))
        with pytest.raises(DegenerateConfigurationError):
            final_theorem_feet(t1, stretched)

    def test_kappa_mismatch_rejected(self):
        t1, _ = self.make_pair()
        delta = Parabola(F(2), F(0), F(0))
        other = DATriangle(delta.point_at(F(7)), delta.point_at(F(6)),
                           delta.point_at(F(5)))
        with pytest.raises(DegenerateConfigurationError):
            final_theorem_feet(t1, other)


class TestIntroObservation:
    def test_reference_instance(self):
        t1 = on_std(0, 1, 2)
        delta = Parabola(F(1), F(-10), F(25))
        t2 = on_curve(delta, 5, 6, 7)
        result = intro_observation_check(t1, t2)
        assert result.feet == (Point(F(7), F(19)), Point(F(6), F(12)),
                               Point(F(5), F(5)))
        assert result.det_residual == 0

    def test_translation_amount_irrelevant(self):
        t1 = on_std(0, 1, 2)
        delta = Parabola(F(1), F(-30), F(225))  # shifted by +15
        t2 = on_curve(delta, 15, 16, 17)
        assert intro_observation_check(t1, t2).det_residual == 0

    def test_unequal_spacing_rejected(self):
        t1 = on_std(0, 1, 2)
        delta = Parabola(F(1), F(-10), F(25))
        t2 = on_curve(delta, 5, 6, 8)
        with pytest.raises(DegenerateConfigurationError):
            intro_observation_check(t1, t2)

    def test_non_translate_rejected(self):
        t1 = on_std(0, 1, 2)
        t2 = on_curve(Parabola(F(2), F(0), F(0)), 5, 6, 7)
        with pytest.raises(DegenerateConfigurationError):
            intro_observation_check(t1, t2)

    def test_nonuniform_gaps(self):
        t1 = on_std(0, 1, 4)
        # primed gaps reverse: (3, 1)
        t2 = on_curve(STD, 10, 13, 14)
        assert intro_observation_check(t1, t2).det_residual == 0
