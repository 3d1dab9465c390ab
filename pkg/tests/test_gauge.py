from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dageo.errors import DegenerateConfigurationError
from dageo.gauge import (Gauge, Line, MeetResult, Point, angle_axiom_checks,
                         angle_axiom_suite, da_norm, difference_angle,
                         identity_gauge, line_through, meet, normalize_chart,
                         slope_between)

small = st.fractions(min_value=-40, max_value=40, max_denominator=12)


def pt(x, y):
    return Point(F(x), F(y))


class TestNormalizeChart:
    def test_identity(self):
        assert normalize_chart(identity_gauge(), [pt(3, 4)]) == [pt(3, 4)]

    def test_oblique_projective_direction(self):
        # (2,2) = 0*(1,0) + 2*(1,1)  =>  chart point (0,2)
        g = Gauge(pt(0, 0), (F(1), F(0)), (F(1), F(1)))
        assert normalize_chart(g, [pt(2, 2)]) == [pt(0, 2)]

    def test_scaled_axes_with_offset_origin(self):
        # (3,4)-(1,1) = 1*(2,0) + 1*(0,3)  =>  chart point (1,1)
        g = Gauge(pt(1, 1), (F(2), F(0)), (F(0), F(3)))
        assert normalize_chart(g, [pt(3, 4)]) == [pt(1, 1)]

    def test_rejects_degenerate_gauge(self):
        with pytest.raises(DegenerateConfigurationError):
            Gauge(pt(0, 0), (F(1), F(2)), (F(2), F(4)))

    def test_round_trip_property(self):
        g = Gauge(pt(5, -3), (F(2), F(1)), (F(-1), F(3)))
        points = [pt(1, 7), pt(-2, 0), pt(4, 4)]
        chart = normalize_chart(g, points)
        for original, mapped in zip(points, chart):
            rx, ry = g.reference_direction
            px, py = g.projective_direction
            back = Point(g.origin.x + mapped.x * rx + mapped.y * px,
                         g.origin.y + mapped.x * ry + mapped.y * py)
            assert back == original


class TestSlopeAndNorm:
    def test_chord_slope(self):
        assert slope_between(pt(1, 1), pt(2, 4)) == 3

    def test_singular(self):
        assert slope_between(pt(2, 0), pt(2, 9)) is None

    def test_reference_direction(self):
        assert slope_between(pt(0, 0), pt(5, 0)) == 0

    def test_coincident_points_rejected(self):
        with pytest.raises(DegenerateConfigurationError):
            slope_between(pt(1, 1), pt(1, 1))

    def test_norm_examples(self):
        assert da_norm(pt(0, 5), pt(3, 7)) == 3
        assert da_norm(pt(2, 1), pt(2, 99)) == 0  # not positive definite
        assert da_norm(pt(4, 4), pt(4, 4)) == 0

    @given(small, small, small, small)
    def test_norm_symmetry_nonnegative(self, ax, ay, bx, by):
        a, b = Point(ax, ay), Point(bx, by)
        assert da_norm(a, b) == da_norm(b, a) >= 0


class TestDifferenceAngle:
    def test_iso_angle_sample(self):
        # slopes: PB = 1, PA = -1 so the angle is 2
        assert difference_angle(pt(0, 0), pt(1, -1), pt(2, 0)) == 2

    def test_singular_ray_absorbed(self):
        assert difference_angle(pt(1, 5), pt(1, 0), pt(7, 3)) == 0

    def test_collinear_vanishes(self):
        assert difference_angle(pt(0, 0), pt(1, 1), pt(2, 2)) == 0

    def test_vertex_collision_rejected(self):
        with pytest.raises(DegenerateConfigurationError):
            difference_angle(pt(1, 1), pt(1, 1), pt(2, 2))

    @given(small, small, small, small, small, small)
    def test_antisymmetry(self, ax, ay, px, py, bx, by):
        a, p, b = Point(ax, ay), Point(px, py), Point(bx, by)
        if p in (a, b):
            return
        assert difference_angle(a, p, b) == -difference_angle(b, p, a)

    @given(small, small, small, small, small, small)
    def test_telescoping_additivity(self, ax, ay, px, py, bx, by):
        # angle(A,P,C) + angle(C,P,B) telescopes for any non-singular rays
        a, p, b = Point(ax, ay), Point(px, py), Point(bx, by)
        c = Point(p.x + 1, p.y - 2)
        if p in (a, b) or p.x in (a.x, b.x):
            return
        assert (difference_angle(a, p, c) + difference_angle(c, p, b)
                == difference_angle(a, p, b))


class TestLinesAndMeet:
    def test_line_through(self):
        assert line_through(pt(0, 0), pt(1, 3)) == Line(F(3), F(0))
        assert line_through(pt(1, 1), pt(2, 4)) == Line(F(3), F(-2))
        assert line_through(pt(4, 0), pt(4, 9)) == Line.singular(F(4))

    def test_meet_bisector_foot(self):
        # the (0,1,2) interior-bisector foot: y = 3x/2 meets y = 3x - 2
        hit = meet(Line(F(3, 2), F(0)), Line(F(3), F(-2)))
        assert hit == MeetResult.at(pt(F(4, 3), 2))

    def test_meet_parallels(self):
        assert meet(Line(F(1), F(0)), Line(F(1), F(5))) == MeetResult.ideal(F(1))

    def test_meet_singular_pair(self):
        assert meet(Line.singular(F(0)), Line.singular(F(7))) \
            == MeetResult.ideal(None)

    def test_meet_coincident(self):
        line = Line(F(2), F(1))
        assert meet(line, line).kind == MeetResult.COINCIDENT

    def test_meet_sloped_with_singular(self):
        hit = meet(Line(F(4), F(-3)), Line.singular(F(0)))
        assert hit == MeetResult.at(pt(0, -3))

    def test_line_contains(self):
        assert Line(F(2), F(-1)).contains(pt(1, 1))
        assert not Line(F(2), F(-1)).contains(pt(1, 2))
        assert Line.singular(F(2)).contains(pt(2, 77))


class TestAxiomSuite:
    def test_hand_checked_configuration(self):
        # antisymmetry example: P=(1,-1), A=(0,0), B=(2,0); slopes -1 and 1
        assert angle_axiom_checks(pt(0, 0), pt(1, -1), pt(2, 0),
                                  F(3, 4), F(5)) is None

    def test_additivity_with_interior_point(self):
        # C=(3/2,0) between A=(0,0), B=(2,0); slope(PC)=2 from P=(1,-1):
        # angle(A,P,C) = 3, angle(C,P,B) = -1, total 2
        a, p, b = pt(0, 0), pt(1, -1), pt(2, 0)
        c = pt(F(3, 2), 0)
        assert difference_angle(a, p, c) == 3
        assert difference_angle(c, p, b) == -1
        assert difference_angle(a, p, b) == 2

    def test_scaling_by_five(self):
        assert difference_angle(pt(0, 0), pt(5, -5), pt(10, 0)) == 2

    def test_suite_clean_run(self):
        report = angle_axiom_suite(seed=7, trials=60, bound=20)
        assert report["failures"] == 0
        assert report["first_counterexample"] is None
