"""Classical-analogue theorem suite: quadrilateral identities, Miquel
points, Ceva/Menelaus, and the isogonal machinery.

Every operation returns an exact residual (or an exact verdict); the
randomized campaigns in the harness drive these over thousands of
configurations.  Miquel points are computed without any root-finding: each
pair of circumscribing parabolas shares a named point of the
configuration, so the companion intersection is a Vieta extraction and
stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DegenerateConfigurationError
from .gauge import (Line, MeetResult, Point, concurrent, da_norm,
                    line_through, meet, slope_between)
from .parabola import (Parabola, circumparabola, conparabolic, eliminant,
                       opposite_angle_sum, parabola_meet, second_intersection)
from .scalar import det3, other_root
from .triangle import DATriangle, VERTICES


def _require_on(p: Parabola, *pts: Point) -> None:
    for pt in pts:
        if not p.contains(pt):
            raise DegenerateConfigurationError(f"{pt} is not on {p}")


def ptolemy_residual(a: Point, b: Point, c: Point, d: Point,
                     curve: Parabola) -> Fraction:
    """|AB||CD| + |AD||BC| - |AC||BD| with oriented lengths (plain
    x-differences); identically zero for four points on one vertical-axis
    parabola."""
    _require_on(curve, a, b, c, d)
    ab, cd = b.x - a.x, d.x - c.x
    ad, bc = d.x - a.x, c.x - b.x
    ac, bd = c.x - a.x, d.x - b.x
    return ab * cd + ad * bc - ac * bd


def brahmagupta_check(curve: Parabola, e: Point, a: Point, b: Point,
                      d: Point) -> Fraction:
    """Residual of the chord-bisection property: for E, A, B, D on the
    curve in x-order with DE parallel to AB, the crossing AD ^ EB sits on
    the singular line through the midpoint of AB.

    Returns x(AD ^ EB) - (x_A + x_B)/2, exactly 0.
    """
    _require_on(curve, e, a, b, d)
    if not (e.x < a.x < b.x < d.x):
        raise DegenerateConfigurationError("need x-order e < a < b < d")
    if curve.chord_slope(d.x, e.x) != curve.chord_slope(a.x, b.x):
        raise DegenerateConfigurationError("DE is not parallel to AB")
    crossing = meet(line_through(a, d), line_through(e, b))
    assert crossing.is_finite
    return crossing.point.x - (a.x + b.x) / 2


class TrapezoidVerdict(NamedTuple):
    is_isosceles_trapezoid: bool
    is_inscribed_with_parallel_pair: bool


def trapezoid_equivalence(a: Point, b: Point, c: Point,
                          d: Point) -> TrapezoidVerdict:
    """Evaluate both sides of the trapezoid characterization.

    A quadrilateral ABCD (sides AB, BC, CD, DA, no side or diagonal
    singular) is an isosceles trapezoid when exactly one pair of opposite
    sides is parallel and the other pair has equal norms; the theorem makes
    that equivalent to being inscribed in a vertical-axis parabola with a
    parallel pair of opposite sides.
    """
    pts = (a, b, c, d)
    sides = [(a, b), (b, c), (c, d), (d, a)]
    diagonals = [(a, c), (b, d)]
    for p, q in sides + diagonals:
        if p == q or p.x == q.x:
            raise DegenerateConfigurationError("singular side or diagonal")
    ab_cd = slope_between(a, b) == slope_between(c, d)
    bc_da = slope_between(b, c) == slope_between(d, a)
    if ab_cd != bc_da:
        legs_equal = (da_norm(b, c) == da_norm(d, a) if ab_cd
                      else da_norm(a, b) == da_norm(c, d))
        is_iso = legs_equal
        one_pair = True
    else:
        is_iso = False
        one_pair = False
    inscribed = (len({p.x for p in pts}) == 4 and conparabolic(a, b, c, d))
    return TrapezoidVerdict(is_iso, inscribed and one_pair)


def intersecting_parabolas_check(gamma: Parabola, delta: Parabola,
                                 m_a: Fraction, m_b: Fraction) -> Fraction:
    """Residual of the two-parabola chord parallelism.

    The curves must meet at two rational points A and B.  A line of slope
    m_a through A re-meets gamma at P and delta at Q; a line of slope m_b
    through B re-meets them at R and S.  PR and QS are parallel, so the
    returned slope difference is 0.  Tangent choices of slope (which
    collapse a chord to a point) are rejected.
    """
    hits = parabola_meet(gamma, delta)
    finite = [h.point for h in hits if h.is_finite]
    if len(finite) != 2:
        raise DegenerateConfigurationError(
            "parabolas must meet at two rational points")
    a, b = sorted(finite, key=lambda p: p.x)
    p = second_intersection(gamma, a, m_a)
    q = second_intersection(delta, a, m_a)
    r = second_intersection(gamma, b, m_b)
    s = second_intersection(delta, b, m_b)
    if a in (p, q) or b in (r, s):
        raise DegenerateConfigurationError("tangent chord at a common point")
    if p == r or q == s:
        raise DegenerateConfigurationError("degenerate chord (tangency)")
    if p.x == r.x or q.x == s.x:
        raise DegenerateConfigurationError("singular cross-chord")
    return slope_between(p, r) - slope_between(q, s)


def arc_symmetry_check(t: DATriangle, p_param: Fraction) -> bool:
    """Reflection symmetry of cevian crossings on a parabola arc.

    For a triangle on its circumparabola with sorted abscissae a < b < c
    and a parameter b < p < c, the crossing D = BC ^ AP together with
    D' = CA ^ BP' (P' the reflection of P at x = c) is conparabolic with
    A and B.  Verified through the opposite-angle-sum predicate (plus a
    direct membership check).
    """
    lo, mid, hi = t.sorted_vertices()
    p_param = Fraction(p_param)
    if not (mid.x < p_param < hi.x):
        raise DegenerateConfigurationError("parameter must lie on the arc")
    par = t.parabola
    p = par.point_at(p_param)
    p_refl = par.point_at(2 * hi.x - p_param)
    d_hit = meet(line_through(mid, hi), line_through(lo, p))
    d2_hit = meet(line_through(hi, lo), line_through(mid, p_refl))
    if not (d_hit.is_finite and d2_hit.is_finite):
        raise DegenerateConfigurationError("cevian parallel to a side")
    d, d2 = d_hit.point, d2_hit.point
    quad = [lo, mid, d, d2]
    if len({q.x for q in quad}) < 4:
        raise DegenerateConfigurationError("coincident abscissae in quadruple")
    ok = conparabolic(*quad)
    ordered = sorted(quad, key=lambda q: q.x)
    if [q.x for q in quad] == [q.x for q in ordered]:
        ok = ok and opposite_angle_sum(*quad) == 0
    return ok


# ---------------------------------------------------------------------------
# Ceva / Menelaus.
# ---------------------------------------------------------------------------

def _directed_ratio(u: Point, x: Point, w: Point) -> Fraction:
    """Directed ratio UX : XW in the segment norm (x-differences)."""
    if x.x == w.x:
        raise DegenerateConfigurationError("ratio denominator vanishes")
    return (x.x - u.x) / (w.x - x.x)


def _feet_triple_ratio(t: DATriangle, d: Point, e: Point, f: Point) -> Fraction:
    for foot, lbl in ((d, "A"), (e, "B"), (f, "C")):
        if not t.side(lbl).contains(foot):
            raise DegenerateConfigurationError(f"foot {foot} off side {lbl}")
        if foot in (t.a, t.b, t.c):
            raise DegenerateConfigurationError("foot at a vertex")
    return (_directed_ratio(t.b, d, t.c)
            * _directed_ratio(t.c, e, t.a)
            * _directed_ratio(t.a, f, t.b))


def ceva_product(t: DATriangle, d: Point, e: Point, f: Point) -> Fraction:
    """Signed cevian product (BD/DC)(CE/EA)(AF/FB) in directed segment
    norms; equals 1 exactly when AD, BE, CF are concurrent."""
    return _feet_triple_ratio(t, d, e, f)


def cevians_concurrent(t: DATriangle, d: Point, e: Point, f: Point) -> bool:
    """Meet-based concurrency oracle, independent of the ratio product."""
    return concurrent(line_through(t.a, d), line_through(t.b, e),
                      line_through(t.c, f))


def menelaus_product(t: DATriangle, d: Point, e: Point, f: Point) -> Fraction:
    """Same signed product as Ceva over points of the side lines (external
    positions allowed); equals -1 exactly when D, E, F are collinear."""
    return _feet_triple_ratio(t, d, e, f)


def transversal_collinear(d: Point, e: Point, f: Point) -> bool:
    return det3((d.x, d.y, 1), (e.x, e.y, 1), (f.x, f.y, 1)) == 0


# ---------------------------------------------------------------------------
# Miquel configurations.
# ---------------------------------------------------------------------------

class MiquelResult(NamedTuple):
    point: MeetResult
    memberships: dict[str, Fraction]   # curve label -> residual (finite case)
    kind: str                          # "finite" | "ideal"


def _second_meet_via(p1: Parabola, p2: Parabola, shared: Point) -> MeetResult:
    """Companion intersection of two circumscribing parabolas through their
    named shared point; ideal when the quadratic coefficients agree."""
    if p1 == p2:
        raise DegenerateConfigurationError("coincident circumparabolas")
    q = eliminant(p1, p2)
    if q.c2 == 0:
        return MeetResult.ideal(None)
    x2 = other_root(q, shared.x)
    if x2 == shared.x:
        raise DegenerateConfigurationError(
            "circumparabolas tangent at the shared point")
    return MeetResult.at(p1.point_at(x2))


def miquel_triangle(t: DATriangle, d: Point, e: Point,
                    f: Point) -> MiquelResult:
    """Common point of the three cevian-feet circumparabolas.

    With D, E, F interior to sides BC, CA, AB, the parabolas through
    (A,E,F), (B,F,D), (C,D,E) concur.  The point is extracted from the
    pair through the shared foot F and certified exactly against the third
    curve; equal quadratic coefficients put the common point at the axis
    ideal point.  All three pairings are cross-checked for consistency.
    """
    for foot, lbl in ((d, "A"), (e, "B"), (f, "C")):
        if not t.side(lbl).contains(foot):
            raise DegenerateConfigurationError(f"foot {foot} off side {lbl}")
        if foot in (t.a, t.b, t.c):
            raise DegenerateConfigurationError("foot at a vertex")
    c_aef = circumparabola(t.a, e, f)
    c_bfd = circumparabola(t.b, f, d)
    c_cde = circumparabola(t.c, d, e)

    m = _second_meet_via(c_aef, c_bfd, f)
    via_e = _second_meet_via(c_aef, c_cde, e)
    via_d = _second_meet_via(c_bfd, c_cde, d)

    if m.is_ideal or via_e.is_ideal or via_d.is_ideal:
        # Every vertical-axis parabola passes through the axis ideal point,
        # so an ideal companion anywhere forces the common point there.
        if not (m.is_ideal and via_e.is_ideal and via_d.is_ideal):
            raise DegenerateConfigurationError(
                "inconsistent finite/ideal Miquel pairings")
        return MiquelResult(MeetResult.ideal(None), {}, "ideal")

    if not (m == via_e == via_d):
        raise AssertionError("Miquel pairings disagree on the common point")
    memberships = {
        "C_AEF": c_aef.y_at(m.point.x) - m.point.y,
        "C_BFD": c_bfd.y_at(m.point.x) - m.point.y,
        "C_CDE": c_cde.y_at(m.point.x) - m.point.y,
    }
    return MiquelResult(m, memberships, "finite")


@dataclass(frozen=True)
class CompleteQuadrilateral:
    """Four lines in general position, none singular, with the six labeled
    intersection points A, B, C, D (cyclic) and E = AB ^ CD, F = BC ^ AD.

    Construction enforces the nonsingularity assumptions: finite pairwise
    meets, no three lines concurrent, and no circumscribing triple with a
    shared abscissa or on a common line.
    """

    l1: Line  # carries A, B
    l2: Line  # carries B, C
    l3: Line  # carries C, D
    l4: Line  # carries D, A

    def __post_init__(self):
        lines = (self.l1, self.l2, self.l3, self.l4)
        if any(l.is_singular for l in lines):
            raise DegenerateConfigurationError("singular line in quadrilateral")
        for i in range(4):
            for j in range(i + 1, 4):
                if not meet(lines[i], lines[j]).is_finite:
                    raise DegenerateConfigurationError(
                        "parallel or coincident lines")
        pts = self.points()
        if len(set(pts.values())) != 6:
            raise DegenerateConfigurationError("three lines concurrent")
        for triple in self.defining_triples().values():
            if len({p.x for p in triple}) != 3:
                raise DegenerateConfigurationError(
                    "shared abscissa in a defining triple; re-normalizing "
                    "the gauge to another chart would restore generality")
            if det3(*(((p.x, p.y, 1)) for p in triple)) == 0:
                raise DegenerateConfigurationError(
                    "collinear defining triple")

    def points(self) -> dict[str, Point]:
        return {
            "A": meet(self.l4, self.l1).point,
            "B": meet(self.l1, self.l2).point,
            "C": meet(self.l2, self.l3).point,
            "D": meet(self.l3, self.l4).point,
            "E": meet(self.l1, self.l3).point,
            "F": meet(self.l2, self.l4).point,
        }

    def defining_triples(self) -> dict[str, tuple[Point, Point, Point]]:
        p = self.points()
        return {
            "C_ABF": (p["A"], p["B"], p["F"]),
            "C_BCE": (p["B"], p["C"], p["E"]),
            "C_CDF": (p["C"], p["D"], p["F"]),
            "C_DAE": (p["D"], p["A"], p["E"]),
        }


def miquel_quadrilateral(q: CompleteQuadrilateral) -> MiquelResult:
    """Common point of the four circumparabolas of a complete
    quadrilateral.

    The candidate is the companion of the pair (C_ABF, C_BCE) through the
    shared point B; its exact membership in C_CDF and C_DAE is the
    certificate.  Pairs with equal quadratic coefficient push the common
    point to the axis ideal point, which all four curves contain.
    """
    triples = q.defining_triples()
    curves = {name: circumparabola(*pts) for name, pts in triples.items()}
    b = q.points()["B"]
    m = _second_meet_via(curves["C_ABF"], curves["C_BCE"], b)
    if m.is_ideal:
        return MiquelResult(m, {}, "ideal")
    memberships = {name: curve.y_at(m.point.x) - m.point.y
                   for name, curve in curves.items()}
    return MiquelResult(m, memberships, "finite")


# ---------------------------------------------------------------------------
# Isogonal machinery.
# ---------------------------------------------------------------------------

def singular_projective_length(p: Fraction, x0: Fraction,
                               q: Fraction) -> Fraction:
    """Height at which the chord from parameter p to parameter q of the
    standard parabola crosses the singular line x = x0:
    (p + q) x0 - p q, affine-linear in q."""
    p, x0, q = Fraction(p), Fraction(x0), Fraction(q)
    if p == q:
        raise DegenerateConfigurationError("degenerate chord")
    return (p + q) * x0 - p * q


def mn_division_check(a: Fraction, b: Fraction, p: Fraction, m: int,
                      n: int) -> tuple[Fraction, Fraction]:
    """Residual pair of the angle-division/segment-division correspondence
    on the standard parabola.

    With C at parameter (n a + m b)/(m + n), the chord P C cuts the
    singular lines at A and B so that A A_C : A_C A_B = m : n and
    B B_C : B_C B_A = n : m (directed vertical measures).  Both residuals
    are exactly 0.
    """
    a, b, p = Fraction(a), Fraction(b), Fraction(p)
    if m <= 0 or n <= 0:
        raise DegenerateConfigurationError("division weights must be positive")
    if len({a, b, p}) != 3:
        raise DegenerateConfigurationError("parameters must be distinct")
    c = (n * a + m * b) / (m + n)
    if c == p:
        raise DegenerateConfigurationError("chord PC is degenerate")
    a_c = singular_projective_length(p, a, c)
    a_b = singular_projective_length(p, a, b)
    b_c = singular_projective_length(p, b, c)
    b_a = singular_projective_length(p, b, a)
    res_a = n * (a_c - a * a) - m * (a_b - a_c)
    res_b = m * (b_c - b * b) - n * (b_a - b_c)
    return res_a, res_b


@dataclass(frozen=True)
class CevianSpec:
    """An angle divider at a vertex.

    ``ratio = (m, n)`` splits the angle m:n measured from ``base`` (the
    side named by its far endpoint, e.g. base "B" at vertex A measures
    from side AB).  ``singular=True`` requests the singular line through
    the vertex instead (the interior bisector at the negative vertex).
    """

    ratio: tuple[Fraction, Fraction] = (Fraction(1), Fraction(1))
    base: str = ""
    singular: bool = False

    def swapped(self) -> "CevianSpec":
        if self.singular:
            return self
        return CevianSpec((self.ratio[1], self.ratio[0]), self.base,
                          self.singular)


def cevian_line(t: DATriangle, vertex: str, spec: CevianSpec) -> Line:
    """Concrete line of a cevian spec at a vertex: the slope interpolates
    the two adjacent side slopes with weights m:n starting at the base
    side."""
    v = t.vertex(vertex)
    if spec.singular:
        return Line.singular(v.x)
    u, w = t.others(vertex)
    if spec.base not in (VERTICES[0], VERTICES[1], VERTICES[2]) or \
            t.vertex(spec.base) not in (u, w):
        raise DegenerateConfigurationError(
            f"base {spec.base!r} is not adjacent to vertex {vertex}")
    base_pt = t.vertex(spec.base)
    far_pt = w if base_pt == u else u
    m, n = spec.ratio
    if m + n == 0:
        raise DegenerateConfigurationError("degenerate division weights")
    s_base = slope_between(v, base_pt)
    s_far = slope_between(v, far_pt)
    slope = (n * s_base + m * s_far) / (m + n)
    return Line(slope, v.y - slope * v.x)


def isogonal_spec(spec: CevianSpec) -> CevianSpec:
    """The isogonal image of a cevian spec: the division ratio inverts
    (reflection across the positive-angle bisector); the singular cevian is
    a fixed point of the map, making the map an involution."""
    return spec.swapped()


class IsogonalVerdict(NamedTuple):
    original_concurrent: bool
    isogonal_concurrent: bool


def isogonal_concurrency_check(t: DATriangle,
                               specs: dict[str, CevianSpec]) -> IsogonalVerdict:
    """Whether a cevian triple and its isogonal images are concurrent.

    Concurrency is decided by the exact meet oracle over the three cevian
    lines; the theorem asserts that concurrency survives the isogonal map.
    """
    def concurrent_for(ss: dict[str, CevianSpec]) -> bool:
        return concurrent(*(cevian_line(t, v, ss[v]) for v in VERTICES))

    mirrored = {v: isogonal_spec(s) for v, s in specs.items()}
    round_trip = {v: isogonal_spec(s) for v, s in mirrored.items()}
    assert round_trip == specs, "isogonal map must be an involution"
    return IsogonalVerdict(concurrent_for(specs), concurrent_for(mirrored))
