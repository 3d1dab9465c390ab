"""Exact rational scalars and the small algebraic primitives everything
else reduces to.

A scalar is a :class:`fractions.Fraction`: always in lowest terms with a
positive denominator, so equality is structural and every predicate in the
kernel bottoms out in an exact sign test.  Scene files carry scalars as
strings (``"3"``, ``"-7/4"``, ``"0.25"``); parsing is exact and never goes
through binary floats.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

Scalar = Fraction

_SCALAR_RE = re.compile(
    r"""^\s*(
        [+-]?\d+ (?:/\d+)?      # integer or p/q
      | [+-]?\d+\.\d+           # finite decimal
      | [+-]?\.\d+              # leading-dot decimal
    )\s*$""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> Fraction:
    """Parse ``"n"``, ``"p/q"`` or a finite decimal into an exact rational.

    Decimals expand exactly (``"0.25"`` -> 1/4); anything else, including a
    zero denominator, is rejected.
    """
    if not isinstance(text, str) or not _SCALAR_RE.match(text):
        raise ValueError(f"not a scalar literal: {text!r}")
    body = text.strip()
    if "/" in body:
        num, den = body.split("/")
        if int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(body)


def format_scalar(value: Fraction) -> str:
    """Inverse of :func:`parse_scalar`, normalized to ``n`` or ``p/q``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def det3(r1, r2, r3) -> Fraction:
    """Exact determinant of the 3x3 matrix with rows ``r1, r2, r3``.

    With rows ``(x, y, 1)`` this is the collinearity certificate: zero iff
    the three points are collinear.
    """
    a, b, c = r1
    d, e, f = r2
    g, h, i = r3
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def collinear(p, q, r) -> bool:
    """Whether three points (objects with .x/.y) lie on one line."""
    return det3((p.x, p.y, 1), (q.x, q.y, 1), (r.x, r.y, 1)) == 0


@dataclass(frozen=True)
class QuadraticPoly:
    """c2*x^2 + c1*x + c0 over exact rationals.

    Used as the eliminant of curve intersections: once one rational root is
    known, the companion root comes out of Vieta without any root-finding.
    """

    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __call__(self, x: Fraction) -> Fraction:
        return (self.c2 * x + self.c1) * x + self.c0

    @property
    def degree(self) -> int:
        if self.c2 != 0:
            return 2
        return 1 if self.c1 != 0 else 0

    def discriminant(self) -> Fraction:
        return self.c1 * self.c1 - 4 * self.c2 * self.c0

    def rational_roots(self) -> list[Fraction] | None:
        """Both roots when they are rational, ``[]`` when there are no real
        roots, and ``None`` when the roots exist but are irrational.

        Requires degree 2.
        """
        if self.c2 == 0:
            raise ValueError("rational_roots requires a genuine quadratic")
        disc = self.discriminant()
        if disc < 0:
            return []
        root = _rational_sqrt(disc)
        if root is None:
            return None
        lo = (-self.c1 - root) / (2 * self.c2)
        hi = (-self.c1 + root) / (2 * self.c2)
        return [lo] if lo == hi else sorted([lo, hi])


def _rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        raise ValueError("negative radicand")
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


def other_root(q: QuadraticPoly, known: Fraction) -> Fraction:
    """Vieta companion of a known rational root of ``q``.

    The sum of the roots is -c1/c2, so the second root needs no radicals.
    Rejects ``known`` if it does not actually annihilate ``q``.
    """
    if q.c2 == 0:
        raise ValueError("other_root requires a genuine quadratic")
    residual = q(known)
    if residual != 0:
        raise ValueError(f"{known} is not a root (residual {residual})")
    return -q.c1 / q.c2 - known
