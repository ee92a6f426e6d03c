"""Cantor's composition-and-reduction algorithm.

This is the reference group law the explicit formulas are checked against.
It is total: shared roots, conjugate points and doubling all go through the
same extended-gcd composition.  Sums that reduce to fewer than g points lie
outside Z and come back as :class:`SubgenericResult`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import Curve
from .errors import CurveMismatch, InvariantViolation
from .mumford import MumfordDivisor, format_uv
from .poly import Polynomial, divrem, xgcd


@dataclass(frozen=True)
class SubgenericResult:
    """A reduced class of weight < g (on the theta divisor)."""

    curve: Curve
    u: Polynomial
    v: Polynomial

    @property
    def weight(self) -> int:
        return int(self.u.degree)

    def __str__(self):
        return format_uv(self.u, self.v, self.curve.genus)


def identity(curve: Curve) -> SubgenericResult:
    F = curve.field
    return SubgenericResult(curve, Polynomial.constant(F, 1), Polynomial.zero(F))


def _exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    q, rem = divrem(a, b)
    if rem:
        raise InvariantViolation("expected exact polynomial division")
    return q


def compose(f: Polynomial, u1: Polynomial, v1: Polynomial,
            u2: Polynomial, v2: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Semi-reduced (u, v) for the sum of two semi-reduced divisors."""
    d0, e1, e2 = xgcd(u1, u2)
    if d0.degree == 0:
        d, s1, s2, s3 = d0, e1, e2, Polynomial.zero(f.field)
    else:
        d, c1, c2 = xgcd(d0, v1 + v2)
        s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = _exact_div(u1 * u2, d * d)
    v = _exact_div(s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f), d) % u
    return u, v


def reduce(f: Polynomial, genus: int, u: Polynomial, v: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Reduce a semi-reduced (u, v) until deg u <= g; u is returned monic."""
    while u.degree > genus:
        u = _exact_div(f - v * v, u).monic()
        v = (-v) % u
    u = u.monic()
    return u, v % u


def cantor_add(D1, D2) -> MumfordDivisor | SubgenericResult:
    """Sum of two reduced classes (a MumfordDivisor or a SubgenericResult each)."""
    if D1.curve != D2.curve:
        raise CurveMismatch("divisors live on different curves")
    curve = D1.curve
    u, v = compose(curve.f, D1.u, D1.v, D2.u, D2.v)
    u, v = reduce(curve.f, curve.genus, u, v)
    if (curve.f - v * v) % u:
        raise InvariantViolation("Cantor output fails u | f - v^2")
    if u.degree == curve.genus:
        return MumfordDivisor(curve, u, v)
    return SubgenericResult(curve, u, v)


def cantor_negate(D):
    return type(D)(D.curve, D.u, -D.v)
