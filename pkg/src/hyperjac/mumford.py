"""Mumford coordinates (u, v) for weight-g divisors on the chart Z.

A pair (u, v) lies on Z when u is monic of degree g, deg v < g and u divides
f - v^2; the cofactor w = (f - v^2) / u is then monic of degree g + 1.  Only
full-weight classes are representable here: the identity and everything else
on the theta divisor have no :class:`MumfordDivisor`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .curve import SAMPLING_ATTEMPTS, AffinePoint, Curve, sample_point
from .errors import (CurveMismatch, DuplicateX, InvariantViolation, NotOnZ,
                     ParseError, PointOffCurve, SamplingExhausted, ShapeError)
from .poly import Polynomial, divrem, format_poly, interpolate_distinct, parse_poly
from .rng import SplitMix64, as_rng


class ZMembership(NamedTuple):
    on_z: bool
    w: Polynomial | None

    def __bool__(self):
        return self.on_z


def check_shape(curve: Curve, u: Polynomial, v: Polynomial) -> None:
    g = curve.genus
    if u.field != curve.field or v.field != curve.field:
        raise ShapeError("u and v must live over the curve's field")
    if u.degree != g:
        raise ShapeError(f"deg u = {u.degree}, expected {g}")
    if not u.is_monic():
        raise ShapeError("u is not monic")
    if v.degree > g - 1:
        raise ShapeError(f"deg v = {v.degree}, expected at most {g - 1}")


def is_on_Z(curve: Curve, u: Polynomial, v: Polynomial) -> ZMembership:
    """Test u | f - v^2 and return the cofactor w when it does.

    Every coefficient identity f_i - sum v_j v_(i-j) = sum u_j w_(i-j),
    0 <= i <= 2g+1, is re-checked on success, including the redundant top one.
    """
    check_shape(curve, u, v)
    w, rem = divrem(curve.f - v * v, u)
    if rem:
        return ZMembership(False, None)
    g = curve.genus
    r = curve.modulus
    if w.degree != g + 1 or not w.is_monic():
        raise InvariantViolation(f"cofactor w = {w!r} is not monic of degree g+1")
    f = curve.f
    for i in range(2 * g + 2):
        lhs = f[i] - sum(v[j] * v[i - j] for j in range(i + 1))
        rhs = sum(u[j] * w[i - j] for j in range(i + 1))
        if (lhs - rhs) % r:
            raise InvariantViolation(f"coefficient identity fails at i = {i}")
    return ZMembership(True, w)


@dataclass(frozen=True)
class MumfordDivisor:
    """A point of Z: the class of P_1 + ... + P_g - g*inf."""

    curve: Curve
    u: Polynomial
    v: Polynomial

    def __post_init__(self):
        if not is_on_Z(self.curve, self.u, self.v):
            raise NotOnZ(f"u does not divide f - v^2 for {format_divisor(self)}")

    @property
    def genus(self) -> int:
        return self.curve.genus

    @property
    def w(self) -> Polynomial:
        return (self.curve.f - self.v * self.v) // self.u

    def __str__(self):
        return format_divisor(self)

    def __repr__(self):
        return f"MumfordDivisor({format_divisor(self)})"


def equals(D1: MumfordDivisor, D2: MumfordDivisor) -> bool:
    if D1.curve != D2.curve:
        raise CurveMismatch("divisors live on different curves")
    return D1.u == D2.u and D1.v == D2.v


def from_points(curve: Curve, points: Sequence[AffinePoint]) -> MumfordDivisor:
    """Divisor of g affine points with pairwise distinct x-coordinates."""
    g = curve.genus
    if len(points) != g:
        raise ShapeError(f"need exactly {g} points, got {len(points)}")
    for P in points:
        if not curve.contains(P):
            raise PointOffCurve(f"({P.x}, {P.y}) is not on the curve")
    xs = [P.x for P in points]
    if len(set(xs)) != g:
        raise DuplicateX(f"x-coordinates must be pairwise distinct, got {xs}")
    F = curve.field
    u = Polynomial.from_roots(F, xs)
    v = interpolate_distinct(F, [(P.x, P.y) for P in points])
    return MumfordDivisor(curve, u, v)


def random_divisor(curve: Curve, seed: int | SplitMix64,
                   require_nonzero_x: bool = False) -> MumfordDivisor:
    """g random points with distinct x and y != 0, deterministic per seed."""
    rng = as_rng(seed)
    g = curve.genus
    points: list[AffinePoint] = []
    seen: set[int] = set()
    for _ in range(SAMPLING_ATTEMPTS):
        P = sample_point(curve, rng, require_nonzero_x=require_nonzero_x)
        if P.x in seen:
            continue
        seen.add(P.x)
        points.append(P)
        if len(points) == g:
            return from_points(curve, points)
    raise SamplingExhausted(f"could not find {g} points with distinct x")


# -- text form: "u=[u0,...,1]; v=[v0,...,v_{g-1}]" ---------------------------

_DIVISOR_RE = re.compile(r"^\s*u\s*=\s*(\[[^\]]*\])\s*;\s*v\s*=\s*(\[[^\]]*\])\s*$")


def parse_uv(curve: Curve, text: str) -> tuple[Polynomial, Polynomial]:
    """Parse a divisor literal without checking membership in Z."""
    m = _DIVISOR_RE.match(text)
    if not m:
        raise ParseError(f"expected 'u=[...]; v=[...]', got {text!r}")
    u = parse_poly(curve.field, m.group(1))
    v = parse_poly(curve.field, m.group(2))
    check_shape(curve, u, v)
    return u, v


def parse_divisor(curve: Curve, text: str) -> MumfordDivisor:
    u, v = parse_uv(curve, text)
    return MumfordDivisor(curve, u, v)


def format_uv(u: Polynomial, v: Polynomial, g: int) -> str:
    return f"u={format_poly(u)}; v={format_poly(v, pad_to=g)}"


def format_divisor(D: MumfordDivisor) -> str:
    return format_uv(D.u, D.v, D.curve.genus)
