"""Shared constructions for the group-law tests."""

from hyperjac.curve import AffinePoint, Curve, random_curve, sample_point
from hyperjac.errors import SingularCurve
from hyperjac.field import PrimeField
from hyperjac.mumford import from_points, random_divisor
from hyperjac.poly import Polynomial
from hyperjac.rng import SplitMix64, as_rng


def chord_add(D1, D2):
    """Genus-1 chord law on (u0, v0) pairs; returns (u0'', v0'')."""
    F = D1.curve.field
    r = F.modulus
    f2 = D1.curve.f[2]
    u0, v0 = D1.u[0], D1.v[0]
    u0p, v0p = D2.u[0], D2.v[0]
    lam = (v0p - v0) * F.inv((u0 - u0p) % r) % r
    u0pp = (-lam * lam + f2 - u0 - u0p) % r
    v0pp = (-lam * u0 + lam * u0pp - v0) % r
    return u0pp, v0pp


def curve_with_origin_point(field: PrimeField, genus: int, seed) -> tuple[Curve, AffinePoint]:
    """A random curve whose constant term is a nonzero square, plus the point (0, y)."""
    rng = as_rng(seed)
    while True:
        base = random_curve(field, genus, rng)
        y = 1 + rng.randbelow(field.modulus - 1)
        coeffs = list(base.f.coeffs)
        coeffs[0] = y * y % field.modulus
        try:
            C = Curve(genus, Polynomial(field, coeffs))
        except SingularCurve:
            continue
        return C, AffinePoint(0, y)


def divisor_through(curve: Curve, P: AffinePoint, rng):
    """A generic divisor containing P, with the other points sampled."""
    rng = as_rng(rng)
    pts = [P]
    while len(pts) < curve.genus:
        Q = sample_point(curve, rng, require_nonzero_x=True)
        if all(Q.x != R.x for R in pts):
            pts.append(Q)
    return from_points(curve, pts)


def pair(curve: Curve, seed: int):
    rng = SplitMix64(seed)
    return random_divisor(curve, rng.fork()), random_divisor(curve, rng.fork())
