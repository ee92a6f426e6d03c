"""Explicit group law on Jacobians of hyperelliptic curves y^2 = f(x).

Divisor classes are handled in Mumford coordinates (u, v) over F_r.  The
explicit rational formulas live in :mod:`hyperjac.grouplaw`; Cantor's
algorithm in :mod:`hyperjac.cantor` serves as the reference oracle.
"""

from .cantor import SubgenericResult, cantor_add
from .curve import AffinePoint, Curve, load_curve, parse_curve, random_curve, sample_point
from .field import FieldElement, PrimeField
from .grouplaw import (GenusProfile, Interpolant, add, add_translated, compose_u,
                       compose_v, double, interpolate, negate)
from .mumford import (MumfordDivisor, from_points, is_on_Z, parse_divisor,
                      random_divisor)
from .poly import Polynomial

__version__ = "0.1.0"

__all__ = [
    "AffinePoint", "Curve", "FieldElement", "GenusProfile", "Interpolant",
    "MumfordDivisor", "Polynomial", "PrimeField", "SubgenericResult",
    "add", "add_translated", "cantor_add", "compose_u", "compose_v", "double",
    "from_points", "interpolate", "is_on_Z", "load_curve", "negate",
    "parse_curve", "parse_divisor", "random_curve", "random_divisor",
    "sample_point",
]
