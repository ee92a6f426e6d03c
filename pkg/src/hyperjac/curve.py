"""Imaginary hyperelliptic curves y^2 = f(x), f monic of degree 2g + 1."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import (NotMonic, ParseError, PointOffCurve, SamplingExhausted,
                     SingularCurve, WrongDegree)
from .field import PrimeField
from .poly import Polynomial, discriminant, format_poly, parse_coeff_list
from .rng import SplitMix64, as_rng

SAMPLING_ATTEMPTS = 10_000


@dataclass(frozen=True)
class AffinePoint:
    """A point (x, y) of the affine chart; coordinates are canonical residues."""

    x: int
    y: int


@dataclass(frozen=True)
class Curve:
    genus: int
    f: Polynomial

    def __post_init__(self):
        g = self.genus
        if not isinstance(g, int) or g < 1:
            raise WrongDegree(f"genus must be a positive integer, got {g!r}")
        if self.f.degree != 2 * g + 1:
            raise WrongDegree(f"deg f = {self.f.degree}, expected {2 * g + 1}")
        if not self.f.is_monic():
            raise NotMonic(f"leading coefficient {self.f.lead} != 1")
        # Only vanishing matters; the normalization constant is irrelevant.
        if discriminant(self.f) == 0:
            raise SingularCurve("f has a repeated root")

    @classmethod
    def from_coeffs(cls, modulus: int, genus: int, coeffs: list[int]) -> Curve:
        F = PrimeField(modulus)
        return cls(genus, Polynomial(F, coeffs))

    @property
    def field(self) -> PrimeField:
        return self.f.field

    @property
    def modulus(self) -> int:
        return self.f.field.modulus

    def __repr__(self):
        return f"Curve(g={self.genus}, f={format_poly(self.f)}, {self.field})"

    def contains(self, P: AffinePoint) -> bool:
        r = self.modulus
        return P.y * P.y % r == self.f.eval(P.x)

    def point(self, x: int, y: int) -> AffinePoint:
        r = self.modulus
        P = AffinePoint(x % r, y % r)
        if not self.contains(P):
            raise PointOffCurve(f"({P.x}, {P.y}) is not on {self}")
        return P

    def involution(self, P: AffinePoint) -> AffinePoint:
        return AffinePoint(P.x, (-P.y) % self.modulus)

    def translate(self, c: int) -> Curve:
        """The isomorphic curve y^2 = f(x + c); (x, y) maps to (x - c, y)."""
        return Curve(self.genus, self.f.shift(c))


def sample_point(curve: Curve, rng: int | SplitMix64, require_nonzero_x: bool = False,
                 require_nonzero_y: bool = True) -> AffinePoint:
    """Draw x uniformly until f(x) is a square, then pick a root at random.

    Passing an int seeds a fresh generator, so the same seed always gives the
    same point; passing a :class:`SplitMix64` continues its stream.
    """
    rng = as_rng(rng)
    F = curve.field
    r = F.modulus
    for _ in range(SAMPLING_ATTEMPTS):
        x = rng.randbelow(r)
        if require_nonzero_x and x == 0:
            continue
        fx = curve.f.eval(x)
        if fx == 0 and require_nonzero_y:
            continue
        y = F.sqrt(fx)
        if y is None:
            continue
        if rng.randbit():
            y = (-y) % r
        return AffinePoint(x, y)
    raise SamplingExhausted(f"no suitable point after {SAMPLING_ATTEMPTS} draws")


def random_curve(field: PrimeField, genus: int, rng: int | SplitMix64) -> Curve:
    """A uniformly random monic squarefree f of degree 2g + 1."""
    rng = as_rng(rng)
    r = field.modulus
    for _ in range(SAMPLING_ATTEMPTS):
        coeffs = [rng.randbelow(r) for _ in range(2 * genus + 1)] + [1]
        f = Polynomial(field, coeffs)
        if discriminant(f) != 0:
            return Curve(genus, f)
    raise SamplingExhausted("could not find a squarefree f")


# -- curve files ----------------------------------------------------------

def parse_curve(text: str) -> Curve:
    """Parse the ``key = value`` curve format (keys ``p``, ``g``, ``f``)."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in ("p", "g", "f"):
            raise ParseError(f"line {lineno}: expected 'p = ...', 'g = ...' or 'f = [...]'")
        if key in entries:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value.strip()
    missing = {"p", "g", "f"} - entries.keys()
    if missing:
        raise ParseError(f"missing keys: {', '.join(sorted(missing))}")
    try:
        p = int(entries["p"])
        g = int(entries["g"])
    except ValueError:
        raise ParseError("p and g must be decimal integers") from None
    coeffs = parse_coeff_list(entries["f"])
    if len(coeffs) != 2 * g + 2:
        raise WrongDegree(f"f needs {2 * g + 2} coefficients for genus {g}, got {len(coeffs)}")
    if any(c >= p for c in coeffs):
        raise ParseError(f"coefficients of f must be reduced mod {p}")
    try:
        F = PrimeField(p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return Curve(g, Polynomial(F, coeffs))


def load_curve(path: str | Path) -> Curve:
    return parse_curve(Path(path).read_text(encoding="utf-8"))


def format_curve(curve: Curve) -> str:
    return (f"p = {curve.modulus}\n"
            f"g = {curve.genus}\n"
            f"f = {format_poly(curve.f, pad_to=2 * curve.genus + 2)}\n")
