"""Dense univariate polynomials over a prime field.

Coefficients are stored as a tuple of canonical ``int`` residues in
ascending order, trailing zeros stripped, so the zero polynomial is ``()``.
Indexing follows the power-series convention: ``p[i]`` is 0 for every index
outside the stored range, negative indices included.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import (BothZero, DivisionByZeroPoly, DuplicateAbscissa,
                     ModulusMismatch, ParseError)
from .field import FieldElement, PrimeField

NEG_INF = -math.inf


def _strip(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[int | FieldElement] = ()):
        r = field.modulus
        out = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise ModulusMismatch(f"{c.field} coefficient in {field} polynomial")
                c = c.value
            out.append(c % r)
        self.field = field
        self.coeffs = _strip(out)

    @classmethod
    def _raw(cls, field: PrimeField, coeffs: list[int]) -> Polynomial:
        # coeffs must already be canonical
        p = object.__new__(cls)
        p.field = field
        p.coeffs = _strip(coeffs)
        return p

    @classmethod
    def zero(cls, field: PrimeField) -> Polynomial:
        return cls._raw(field, [])

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> Polynomial:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: PrimeField, n: int, c: int = 1) -> Polynomial:
        return cls(field, [0] * n + [c])

    @classmethod
    def from_roots(cls, field: PrimeField, roots: Iterable[int]) -> Polynomial:
        p = cls.constant(field, 1)
        for x in roots:
            p = p * cls(field, [-int(x), 1])
        return p

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coeff(self, i: int) -> FieldElement:
        return FieldElement(self[i], self.field)

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return self.lead == 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == _strip([other % self.field.modulus])
        return NotImplemented

    def __hash__(self):
        return hash((self.field.modulus, self.coeffs))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)}, {self.field})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic ------------------------------------------------------

    def _other(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ModulusMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return Polynomial(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        r = self.field.modulus
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % r
        return Polynomial._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        r = self.field.modulus
        return Polynomial._raw(self.field, [(-c) % r for c in self.coeffs])

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self.scale(other)
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial.zero(self.field)
        r = self.field.modulus
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial._raw(self.field, [c % r for c in out])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int | FieldElement) -> Polynomial:
        if isinstance(c, FieldElement):
            c = self._other(c)[0]
        r = self.field.modulus
        c %= r
        return Polynomial._raw(self.field, [x * c % r for x in self.coeffs])

    def monic(self) -> Polynomial:
        if not self.coeffs:
            raise DivisionByZeroPoly("zero polynomial has no monic multiple")
        return self.scale(self.field.inv(self.lead))

    def __divmod__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return divrem(self, o)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def eval(self, x: int) -> int:
        r = self.field.modulus
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x + c) % r
        return y

    def __call__(self, x):
        if isinstance(x, FieldElement):
            return FieldElement(self.eval(self._other(x)[0]), self.field)
        return self.eval(x)

    def shift(self, c: int) -> Polynomial:
        """The polynomial ``x -> self(x + c)`` (Horner with ``x + c``)."""
        r = self.field.modulus
        c %= r
        out: list[int] = []
        for a in reversed(self.coeffs):
            # out <- out * (x + c) + a
            nxt = [0] * (len(out) + 1)
            for i, o in enumerate(out):
                nxt[i + 1] += o
                nxt[i] += o * c
            nxt[0] += a
            out = [v % r for v in nxt]
        return Polynomial._raw(self.field, out)

    def derivative(self) -> Polynomial:
        r = self.field.modulus
        return Polynomial._raw(self.field, [i * c % r for i, c in enumerate(self.coeffs)][1:])


def divrem(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder with ``a = q*b + rem`` and ``deg rem < deg b``."""
    if a.field != b.field:
        raise ModulusMismatch(f"{a.field} vs {b.field}")
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    F = a.field
    r = F.modulus
    db = len(b.coeffs) - 1
    rem = list(a.coeffs)
    if len(rem) <= db:
        return Polynomial.zero(F), a
    inv_lead = F.inv(b.lead)
    bc = b.coeffs
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * inv_lead % r
        quot[k] = c
        if c:
            for j in range(db + 1):
                rem[k + j] = (rem[k + j] - c * bc[j]) % r
    return Polynomial._raw(F, quot), Polynomial._raw(F, rem[:db])


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, s, t)`` with ``g`` monic and ``s*a + t*b = g``."""
    if not a and not b:
        raise BothZero("xgcd(0, 0) is undefined")
    F = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.constant(F, 1), Polynomial.zero(F)
    t0, t1 = Polynomial.zero(F), Polynomial.constant(F, 1)
    while r1:
        q, rem = divrem(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = F.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def interpolate_distinct(field: PrimeField,
                         points: Sequence[tuple[int | FieldElement, int | FieldElement]]) -> Polynomial:
    """Lagrange interpolant of degree < len(points) through distinct abscissas."""
    if not points:
        raise ValueError("need at least one point")
    r = field.modulus
    xs = [int(x) % r for x, _ in points]
    ys = [int(y) % r for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"repeated x-coordinate among {xs}")
    result = Polynomial.zero(field)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Polynomial.constant(field, 1)
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial._raw(field, [(-xj) % r, 1])
                denom = denom * (xi - xj) % r
        result = result + basis.scale(yi * field.inv(denom))
    return result


def resultant(a: Polynomial, b: Polynomial) -> int:
    """Res(a, b) by the Euclidean algorithm."""
    F = a.field
    r = F.modulus
    if not a or not b:
        return 0
    res = 1
    while len(b.coeffs) > 1:
        da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
        rem = a % b
        if not rem:
            return 0
        dr = len(rem.coeffs) - 1
        if da * db % 2:
            res = -res
        res = res * pow(b.lead, da - dr, r) % r
        a, b = b, rem
    return res * pow(b.lead, len(a.coeffs) - 1, r) % r


def discriminant(f: Polynomial) -> int:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f), for deg f = n >= 1."""
    n = len(f.coeffs) - 1
    if n < 1:
        raise ValueError("discriminant needs a non-constant polynomial")
    F = f.field
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res * F.inv(f.lead) % F.modulus


_POLY_RE = re.compile(r"^\s*\[\s*([0-9\s,]*?)\s*\]\s*$")


def parse_coeff_list(text: str) -> list[int]:
    """Parse ``[c0,c1,...]`` into a list of non-negative integers."""
    m = _POLY_RE.match(text)
    if not m:
        raise ParseError(f"not a coefficient list: {text!r}")
    body = m.group(1).strip()
    if not body:
        return []
    try:
        return [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ParseError(f"bad coefficient in {text!r}") from None


def parse_poly(field: PrimeField, text: str) -> Polynomial:
    coeffs = parse_coeff_list(text)
    for c in coeffs:
        if c >= field.modulus:
            raise ParseError(f"coefficient {c} not reduced mod {field.modulus}")
    return Polynomial(field, coeffs)


def format_poly(p: Polynomial, pad_to: int = 0) -> str:
    coeffs = list(p.coeffs) + [0] * max(0, pad_to - len(p.coeffs))
    return "[" + ",".join(str(c) for c in coeffs) + "]"
