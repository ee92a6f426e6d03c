"""Prime field arithmetic over F_r for odd primes r < 2**63.

Two layers live here.  :class:`PrimeField` carries the modulus and offers
integer-level helpers (``inv``, ``sqrt``) that the polynomial and group-law
code calls in its inner loops on plain ``int`` residues.  :class:`FieldElement`
is the value type used at API boundaries; it always holds a canonical residue
in ``[0, r)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ModulusMismatch, ZeroInverse

MAX_MODULUS = 1 << 63

# Deterministic for n < 3.3e24, which covers every admissible modulus.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve prime bases."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_r.  Construction validates that ``r`` is an odd prime."""

    modulus: int

    def __post_init__(self):
        r = self.modulus
        if not isinstance(r, int) or isinstance(r, bool):
            raise TypeError(f"modulus must be an int, got {type(r).__name__}")
        if not 3 <= r < MAX_MODULUS:
            raise ValueError(f"modulus must satisfy 3 <= r < 2**63, got {r}")
        if r % 2 == 0 or not is_probable_prime(r):
            raise ValueError(f"modulus {r} is not an odd prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.modulus, self)

    def __repr__(self):
        return f"GF({self.modulus})"

    # -- integer-level helpers (arguments and results are canonical ints) --

    def inv(self, a: int) -> int:
        a %= self.modulus
        if a == 0:
            raise ZeroInverse(f"0 has no inverse mod {self.modulus}")
        return pow(a, -1, self.modulus)

    def is_square(self, a: int) -> bool:
        r = self.modulus
        a %= r
        return a == 0 or pow(a, (r - 1) // 2, r) == 1

    @cached_property
    def _nonresidue(self) -> int:
        r = self.modulus
        z = 2
        while pow(z, (r - 1) // 2, r) != r - 1:
            z += 1
        return z

    def sqrt(self, a: int) -> int | None:
        """Tonelli-Shanks square root; returns the smaller root or ``None``."""
        r = self.modulus
        a %= r
        if a == 0:
            return 0
        if pow(a, (r - 1) // 2, r) != 1:
            return None
        if r % 4 == 3:
            s = pow(a, (r + 1) // 4, r)
        else:
            q, e = r - 1, 0
            while q % 2 == 0:
                q //= 2
                e += 1
            m = e
            c = pow(self._nonresidue, q, r)
            t = pow(a, q, r)
            s = pow(a, (q + 1) // 2, r)
            while t != 1:
                i, t2 = 0, t
                while t2 != 1:
                    t2 = t2 * t2 % r
                    i += 1
                b = pow(c, 1 << (m - i - 1), r)
                m = i
                c = b * b % r
                t = t * c % r
                s = s * b % r
        return min(s, r - s)


@dataclass(frozen=True, slots=True)
class FieldElement:
    """A canonical residue of F_r."""

    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.modulus:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.field.modulus}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ModulusMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _new(self, value: int) -> FieldElement:
        return FieldElement(value % self.field.modulus, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.value * self.field.inv(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o * self.field.inv(self.value))

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self._new(pow(self.field.inv(self.value), -e, self.field.modulus))
        return self._new(pow(self.value, e, self.field.modulus))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.field.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.modulus))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.field.modulus})"

    def __str__(self):
        return str(self.value)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def sqrt(self) -> FieldElement | None:
        s = self.field.sqrt(self.value)
        return None if s is None else FieldElement(s, self.field)

    def is_square(self) -> bool:
        return self.field.is_square(self.value)


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def sqrt(a: FieldElement) -> FieldElement | None:
    return a.sqrt()
