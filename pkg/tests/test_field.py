import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperjac.errors import ModulusMismatch, ZeroInverse
from hyperjac.field import FieldElement, PrimeField, inv, is_probable_prime, sqrt

from conftest import P62

# 3 mod 4, 1 mod 4 with large 2-adic valuation, and a 62-bit prime
MODULI = [7, 10007, 97, 7681, 998244353, P62]


def test_inv_examples(F7):
    assert inv(F7(3)) == F7(5)
    assert inv(F7(1)) == F7(1)
    with pytest.raises(ZeroInverse):
        inv(F7(0))


def test_sqrt_examples(F7):
    assert sqrt(F7(2)) == F7(3)
    assert sqrt(F7(0)) == F7(0)
    assert sqrt(F7(3)) is None


def test_ring_examples(F7):
    assert F7(3) + F7(5) == F7(1)
    assert F7(3) * F7(5) == F7(1)
    assert -F7(0) == F7(0)
    assert (-F7(0)).value == 0
    assert F7(3) - 5 == F7(5)
    assert F7(3) ** 6 == 1
    assert F7(3) ** -1 == F7(5)
    assert F7(6) / F7(3) == F7(2)


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        PrimeField(7)(1) + PrimeField(11)(1)


@pytest.mark.parametrize("bad", [2, 9, 15, 1, 0, -7, 1 << 63, (1 << 61) - 1 + 2])
def test_rejects_bad_moduli(bad):
    with pytest.raises((ValueError, TypeError)):
        PrimeField(bad)


def test_accepts_large_prime():
    assert PrimeField(P62).modulus == P62
    assert PrimeField((1 << 61) - 1).modulus == (1 << 61) - 1


def test_canonical_residue_enforced(F7):
    with pytest.raises(ValueError):
        FieldElement(7, F7)
    assert F7(-1).value == 6
    assert F7(15).value == 1


def test_primality_matches_trial_division():
    def trial(n):
        return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))
    assert [n for n in range(5000) if is_probable_prime(n)] == [n for n in range(5000) if trial(n)]


def test_primality_matches_sympy_on_large_numbers():
    sympy = pytest.importorskip("sympy")
    import random
    rnd = random.Random(1)
    for _ in range(300):
        n = rnd.randrange(1 << 40, 1 << 63) | 1
        assert is_probable_prime(n) == sympy.isprime(n)
    # strong pseudoprimes to several small bases
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321):
        assert not is_probable_prime(n)


@pytest.mark.parametrize("r", [7, 13, 17, 97, 257, 7681])
def test_sqrt_exhaustive_small_fields(r):
    F = PrimeField(r)
    squares = {x * x % r for x in range(r)}
    for a in range(r):
        s = F.sqrt(a)
        if a in squares:
            assert s is not None and s * s % r == a and s <= r - s
        else:
            assert s is None


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(MODULI), st.integers(min_value=1))
def test_inverse_properties(r, a):
    F = PrimeField(r)
    x = F(a)
    if x.value == 0:
        return
    assert x * x.inverse() == 1
    assert x.inverse().inverse() == x


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(MODULI), st.integers(min_value=0))
def test_sqrt_matches_euler_criterion(r, a):
    F = PrimeField(r)
    x = F(a)
    s = x.sqrt()
    nonresidue = pow(x.value, (r - 1) // 2, r) == r - 1
    assert (s is None) == nonresidue
    if s is not None:
        assert s * s == x


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(MODULI), st.integers(), st.integers(), st.integers())
def test_field_axioms(r, a, b, c):
    F = PrimeField(r)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0
    assert 0 <= (x * y).value < r
