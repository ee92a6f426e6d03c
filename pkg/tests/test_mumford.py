import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperjac.curve import AffinePoint, Curve, random_curve
from hyperjac.errors import (CurveMismatch, DuplicateX, NotOnZ, ParseError, PointOffCurve,
                             ShapeError)
from hyperjac.field import PrimeField
from hyperjac.mumford import (MumfordDivisor, equals, format_divisor, from_points, is_on_Z,
                              parse_divisor, random_divisor)
from hyperjac.poly import Polynomial

F10007 = PrimeField(10007)


@pytest.fixture
def g2_curve():
    # f(1) = f(2) = 2 = 3^2 mod 7
    return Curve.from_coeffs(7, 2, [4, 4, 0, 0, 0, 1])


def test_from_points_examples(e7, g2_curve, F7):
    D = from_points(e7, [AffinePoint(2, 3)])
    assert D.u == Polynomial(F7, [5, 1]) and D.v == Polynomial(F7, [3])
    D2 = from_points(g2_curve, [AffinePoint(2, 3), AffinePoint(1, 3)])
    assert D2.u == Polynomial(F7, [2, 4, 1]) and D2.v == Polynomial(F7, [3])
    with pytest.raises(DuplicateX):
        from_points(g2_curve, [AffinePoint(2, 3), AffinePoint(2, 4)])
    with pytest.raises(PointOffCurve):
        from_points(e7, [AffinePoint(2, 2)])
    with pytest.raises(ShapeError):
        from_points(g2_curve, [AffinePoint(2, 3)])


def test_is_on_Z_examples(e7, F7):
    res = is_on_Z(e7, Polynomial(F7, [5, 1]), Polynomial(F7, [3]))
    assert res.on_z and res.w == Polynomial(F7, [4, 2, 1])
    assert not is_on_Z(e7, Polynomial(F7, [5, 1]), Polynomial(F7, [0]))
    with pytest.raises(ShapeError):
        is_on_Z(e7, Polynomial(F7, [1, 0, 1]), Polynomial(F7, [3]))
    with pytest.raises(ShapeError):
        is_on_Z(e7, Polynomial(F7, [5, 2]), Polynomial(F7, [3]))
    with pytest.raises(ShapeError):
        is_on_Z(e7, Polynomial(F7, [5, 1]), Polynomial(F7, [3, 1]))
    with pytest.raises(NotOnZ):
        MumfordDivisor(e7, Polynomial(F7, [5, 1]), Polynomial(F7, [0]))


def test_equals_examples(e7, F7):
    D = from_points(e7, [AffinePoint(2, 3)])
    assert equals(D, D)
    assert not equals(D, from_points(e7, [AffinePoint(2, 4)]))
    other = MumfordDivisor(e7, Polynomial(F7, [6, 1]), Polynomial(F7, [3]))
    assert not equals(D, other)
    with pytest.raises(CurveMismatch):
        equals(D, random_divisor(random_curve(F10007, 1, 0), 0))


def test_random_divisor_contract():
    for g in range(1, 9):
        C = random_curve(F10007, g, 10 + g)
        for seed in range(20):
            D = random_divisor(C, seed, require_nonzero_x=True)
            assert is_on_Z(C, D.u, D.v).on_z
            assert D.u[0] != 0
            assert random_divisor(C, seed, require_nonzero_x=True) == D


def _roots(u):
    r = u.field.modulus
    return [x for x in range(r) if u.eval(x) == 0]


def test_points_read_back_from_split_u():
    F = PrimeField(101)
    for g in (1, 2, 3, 4):
        C = random_curve(F, g, g)
        for seed in range(10):
            D = random_divisor(C, seed)
            xs = _roots(D.u)
            assert len(xs) == g
            for x in xs:
                y = D.v.eval(x)
                assert y * y % 101 == C.f.eval(x)
            assert from_points(C, [AffinePoint(x, D.v.eval(x)) for x in xs]) == D


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2 ** 64 - 1))
def test_coefficient_identities_hold(g, seed):
    C = random_curve(F10007, g, g)
    D = random_divisor(C, seed)
    res = is_on_Z(C, D.u, D.v)
    w = res.w
    assert w.degree == g + 1 and w.is_monic()
    assert C.f - D.v * D.v == D.u * w
    r = C.modulus
    for i in range(2 * g + 2):
        lhs = C.f[i] - sum(D.v[j] * D.v[i - j] for j in range(i + 1))
        rhs = sum(D.u[j] * w[i - j] for j in range(i + 1))
        assert (lhs - rhs) % r == 0


def test_text_round_trip(e7, g2_curve):
    D = from_points(e7, [AffinePoint(2, 3)])
    assert format_divisor(D) == "u=[5,1]; v=[3]"
    assert parse_divisor(e7, "u=[5,1]; v=[3]") == D
    D2 = from_points(g2_curve, [AffinePoint(2, 3), AffinePoint(1, 3)])
    assert format_divisor(D2) == "u=[2,4,1]; v=[3,0]"
    assert parse_divisor(g2_curve, " u = [2,4,1] ; v=[3] ") == D2
    for bad in ("u=[5,1]", "v=[3]; u=[5,1]", "u=5,1; v=3"):
        with pytest.raises(ParseError):
            parse_divisor(e7, bad)
    with pytest.raises(NotOnZ):
        parse_divisor(e7, "u=[5,1]; v=[0]")
