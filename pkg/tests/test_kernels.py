import random

import pytest

from hyperjac.errors import NegativeExponentResidue, NOutOfRange, ZeroConstantTerm
from hyperjac.field import PrimeField
from hyperjac.kernels import (compositions, product_inversion, product_inversion_series,
                              reduction_coefficient, reduction_iterative, reduction_weights,
                              signed_composition_sums)
from hyperjac.poly import Polynomial, divrem

F = PrimeField(10007)


def rand_poly(rnd, deg, monic=False):
    c = [rnd.randrange(F.modulus) for _ in range(deg + 1)]
    if monic:
        c[-1] = 1
    return Polynomial(F, c)


def test_composition_examples():
    assert compositions(0) == ((),)
    assert compositions(1) == ((1,),)
    assert compositions(3) == ((1, 1, 1), (1, 2), (2, 1), (3,))


@pytest.mark.parametrize("n", range(1, 13))
def test_composition_counts(n):
    comps = compositions(n)
    assert len(comps) == 2 ** (n - 1)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == n and min(c) >= 1 for c in comps)
    assert list(comps) == sorted(comps)


@pytest.mark.parametrize("n", [-1, 25])
def test_composition_range_guard(n):
    with pytest.raises(NOutOfRange):
        compositions(n)


def test_signed_sums_match_recurrence():
    # Independent oracle: c_0 = 1, c_m = -sum_{k=1..m} w(k) c_{m-k}.
    rnd = random.Random(0)
    r = F.modulus
    for _ in range(50):
        w = [0] + [rnd.randrange(r) for _ in range(10)]
        expected = [1]
        for m in range(1, 11):
            expected.append(-sum(w[k] * expected[m - k] for k in range(1, m + 1)) % r)
        assert signed_composition_sums(lambda s: w[s], 10, r) == expected


def test_reduction_examples(F7):
    alpha = Polynomial(F7, [6, 0, 0, 1])   # x^3 - 1
    beta = Polynomial(F7, [5, 1])          # x + 5
    for i in range(-2, 6):
        assert reduction_coefficient(alpha, beta, 0, 3, -1, i) == alpha[i]
    assert reduction_iterative(alpha, beta, 0, 3, -1) == alpha
    assert reduction_coefficient(alpha, beta, 2, 3, 2, 0) == 0
    assert reduction_iterative(alpha, beta, 2, 3, 2) == 0


def test_reduction_one_step_of_identical_monic():
    rnd = random.Random(1)
    for k in range(1, 8):
        alpha = rand_poly(rnd, k, monic=True)
        beta = Polynomial(F, alpha.coeffs)
        for i in range(k):
            assert reduction_coefficient(alpha, beta, 0, k, 0, i) == (alpha[i] - beta[i]) % F.modulus


def test_reduction_closed_form_matches_iterative():
    rnd = random.Random(2)
    for _ in range(500):
        k = rnd.randint(0, 20)
        alpha = rand_poly(rnd, rnd.randint(0, 20))
        beta = rand_poly(rnd, rnd.randint(0, 12))
        d = rnd.randint(0, 10)
        n = rnd.randint(-1, d)              # keeps every exponent non-negative
        it = reduction_iterative(alpha, beta, d, k, n)
        c = reduction_weights(beta, k, d, max(n, 0))
        for i in range(k + 1):
            assert reduction_coefficient(alpha, beta, d, k, n, i, c) == it[i]
            assert reduction_coefficient(alpha, beta, d, k, n, i) == it[i]


def test_reduction_remainder_case_matches_divrem():
    rnd = random.Random(3)
    for _ in range(500):
        d = rnd.randint(0, 10)
        k = d + rnd.randint(1, 10)
        alpha = rand_poly(rnd, k)
        beta = rand_poly(rnd, k - d, monic=True)
        rem = divrem(alpha, beta)[1]
        assert reduction_iterative(alpha, beta, d, k, d) == rem
        c = reduction_weights(beta, k, d, d)
        assert [reduction_coefficient(alpha, beta, d, k, d, i, c) for i in range(k - d)] == \
            [rem[i] for i in range(k - d)]


def test_negative_exponent_residue_detected(F7):
    alpha = Polynomial(F7, [0, 0, 1])
    beta = Polynomial(F7, [1, 1])
    # A_0 = x^2 - x - 1; step 1 adds x^(-1) * (1 + x), leaving x^(-1)
    with pytest.raises(NegativeExponentResidue):
        reduction_iterative(alpha, beta, 0, 2, 1)


def test_product_inversion_examples(F7):
    alpha = Polynomial(F7, [1, 2, 1])
    gamma = Polynomial(F7, [1, 1])
    assert [product_inversion(alpha, gamma, k) for k in range(3)] == [1, 1, 0]
    assert product_inversion(Polynomial(F7, [2]), Polynomial(F7, [2]), 0) == 1
    with pytest.raises(ZeroConstantTerm):
        product_inversion(alpha, Polynomial(F7, [0, 1]), 1)


def test_product_inversion_matches_division():
    rnd = random.Random(4)
    for _ in range(500):
        beta = rand_poly(rnd, rnd.randint(0, 10))
        gamma = rand_poly(rnd, rnd.randint(0, 10))
        if gamma[0] == 0:
            continue
        alpha = beta * gamma
        q, r = divrem(alpha, gamma)
        assert r == 0 and q == beta
        top = max(int(beta.degree), 0) if beta else 0
        assert product_inversion_series(alpha, gamma, top) == [beta[k] for k in range(top + 1)]
        k = rnd.randint(0, top)
        assert product_inversion(alpha, gamma, k) == beta[k]
