"""Closed-form coefficient formulas indexed by integer compositions.

Two formulas are provided, each next to an independent iterative oracle:

* :func:`reduction_coefficient` gives the i-th coefficient of the n-th iterate
  of the order-d reduction of ``alpha`` by ``beta`` at index k.  The oracle
  :func:`reduction_iterative` runs the recurrence
  ``A_n = A_{n-1} - x^(d-n) [A_{n-1}]_(k-n) beta`` on Laurent series.
* :func:`product_inversion` recovers ``beta_k`` from ``alpha = beta * gamma``
  when ``gamma_0 != 0``.  Polynomial division is its oracle.

Both closed forms reduce to the signed composition sum

    c_m = sum over sigma in S_m of (-1)^|sigma| * prod_r w(sigma_r)

for a weight function ``w``; :func:`signed_composition_sums` evaluates these
once per m so callers reuse them across every output index.
"""

from __future__ import annotations

import threading
from typing import Callable

from .errors import NegativeExponentResidue, NOutOfRange, ZeroConstantTerm
from .poly import Polynomial

MAX_COMPOSITION_N = 24

Composition = tuple[int, ...]

_compositions: dict[int, tuple[Composition, ...]] = {0: ((),)}
_lock = threading.Lock()


def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of ``n`` in lexicographic order (memoized)."""
    if not 0 <= n <= MAX_COMPOSITION_N:
        raise NOutOfRange(f"n must be in [0, {MAX_COMPOSITION_N}], got {n}")
    try:
        return _compositions[n]
    except KeyError:
        pass
    with _lock:
        for m in range(1, n + 1):
            if m not in _compositions:
                _compositions[m] = tuple((first,) + rest
                                         for first in range(1, m + 1)
                                         for rest in _compositions[m - first])
        return _compositions[n]


def signed_composition_sums(weight: Callable[[int], int], n_max: int, modulus: int) -> list[int]:
    """``[c_0, ..., c_{n_max}]`` with ``c_m`` the signed composition sum above."""
    if n_max < 0:
        return []
    w = [0] + [weight(s) % modulus for s in range(1, n_max + 1)]
    sums = []
    for m in range(n_max + 1):
        total = 0
        for sigma in compositions(m):
            prod = 1
            for part in sigma:
                prod = prod * w[part] % modulus
                if not prod:
                    break
            if prod:
                total += -prod if len(sigma) % 2 else prod
        sums.append(total % modulus)
    return sums


def reduction_weights(beta: Polynomial, k: int, d: int, n: int) -> list[int]:
    """Inner sums ``c_m`` of the reduction formula, weight ``s -> beta_(k-d-s)``."""
    return signed_composition_sums(lambda s: beta[k - d - s], n, beta.field.modulus)


def reduction_coefficient(alpha: Polynomial, beta: Polynomial, d: int, k: int, n: int, i: int,
                          weights: list[int] | None = None) -> int:
    """Coefficient ``[A_n]_i`` of the n-th iterate, by the closed form.

    ``weights`` may carry precomputed :func:`reduction_weights` for the same
    ``(beta, k, d)`` and at least ``n + 1`` entries.
    """
    r = alpha.field.modulus
    if n < 0:
        return alpha[i]
    c = weights if weights is not None else reduction_weights(beta, k, d, n)
    total = 0
    for m in range(n + 1):
        b = beta[i - d + m]
        if not b:
            continue
        inner = 0
        for ell in range(m + 1):
            inner += alpha[k - ell] * c[m - ell]
        total += b * inner
    return (alpha[i] - total) % r


def reduction_iterative(alpha: Polynomial, beta: Polynomial, d: int, k: int, n: int) -> Polynomial:
    """The iterate ``A_n`` computed step by step on Laurent series."""
    F = alpha.field
    r = F.modulus
    series = {e: c for e, c in enumerate(alpha.coeffs) if c}
    for t in range(n + 1):
        c = series.get(k - t, 0)
        if not c:
            continue
        shift = d - t
        for j, bj in enumerate(beta.coeffs):
            if bj:
                e = j + shift
                series[e] = (series.get(e, 0) - c * bj) % r
    negative = {e: c for e, c in series.items() if e < 0 and c}
    if negative:
        raise NegativeExponentResidue(f"nonzero coefficients at negative exponents {sorted(negative)}")
    top = max((e for e, c in series.items() if c), default=-1)
    return Polynomial._raw(F, [series.get(e, 0) for e in range(top + 1)])


def product_inversion_series(alpha: Polynomial, gamma: Polynomial, k_max: int) -> list[int]:
    """``[beta_0, ..., beta_{k_max}]`` for ``alpha = beta * gamma`` (closed form)."""
    F = alpha.field
    r = F.modulus
    g0 = gamma[0]
    if g0 == 0:
        raise ZeroConstantTerm("gamma_0 = 0")
    inv0 = F.inv(g0)
    c = signed_composition_sums(lambda s: gamma[s] * inv0, k_max, r)
    out = []
    for k in range(k_max + 1):
        total = 0
        for j in range(k + 1):
            total += alpha[j] * c[k - j]
        out.append(total * inv0 % r)
    return out


def product_inversion(alpha: Polynomial, gamma: Polynomial, k: int) -> int:
    """``beta_k`` for ``alpha = beta * gamma`` with ``gamma_0 != 0``."""
    if gamma[0] == 0:
        raise ZeroConstantTerm("gamma_0 = 0")
    if k < 0:
        return 0
    return product_inversion_series(alpha, gamma, k)[k]
