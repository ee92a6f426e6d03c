"""Explicit rational formulas for addition on the chart Z.

An addition runs three stages:

``interpolate``
    Find p/q with deg p = a, deg q = b passing through both input divisors,
    i.e. p - q*v = 0 mod u and p - q*v' = 0 mod u'.  The reduction modulo u
    is written through the kappa/lambda coefficients, which gives a g x g
    linear system for (p_g..p_a, q_1..q_b) after fixing q_0.
``compose_u``
    p^2 - f*q^2 = rho * u * u' * u''.  The low coefficients of both sides
    determine the monic u'' by product inversion against omega = u*u'.
``compose_v``
    p + q*v'' = 0 mod u'' gives the (Q + T) system for v''.

Every stage raises a :class:`~hyperjac.errors.DegenerateError` subclass when
its denominator vanishes and checks its defining identity exactly on success.
Nothing here repairs degeneracy; :func:`add_translated` and :func:`double` are
the separate workarounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import (CurveMismatch, DegenerateError, InvariantViolation,
                     NotOnZ, RetriesExhausted, SharedSupport, SingularM,
                     SingularQT, ZeroOmega, ZeroRho)
from .kernels import product_inversion_series, reduction_weights
from .linalg import LinearSystem, SingularMatrix
from .mumford import MumfordDivisor, random_divisor
from .poly import Polynomial, gcd
from .rng import SplitMix64

SOLVERS = ("gauss", "cramer")


@dataclass(frozen=True)
class GenusProfile:
    """Degree bookkeeping for genus g.

    ``a = deg p``, ``b = deg q``, ``d = a - g`` is the reduction order and
    ``eps`` the parity of g.
    """

    g: int

    @property
    def eps(self) -> int:
        return self.g % 2

    @property
    def a(self) -> int:
        return (3 * self.g - self.eps) // 2

    @property
    def b(self) -> int:
        return (self.g - 2 + self.eps) // 2

    @property
    def d(self) -> int:
        return (self.g - self.eps) // 2


@lru_cache(maxsize=None)
def profile(g: int) -> GenusProfile:
    return GenusProfile(g)


@dataclass(frozen=True)
class Interpolant:
    """The rational function p/q, meaningful up to a common scalar."""

    p: Polynomial
    q: Polynomial

    def scaled(self, t: int) -> Interpolant:
        return Interpolant(self.p.scale(t), self.q.scale(t))

    def normalized(self) -> Interpolant:
        """Representative with q_0 = 1."""
        return self.scaled(self.q.field.inv(self.q[0]))


# -- kappa / lambda -------------------------------------------------------

def _kappa_weights(u: Polynomial, prof: GenusProfile) -> list[int]:
    # weight s -> u_(a-d-s) = u_(g-s)
    return reduction_weights(u, prof.a, prof.d, prof.d)


def _kappa_from_weights(u: Polynomial, prof: GenusProfile, c: list[int], i: int, ell: int) -> int:
    d = prof.d
    return sum(u[i - d + m] * c[m - ell] for m in range(max(ell, 0), d + 1)) % u.field.modulus


def kappa(u: Polynomial, prof: GenusProfile, i: int, ell: int) -> int:
    """kappa_(i,l) = sum_(l<=m<=d) u_(i-d+m) * sum_(S_(m-l)) (-1)^|s| prod u_(g-s_r)."""
    return _kappa_from_weights(u, prof, _kappa_weights(u, prof), i, ell)


def kappa_table(u: Polynomial, prof: GenusProfile) -> list[list[int]]:
    """Rows i = 0..g-1, columns l = 0..d."""
    c = _kappa_weights(u, prof)
    return [[_kappa_from_weights(u, prof, c, i, ell) for ell in range(prof.d + 1)]
            for i in range(prof.g)]


def lambda_coeff(u: Polynomial, v: Polynomial, prof: GenusProfile, i: int, j: int,
                 kap: list[list[int]] | None = None) -> int:
    """lambda_(i,j) = -v_(i-j) + sum_(0<=l<=d) v_(a-j-l) * kappa_(i,l)."""
    r = u.field.modulus
    a = prof.a
    if kap is not None and 0 <= i < len(kap):
        row = kap[i]
    else:
        row = [kappa(u, prof, i, ell) for ell in range(prof.d + 1)]
    total = -v[i - j]
    for ell, k in enumerate(row):
        total += v[a - j - ell] * k
    return total % r


def lambda_table(u: Polynomial, v: Polynomial, prof: GenusProfile,
                 kap: list[list[int]]) -> list[list[int]]:
    """Rows i = 0..g-1, columns j = 0..b."""
    return [[lambda_coeff(u, v, prof, i, j, kap) for j in range(prof.b + 1)]
            for i in range(prof.g)]


# -- stage 1: interpolation ---------------------------------------------

def interpolation_system(D: MumfordDivisor, D2: MumfordDivisor
                         ) -> tuple[LinearSystem, list[list[int]], list[list[int]]]:
    """The system M x = rhs for x = (p_g..p_a, q_1..q_b) / q_0.

    Also returns the kappa and lambda tables of ``D``, which recover the low
    coefficients p_0..p_(g-1).
    """
    prof = profile(D.genus)
    g, b, d = prof.g, prof.b, prof.d
    r = D.curve.modulus
    K1 = kappa_table(D.u, prof)
    K2 = kappa_table(D2.u, prof)
    L1 = lambda_table(D.u, D.v, prof, K1)
    L2 = lambda_table(D2.u, D2.v, prof, K2)
    matrix = []
    rhs = []
    for i in range(g):
        row = [(K1[i][ell] - K2[i][ell]) % r for ell in range(d, -1, -1)]
        row += [(L2[i][j] - L1[i][j]) % r for j in range(1, b + 1)]
        matrix.append(row)
        rhs.append((L1[i][0] - L2[i][0]) % r)
    return LinearSystem(D.curve.field, matrix, rhs), K1, L1


def interpolate(D: MumfordDivisor, D2: MumfordDivisor, solver: str = "gauss") -> Interpolant:
    """The interpolant p/q through D and D'.

    With ``solver="gauss"`` the result is normalized to q_0 = 1; with
    ``solver="cramer"`` the coefficients are the raw determinants
    (q_0 = det M), which differ from the former by the scalar det M.
    """
    if D.curve != D2.curve:
        raise CurveMismatch("divisors live on different curves")
    if solver not in SOLVERS:
        raise ValueError(f"solver must be one of {SOLVERS}")
    F = D.curve.field
    r = F.modulus
    prof = profile(D.genus)
    g, a, b, d = prof.g, prof.a, prof.b, prof.d

    # Equal u makes every kappa column of M vanish, so that case (doubling
    # included) is reported as SingularM below rather than SharedSupport.
    if D.u != D2.u and gcd(D.u, D2.u).degree > 0:
        raise SharedSupport("gcd(u, u') != 1")

    system, K1, L1 = interpolation_system(D, D2)
    if solver == "gauss":
        try:
            x = system.solve()
        except SingularMatrix as exc:
            raise SingularM(f"rank(M) = {exc.rank} < {g}") from None
        q0 = 1
    else:
        q0, x = system.cramer()
        if q0 == 0:
            raise SingularM(f"det(M) = 0 (rank {system.rank()} < {g})")

    p = [0] * (a + 1)
    q = [0] * (b + 1)
    q[0] = q0
    for t in range(d + 1):
        p[g + t] = x[t]
    for j in range(1, b + 1):
        q[j] = x[d + j]
    for i in range(g):
        acc = sum(p[a - ell] * K1[i][ell] for ell in range(d + 1))
        acc -= sum(q[j] * L1[i][j] for j in range(1, b + 1))
        acc -= q0 * L1[i][0]
        p[i] = acc % r
    interp = Interpolant(Polynomial(F, p), Polynomial(F, q))

    P, Q = interp.p, interp.q
    if (P - Q * D.v) % D.u or (P - Q * D2.v) % D2.u:
        raise InvariantViolation("interpolant does not pass through both divisors")
    return interp


# -- stage 2: u'' -----------------------------------------------------------

def rho(curve, interp: Interpolant) -> int:
    """Leading coefficient of p^2 - f q^2 at degree 3g."""
    prof = profile(curve.genus)
    eps = prof.eps
    r = curve.modulus
    pa = interp.p[prof.a]
    qb = interp.q[prof.b]
    return (pa * pa * (1 - eps) - curve.f[2 * prof.g + 1] * qb * qb * eps) % r


def norm_poly(curve, interp: Interpolant) -> Polynomial:
    """p^2 - f q^2; its coefficients are the eta_k."""
    p, q = interp.p, interp.q
    return p * p - curve.f * (q * q)


def compose_u(curve, D: MumfordDivisor, D2: MumfordDivisor, interp: Interpolant) -> Polynomial:
    """Monic u'' of degree g with p^2 - f q^2 = rho * u * u' * u''."""
    F = curve.field
    r = F.modulus
    g = curve.genus
    omega = D.u * D2.u
    if omega[0] == 0:
        raise ZeroOmega("omega_0 = u_0 * u'_0 = 0 (an x-coordinate is 0)")
    rh = rho(curve, interp)
    if rh == 0:
        raise ZeroRho("rho = 0 (leading coefficient of p^2 - f q^2 vanishes)")
    eta = norm_poly(curve, interp)
    # eta_k / rho = sum_j u''_j omega_(k-j); invert the product.
    coeffs = product_inversion_series(eta.scale(F.inv(rh)), omega, g)
    u2 = Polynomial(F, coeffs)
    if u2.degree != g or not u2.is_monic():
        raise InvariantViolation(f"u'' = {u2!r} is not monic of degree {g}")
    if eta != omega * u2 * rh:
        raise InvariantViolation("p^2 - f q^2 != rho * u * u' * u''")
    return u2


# -- stage 3: v'' -----------------------------------------------------------

def vsystem(curve, interp: Interpolant, u2: Polynomial) -> LinearSystem:
    """The (Q + T) v'' = mu system."""
    F = curve.field
    r = F.modulus
    prof = profile(curve.genus)
    g, a, d, eps = prof.g, prof.a, prof.d, prof.eps
    p, q = interp.p, interp.q
    K = kappa_table(u2, prof)
    matrix = [[q[i - j] for j in range(g)] for i in range(g)]
    for i in range(g):
        for s in range(d + 1, g):
            tau = 0
            for m in range(g + 1 - eps, d + s + 1):
                tau -= q[a - m] * K[i][m - s]
            matrix[i][s] = (matrix[i][s] + tau) % r
    mu = [(-p[i] + sum(p[a - ell] * K[i][ell] for ell in range(d + 1))) % r for i in range(g)]
    return LinearSystem(F, matrix, mu)


def compose_v(curve, interp: Interpolant, u2: Polynomial, solver: str = "gauss") -> Polynomial:
    """v'' of degree < g with p + q v'' = 0 mod u''."""
    if solver not in SOLVERS:
        raise ValueError(f"solver must be one of {SOLVERS}")
    F = curve.field
    g = curve.genus
    system = vsystem(curve, interp, u2)
    if solver == "gauss":
        try:
            coeffs = system.solve()
        except SingularMatrix as exc:
            raise SingularQT(f"rank(Q+T) = {exc.rank} < {g}") from None
    else:
        det, dets = system.cramer()
        if det == 0:
            raise SingularQT(f"det(Q+T) = 0 (rank {system.rank()} < {g})")
        inv = F.inv(det)
        coeffs = [x * inv for x in dets]
    v2 = Polynomial(F, coeffs)
    if (interp.p + interp.q * v2) % u2:
        raise InvariantViolation("p + q v'' is not divisible by u''")
    return v2


# -- the group operations -------------------------------------------------

def add(D: MumfordDivisor, D2: MumfordDivisor, solver: str = "gauss") -> MumfordDivisor:
    """[D] + [D'] by the explicit formulas; raises DegenerateError off the open set."""
    if D.curve != D2.curve:
        raise CurveMismatch("divisors live on different curves")
    curve = D.curve
    interp = interpolate(D, D2, solver)
    u2 = compose_u(curve, D, D2, interp)
    v2 = compose_v(curve, interp, u2, solver)
    try:
        return MumfordDivisor(curve, u2, v2)
    except NotOnZ:
        raise InvariantViolation("explicit sum is not on Z") from None


def negate(D: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(D.curve, D.u, -D.v)


class TranslatedSum(NamedTuple):
    divisor: MumfordDivisor
    shift: int
    retries: int


def _translate(D: MumfordDivisor, curve, c: int) -> MumfordDivisor:
    return MumfordDivisor(curve, D.u.shift(c), D.v.shift(c))


def add_translated_detail(D: MumfordDivisor, D2: MumfordDivisor, max_retries: int = 8,
                          seed: int = 0, solver: str = "gauss") -> TranslatedSum:
    """:func:`add`, retried on x -> x + c translated curves when omega_0 = 0.

    The substitution x -> x + c is a curve isomorphism fixing infinity, so the
    sum computed on the translated curve maps back to the true sum.
    """
    try:
        return TranslatedSum(add(D, D2, solver), 0, 0)
    except ZeroOmega as exc:
        last: DegenerateError = exc
    curve = D.curve
    r = curve.modulus
    rng = SplitMix64(seed)
    for attempt in range(1, max_retries + 1):
        c = 1 + rng.randbelow(r - 1)
        shifted = curve.translate(c)
        try:
            S = add(_translate(D, shifted, c), _translate(D2, shifted, c), solver)
        except ZeroOmega as exc:
            last = exc
            continue
        return TranslatedSum(_translate(S, curve, -c), c, attempt)
    raise RetriesExhausted(f"omega_0 = 0 after {max_retries} translations", last)


def add_translated(D: MumfordDivisor, D2: MumfordDivisor, max_retries: int = 8,
                   seed: int = 0, solver: str = "gauss") -> MumfordDivisor:
    return add_translated_detail(D, D2, max_retries, seed, solver).divisor


def double(D: MumfordDivisor, dummy_seed: int = 0, max_attempts: int = 16,
           solver: str = "gauss") -> MumfordDivisor:
    """2[D] as (([D] + [E]) + [D]) - [E] for a random dummy class E."""
    rng = SplitMix64(dummy_seed)
    last: Exception | None = None
    for _ in range(max_attempts):
        E = random_divisor(D.curve, rng.fork(), require_nonzero_x=True)
        try:
            S = add(D, E, solver)
            S = add(S, D, solver)
            return add(S, negate(E), solver)
        except DegenerateError as exc:
            last = exc
    raise RetriesExhausted(f"dummy-divisor doubling failed {max_attempts} times", last)
