"""Executable claim registry.

Every numbered identity, divisibility, congruence, and conjecture over the
sequence/polynomial families is registered here as a ``Claim``: a parameter
grid plus an exact-arithmetic point checker.  Checkers return
``("ok", derived)`` / ``("fail", lhs, rhs)`` / ``("skip", reason)``; the
engine in ``verify`` turns ordered point results into reports.

Four deliberately broken variants (MUT-*) are registered alongside the real
claims; they must produce counterexamples and exist to prove the verifiers
are not vacuous.
"""
from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Callable, Iterable

from . import modular, sequences as seq
from .polynomials import (NotDivisible, Poly, ZERO, ONE, big_schroder_poly,
                          q_binomial, q_integer, s_poly, w_poly)
from .quadratic import Quadratic
from .reports import ParamRange


class NonIntegral(ArithmeticError):
    """An exact quotient that the claims guarantee to be integral was not."""

    def __init__(self, message: str, remainder):
        super().__init__(message)
        self.remainder = remainder


# ---------------------------------------------------------------------------
# Golden quotient operations
# ---------------------------------------------------------------------------

def s_quotient(n: int) -> int:
    """s(n) = (2/n) * sum_{k=1..n} (2k+1) * Motzkin(k)^2 (always an integer)."""
    if n < 1:
        raise ValueError("s_quotient: n must be >= 1")
    total = 2 * _WSUM_M.at(n)
    q, r = divmod(total, n)
    if r:
        raise NonIntegral(f"s_quotient({n}): remainder {r}", r)
    return q


def t_quotient(n: int) -> int:
    """t(n) = 6/(n^2(n^2-1)) * sum_{k=0..n-1} k(k+1)(8k+9) T_k T_{k+1}."""
    if n < 2:
        raise ValueError("t_quotient: n must be >= 2")
    total = 6 * _TT_SUM.at(n)
    q, r = divmod(total, n * n * (n * n - 1))
    if r:
        raise NonIntegral(f"t_quotient({n}): remainder {r}", r)
    return q


# ---------------------------------------------------------------------------
# Running accumulators (incremental prefix sums, cached per claim and key)
# ---------------------------------------------------------------------------

class _Acc:
    """Cached accumulator A(n) = step(A(n-1), n, key) with A(start-1) = init."""

    def __init__(self, start: int, step, init=0):
        self.start = start
        self.step = step
        self.init = init
        self._data: dict = {}
        self._lock = threading.Lock()

    def at(self, n: int, key=()):
        if n < self.start - 1:
            raise ValueError(f"accumulator index {n} below start {self.start}")
        with self._lock:
            lst = self._data.get(key)
            if lst is None:
                lst = self._data[key] = [self.init]
            while len(lst) < n - self.start + 2:
                m = self.start - 1 + len(lst)
                lst.append(self.step(lst[-1], m, key))
            return lst[n - self.start + 1]


def _d_of(key) -> int:
    b, c = key
    return b * b - 4 * c


# sum_{k=1..n} (2k+1) M_k^2
_WSUM_M = _Acc(1, lambda prev, n, _: prev + (2 * n + 1) * seq.motzkin(n) ** 2)
# mutated weight (2k+2)
_WSUM_M_MUT = _Acc(1, lambda prev, n, _: prev + (2 * n + 2) * seq.motzkin(n) ** 2)
# sum_{k=0..n-1} k(k+1)(8k+9) T_k T_{k+1}
_TT_SUM = _Acc(1, lambda prev, n, _: prev
               + (n - 1) * n * (8 * n + 1) * seq.central_trinomial(n - 1) * seq.central_trinomial(n))
_TT_SUM_MUT = _Acc(1, lambda prev, n, _: prev
                   + (n - 1) * n * (8 * n + 2) * seq.central_trinomial(n - 1) * seq.central_trinomial(n))
# sum_{k=1..n} k T_k(b,c) T_{k-1}(b,c) d^(n-k)
_S14 = _Acc(1, lambda prev, n, key: _d_of(key) * prev
            + n * seq.gen_trinomial(n, *key) * seq.gen_trinomial(n - 1, *key))
# sum_{k=1..n} k^3 T_k(b,c) T_{k-1}(b,c) d^(n-k)
_S15 = _Acc(1, lambda prev, n, key: _d_of(key) * prev
            + n ** 3 * seq.gen_trinomial(n, *key) * seq.gen_trinomial(n - 1, *key))
# sum_{k=0..n-1} (k+1)(k+2)(2k+3) M_k(b,c)^2 d^(n-1-k)
_S16 = _Acc(1, lambda prev, n, key: _d_of(key) * prev
            + n * (n + 1) * (2 * n + 1) * seq.gen_motzkin(n - 1, *key) ** 2)
# same with (-d)^(n-1-k)
_S17 = _Acc(1, lambda prev, n, key: -_d_of(key) * prev
            + n * (n + 1) * (2 * n + 1) * seq.gen_motzkin(n - 1, *key) ** 2)
# mutated (1.8): weight (k+1)(k+2)(2k+4) at b = c = 1 (so -d = 3)
_S18_MUT = _Acc(1, lambda prev, n, _: 3 * prev
                + n * (n + 1) * (2 * n + 2) * seq.motzkin(n - 1) ** 2)
# sum_{k=0..n-1} (2k+1) T_k(b,c)^2 (-d)^(n-1-k)
_S31 = _Acc(1, lambda prev, n, key: -_d_of(key) * prev
            + (2 * n - 1) * seq.gen_trinomial(n - 1, *key) ** 2)
# sum_{k=1..n} k^(2*delta+1) T_k T_{k-1} d^(n-k), keyed (b, c, delta)
_S411 = _Acc(1, lambda prev, n, key: _d_of(key[:2]) * prev
             + n ** (2 * key[2] + 1) * seq.gen_trinomial(n, *key[:2]) * seq.gen_trinomial(n - 1, *key[:2]))
# Delannoy sums for (1.9)
_S19A = _Acc(1, lambda prev, n, _: prev + n * seq.delannoy(n) * seq.delannoy(n - 1))
_S19B = _Acc(1, lambda prev, n, _: prev + n ** 3 * seq.delannoy(n) * seq.delannoy(n - 1))
# sum_{k=1..n} k(k+1)(2k+1) s_k^2
_S110 = _Acc(1, lambda prev, n, _: prev
             + n * (n + 1) * (2 * n + 1) * seq.schroder_little(n) ** 2)
# sum_{k=1..n} (-1)^(n-k) k(k+1)(2k+1) s_k^2
_S111 = _Acc(1, lambda prev, n, _: n * (n + 1) * (2 * n + 1) * seq.schroder_little(n) ** 2 - prev)
# sum_{k=0..n-1} (8k+9) W_k^2
_SW52 = _Acc(1, lambda prev, n, _: prev + (8 * n + 1) * seq.motzkin_analog_w(n - 1) ** 2)
# sum_{k=0..n-1} W_k^2
_SW51 = _Acc(1, lambda prev, n, _: prev + seq.motzkin_analog_w(n - 1) ** 2)
# double sum of F(k, l) from the (2k+1)M_k^2 telescoping (rows are zero for l > k)
_E28_LHS = _Acc(0, lambda prev, n, _: prev + sum(_f28(n, l) for l in range(n + 1)),
                init=Fraction(0))
# polynomial accumulators
_P46 = _Acc(1, lambda prev, n, _: _w1(n) * _w1(n) * (n * (n + 1) * (2 * n + 1)) - prev,
            init=ZERO)
_P52 = _Acc(1, lambda prev, n, key: prev
            + (_wh(n, key[0]) ** key[1]) * (n * (n + 1) * (2 * n + 1)), init=ZERO)
_P52_ALT = _Acc(1, lambda prev, n, key: prev
                + (_wh(n, key[0]) ** key[1]) * ((-1) ** n * n * (n + 1) * (2 * n + 1)), init=ZERO)
_P53 = _Acc(1, lambda prev, n, key: prev
            + (_sh(n, key[0]) ** key[1]) * (n * (n + 1) * (2 * n + 1)), init=ZERO)
_P53_ALT = _Acc(1, lambda prev, n, key: prev
                + (_sh(n, key[0]) ** key[1]) * ((-1) ** n * n * (n + 1) * (2 * n + 1)), init=ZERO)


def _memo(fn):
    cache: dict = {}
    lock = threading.Lock()

    def wrapper(*args):
        got = cache.get(args)
        if got is None:
            with lock:
                got = cache.get(args)
                if got is None:
                    got = cache[args] = fn(*args)
        return got

    wrapper.cache = cache
    return wrapper


_s_poly = _memo(s_poly)
_w1 = _memo(lambda n: w_poly(n, 1))
_wh = _memo(w_poly)
_sh = _memo(big_schroder_poly)
_XP1 = Poly((1, 1))
_Y = Poly((0, 1, 1))  # x(x+1)


def _a_coeff(n: int, k: int) -> int:
    """Quadratic-in-k weight used by the T_k T_{k+1} closed forms."""
    return (4 * k * k * n * n - 8 * k * n ** 3 - 14 * k * k * n - 14 * k * n * n
            - 4 * n ** 3 + 13 * k * k - 11 * k * n - 26 * n * n + 39 * k + 4 * n + 26)


def _f28(k: int, l: int) -> Fraction:
    if l > k:
        return Fraction(0)
    return (Fraction(2 * k + 1, (k + 1) * (k + 2))
            * comb(k + l + 2, 2 * l + 2) * comb(2 * l + 2, l + 1) * comb(2 * l + 2, l)
            * (-3) ** (k - l))


# ---------------------------------------------------------------------------
# Point outcome helpers
# ---------------------------------------------------------------------------

def _ok(derived=None):
    return ("ok", derived)


def _fail(lhs, rhs):
    return ("fail", str(lhs), str(rhs))


def _skip(reason: str):
    return ("skip", reason)


def _divides(value: int, divisor: int):
    """Divisibility with the 0 | x convention (only 0 is divisible by 0)."""
    if divisor == 0:
        return value == 0, value
    return value % divisor == 0, value % divisor


@dataclass(frozen=True)
class Skip:
    point: object
    reason: str


# ---------------------------------------------------------------------------
# Point grids
# ---------------------------------------------------------------------------

def _n_points(lo: int = 1, hi_field: str = "n_max"):
    def points(rng: ParamRange):
        return iter(range(lo, getattr(rng, hi_field) + 1))
    return points


def _prime_points(min_exclusive: int = 3):
    def points(rng: ParamRange):
        lo = max(rng.prime_lo, min_exclusive + 1)
        return iter(modular.primes_in(lo, rng.prime_hi))
    return points


def _grid_points(*, d_nonzero: bool = False, b_nonzero: bool = False, n_lo: int = 1,
                 deltas: tuple[int, ...] | None = None):
    def points(rng: ParamRange):
        for b in rng.b_set:
            for c in rng.c_set:
                if b_nonzero and b == 0:
                    yield Skip({"b": b, "c": c}, "requires b != 0")
                    continue
                if d_nonzero and b * b - 4 * c == 0:
                    yield Skip({"b": b, "c": c}, "requires d = b^2 - 4c != 0")
                    continue
                if deltas is None:
                    for n in range(n_lo, rng.n_max + 1):
                        yield (b, c, n)
                else:
                    for delta in deltas:
                        for n in range(n_lo, rng.n_max + 1):
                            yield (b, c, delta, n)
    return points


def _triangle_points(*, j_lo: int = 0, strict: bool = True, deltas=None):
    """(j, m) pairs with j_lo <= j < m <= n_max (or j <= m when not strict)."""
    def points(rng: ParamRange):
        for m in range(j_lo if not strict else j_lo + 1, rng.n_max + 1):
            for j in range(j_lo, m if strict else m + 1):
                if deltas is None:
                    yield (j, m)
                else:
                    for delta in deltas:
                        yield (delta, j, m)
    return points


def _nk_points(k_lo: int = 1):
    def points(rng: ParamRange):
        for n in range(max(k_lo, 1), rng.n_max + 1):
            for k in range(k_lo, n + 1):
                yield (n, k)
    return points


# ---------------------------------------------------------------------------
# Checkers: theorems and corollaries
# ---------------------------------------------------------------------------

def _check_thm_1_1_i(point):
    n = point
    total = 2 * _WSUM_M.at(n)
    ok, rem = _divides(total, n)
    if not ok:
        return _fail(f"2*sum = {total} = {rem} (mod {n})", "0 (mod n)")
    return _ok(total // n)


def _check_thm_1_1_ii(point):
    p = point
    total = 1 + _WSUM_M.at(p - 1)  # k = 0 contributes 1 * M_0^2
    rhs = 12 * p * modular.legendre(p, 3)
    if (total - rhs) % (p * p):
        return _fail(f"sum = {total % (p * p)} (mod p^2)", f"12p(p/3) = {rhs % (p * p)} (mod p^2)")
    return _ok()


def _check_thm_1_2(point):
    n = point
    total = _TT_SUM.at(n)
    divisor = n * n * (n * n - 1) // 6
    ok, rem = _divides(6 * total, n * n * (n * n - 1))
    if not ok:
        return _fail(f"sum = {total}, remainder {rem}", f"0 (mod {divisor})")
    return _ok(6 * total // (n * n * (n * n - 1)) if n >= 2 else None)


def _check_thm_1_3_a(point):
    b, c, n = point
    total = _S14.at(n, (b, c))
    divisor = abs(b) * (n * (n + 1) // 2)
    ok, rem = _divides(total, divisor)
    if not ok:
        return _fail(f"sum = {total} = {rem} (mod {divisor})", "0 (mod b*n(n+1)/2)")
    return _ok()


def _check_thm_1_3_b(point):
    b, c, n = point
    total = 3 * _S15.at(n, (b, c))
    divisor = abs(b) * (n * (n + 1) // 2) ** 2
    ok, rem = _divides(total, divisor)
    if not ok:
        return _fail(f"3*sum = {total} = {rem} (mod {divisor})", "0 (mod b*n^2(n+1)^2/4)")
    return _ok()


def _check_thm_1_3_c(point):
    b, c, n = point
    total = gcd(2, n) * _S16.at(n, (b, c))
    divisor = n * (n + 1) * (n + 2)
    ok, rem = _divides(total, divisor)
    if not ok:
        return _fail(f"gcd(2,n)*sum = {total} = {rem} (mod {divisor})", "0 (mod n(n+1)(n+2))")
    return _ok()


def _check_thm_1_3_d(point):
    b, c, n = point
    mm = seq.gen_motzkin(n, b, c) * seq.gen_motzkin(n - 1, b, c)
    if mm % abs(b):
        return _fail(f"M_n*M_(n-1) = {mm}", f"0 (mod b = {b})")
    lhs = b * _S17.at(n, (b, c))
    rhs = n * (n + 1) * (n + 2) * mm
    if lhs != rhs:
        return _fail(f"b*alt-sum = {lhs}", f"n(n+1)(n+2)*M_n*M_(n-1) = {rhs}")
    return _ok()


def _check_id_1_8(point):
    n = point
    lhs = _S17.at(n, (1, 1))
    rhs = n * (n + 1) * (n + 2) * seq.motzkin(n) * seq.motzkin(n - 1)
    if lhs != rhs:
        return _fail(f"sum = {lhs}", f"n(n+1)(n+2)*M_n*M_(n-1) = {rhs}")
    return _ok()


def _check_cor_1_1_ab(point):
    n = point
    d1 = 3 * (n * (n + 1) // 2)
    ok, rem = _divides(_S19A.at(n), d1)
    if not ok:
        return _fail(f"sum k*D_k*D_(k-1) = {rem} (mod {d1})", "0 (mod 3n(n+1)/2)")
    d2 = (n * (n + 1) // 2) ** 2
    ok, rem = _divides(_S19B.at(n), d2)
    if not ok:
        return _fail(f"sum k^3*D_k*D_(k-1) = {rem} (mod {d2})", "0 (mod n^2(n+1)^2/4)")
    return _ok()


def _check_cor_1_1_c(point):
    n = point
    divisor = n * (n + 1) * (n + 2) // gcd(2, n)
    ok, rem = _divides(_S110.at(n), divisor)
    if not ok:
        return _fail(f"sum = {rem} (mod {divisor})", "0 (mod n(n+1)(n+2)/gcd(2,n))")
    return _ok()


def _check_cor_1_1_d(point):
    n = point
    ss = seq.schroder_little(n) * seq.schroder_little(n + 1)
    if ss % 3:
        return _fail(f"s_n*s_(n+1) = {ss}", "0 (mod 3)")
    total = _S111.at(n)
    divisor = n * (n + 1) * (n + 2)
    if total % divisor:
        return _fail(f"alt-sum = {total % divisor} (mod {divisor})", "0 (mod n(n+1)(n+2))")
    if 3 * total != divisor * ss:
        return _fail(f"3*alt-sum = {3 * total}", f"n(n+1)(n+2)*s_n*s_(n+1) = {divisor * ss}")
    return _ok()


# ---------------------------------------------------------------------------
# Checkers: polynomial identities
# ---------------------------------------------------------------------------

def _check_id_2_3(point):
    n = point
    lhs = big_schroder_poly(n, 1)
    rhs = _XP1 * _s_poly(n)
    if lhs != rhs:
        return _fail(lhs.render(), rhs.render())
    return _ok()


def _check_lem_2_1_a(point):
    n = point
    lhs = _s_poly(n) * _s_poly(n) * (n * (n + 1))
    acc = ZERO
    ypow = ONE
    for k in range(1, n + 1):
        acc = acc + ypow * (comb(n + k, 2 * k) * comb(2 * k, k) * comb(2 * k, k + 1))
        ypow = ypow * _Y
    if lhs != acc:
        return _fail(lhs.render(), acc.render())
    return _ok()


def _check_rem_2_1(point):
    b, c, n = point
    d = b * b - 4 * c
    lhs = (n + 1) * (n + 2) * seq.gen_motzkin(n, b, c) ** 2
    rhs = sum(comb(n + k + 1, 2 * k) * comb(2 * k, k) * comb(2 * k, k + 1)
              * c ** (k - 1) * d ** (n + 1 - k) for k in range(1, n + 2))
    if lhs != rhs:
        return _fail(f"(n+1)(n+2)*M_n^2 = {lhs}", f"sum = {rhs}")
    return _ok()


def _check_lem_2_2(point):
    n = point
    lhs = (n + 2) * _WSUM_M.at(n)
    rhs = sum((4 * n - 2 * k + 3) * (n + k + 2) * comb(n + k + 1, 2 * k)
              * comb(2 * k, k) * comb(2 * k + 1, k) * (-3) ** (n + 1 - k)
              for k in range(n + 2))
    if lhs != rhs:
        return _fail(f"(n+2)*sum(2k+1)M_k^2 = {lhs}", f"single sum = {rhs}")
    return _ok()


def _check_eq_2_8(point):
    n = point
    lhs = _E28_LHS.at(n)
    rhs = Fraction(1 + (4 * n + 3) * (-3) ** (n + 1))
    for j in range(n + 1):
        rhs += Fraction((-3) ** (n - j) * (4 * n - 2 * j + 1)
                        * math.factorial(n + j + 3) * math.factorial(2 * j + 3),
                        (n + 2) * math.factorial(n - j) * (j + 2) * math.factorial(j + 1) ** 4)
    if lhs != rhs:
        return _fail(f"double sum = {lhs}", f"telescoped form = {rhs}")
    return _ok()


def _q_sum_2_9(n: int, a: int, bexp: int, weight_shift: int = 2) -> Poly:
    """sum_{k=0..n-1} [n+1 k]^a [n+k k]^b [2k k] [k+w]_q (-[3]_q)^(n-1-k)."""
    q3 = q_integer(3)
    pw = [ONE]
    for _ in range(n - 1):
        pw.append(pw[-1] * q3)
    total = ZERO
    for k in range(n):
        term = q_integer(k + weight_shift) * pw[n - 1 - k]
        term = term * q_binomial(2 * k, k)
        if bexp:
            term = term * q_binomial(n + k, k) ** bexp
        if a:
            term = term * q_binomial(n + 1, k) ** a
        if (n - 1 - k) & 1:
            term = -term
        total = total + term
    return total


def _check_lem_2_3(point):
    a, bexp, n = point
    total = _q_sum_2_9(n, a, bexp)
    try:
        total.exact_div(q_integer(n))
    except NotDivisible as exc:
        return _fail(f"sum mod [n]_q = {exc.remainder.render('q')}", "0")
    return _ok()


def _check_lem_2_4(point):
    p = point
    pw3 = 1
    acc = 0
    for k in range(1, p):
        pw3 = pw3 * 3 % p
        acc = (acc + comb(2 * k, k) * pow(k * pw3, -1, p)) % p
    rhs = modular.fermat_quotient(3, p)
    if acc != rhs:
        return _fail(f"sum C(2k,k)/(k*3^k) = {acc} (mod p)", f"(3^(p-1)-1)/p = {rhs} (mod p)")
    return _ok()


def _check_eq_2_11(point):
    n = point
    lhs = 2 * _WSUM_M.at(n)
    rhs = 27 * sum(seq.binomial(n + 1, k) * comb(n + k, k) * comb(2 * k, k)
                   * (k + 2) * (-3) ** (n - 1 - k) for k in range(n))
    if (lhs - rhs) % n:
        return _fail(f"2*sum = {lhs % n} (mod {n})", f"27*sum = {rhs % n} (mod {n})")
    return _ok()


# ---------------------------------------------------------------------------
# Checkers: the LEM-3.x / EQ-3.x family
# ---------------------------------------------------------------------------

def _check_lem_3_1_a(point):
    b, c, n = point
    lhs = b * _S31.at(n, (b, c))
    rhs = n * seq.gen_trinomial(n, b, c) * seq.gen_trinomial(n - 1, b, c)
    if lhs != rhs:
        return _fail(f"b*alt-sum = {lhs}", f"n*T_n*T_(n-1) = {rhs}")
    return _ok()


def _check_lem_3_1_b(point):
    b, c, k = point
    d = b * b - 4 * c
    lhs = seq.gen_trinomial(k, b, c) ** 2
    rhs = sum(comb(k + j, 2 * j) * comb(2 * j, j) ** 2 * c ** j * d ** (k - j)
              for j in range(k + 1))
    if lhs != rhs:
        return _fail(f"T_k^2 = {lhs}", f"sum = {rhs}")
    return _ok()


def _sum_3_3(n: int) -> int:
    cat = seq.catalan_values(n)
    return sum(seq.binomial(n - 1, k) * seq.binomial(-n - 1, k) * cat[k]
               * 3 ** (n - 1 - k) * _a_coeff(n, k) for k in range(n))


def _check_lem_3_2(point):
    n = point
    lhs = 6 * _TT_SUM.at(n)
    rhs = (-1) ** n * n * _sum_3_3(n)
    if lhs != rhs:
        return _fail(f"6*sum k(k+1)(8k+9)T_k*T_(k+1) = {lhs}", f"closed form = {rhs}")
    return _ok()


def _check_lem_3_3(point):
    n = point
    total = _sum_3_3(n)
    ok, rem = _divides(total, n * n - 1)
    if not ok:
        return _fail(f"sum = {rem} (mod {n * n - 1})", "0 (mod n^2-1)")
    return _ok()


def _check_eq_3_partial(point):
    j, m = point
    lhs = 4 * sum((k - 1) * (8 * k + 1) * 3 ** (k - 1 - j) for k in range(j + 1, m + 1))
    rhs = 3 ** (m - j) * (16 * m * m - 30 * m + 21) - (16 * j * j - 30 * j + 21)
    if lhs != rhs:
        return _fail(f"4*partial sum = {lhs}", f"closed form = {rhs}")
    return _ok()


def _check_eq_3_4(point):
    n = point
    c1 = 16 * n * n - 30 * n + 21
    lhs = 0
    for k in range(n + 1):
        outer = 3 ** (n - k) * c1 - (16 * k * k - 30 * k + 21)
        row = 0
        for l in range(k + 1):
            row += comb(k + l, 2 * l) * comb(2 * l, l) ** 2 * (-3) ** (k - l)
        lhs += (2 * k + 1) * outer * row
    rhs = Fraction(0)
    for k in range(n):
        rhs += Fraction(_a_coeff(n, k) * (-3) ** (n - k)
                        * math.factorial(n + k) * math.factorial(2 * k),
                        math.factorial(n - k - 1) * math.factorial(k) ** 4 * (k + 1))
    rhs = Fraction(2, 9) * rhs
    if lhs != rhs:
        return _fail(f"double sum = {lhs}", f"telescoped form = {rhs}")
    return _ok()


def _check_lem_3_4(point):
    a, bexp, n = point
    cb = [comb(2 * k, k) for k in range(n)]
    total = sum(seq.binomial(n - 1, k) ** a * seq.binomial(-n - 1, k) ** bexp
                * cb[k] * (k + 2) * 3 ** (n - 1 - k) for k in range(n))
    ok, rem = _divides(total, 2 * n)
    if not ok:
        return _fail(f"sum = {rem} (mod {2 * n})", "0 (mod 2n)")
    return _ok()


# ---------------------------------------------------------------------------
# Checkers: the LEM-4.x / EQ-4.x family
# ---------------------------------------------------------------------------

def _check_lem_4_1(point):
    b, c, n = point
    d = b * b - 4 * c
    lhs = n * seq.gen_trinomial(n, b, c) * seq.gen_trinomial(n - 1, b, c)
    rhs = b * sum((n - j) * comb(n + j, 2 * j) * comb(2 * j, j) ** 2
                  * c ** j * d ** (n - 1 - j) for j in range(n))
    if lhs != rhs:
        return _fail(f"n*T_n*T_(n-1) = {lhs}", f"b*sum = {rhs}")
    return _ok()


def _check_eq_4_2(point):
    j, m = point
    lhs = sum((-1) ** (m - 1 - k) * (2 * k + 1) * comb(k + j, 2 * j) for k in range(j, m))
    rhs = (m - j) * comb(m + j, 2 * j)
    if lhs != rhs:
        return _fail(f"alt partial sum = {lhs}", f"(m-j)*C(m+j,2j) = {rhs}")
    return _ok()


def _check_lem_4_2(point):
    n, k = point
    value = (n + k + 1) * comb(n + k, k) * comb(n + 1, k + 1) * comb(2 * k, k + 1)
    divisor = n * (n + 1) * (n + 2) // gcd(2, n)
    ok, rem = _divides(value, divisor)
    if not ok:
        return _fail(f"product = {rem} (mod {divisor})", "0 (mod n(n+1)(n+2)/gcd(2,n))")
    return _ok()


def _check_lem_4_3(point):
    n = point
    ok, rem = _divides(6 * comb(2 * n, n), n + 2)
    if not ok:
        return _fail(f"6*C(2n,n) = {rem} (mod {n + 2})", "0 (mod n+2)")
    return _ok()


def _check_lem_4_4_a(point):
    n, k = point
    lhs = seq.w_coeff(n, k)
    rhs = sum(comb(n - j, k - j) * seq.narayana(n, j) for j in range(1, k + 1))
    if lhs != rhs:
        return _fail(f"w(n,k) = {lhs}", f"binomial transform of N(n,*) = {rhs}")
    return _ok()


def _check_lem_4_4_b(point):
    n, k = point
    lhs = seq.narayana(n, k)
    rhs = sum(comb(n - j, k - j) * (-1) ** (k - j) * seq.w_coeff(n, j)
              for j in range(1, k + 1))
    if lhs != rhs:
        return _fail(f"N(n,k) = {lhs}", f"inverse transform of w(n,*) = {rhs}")
    return _ok()


def _check_lem_4_5(point):
    n = point
    lhs = _w1(n)
    rhs = _s_poly(n)
    if lhs != rhs:
        return _fail(lhs.render(), rhs.render())
    return _ok()


def _check_lem_4_6(point):
    n = point
    lhs = Poly((1, 2)) * _P46.at(n)
    rhs = _w1(n) * _w1(n + 1) * (n * (n + 1) * (n + 2))
    if lhs != rhs:
        return _fail(lhs.render(), rhs.render())
    return _ok()


@_memo
def _rec_w_offset() -> int | None:
    """Detect the index offset under which the 3-term w-recurrence holds."""
    for off in (0, 1, -1):
        good = True
        for n in range(max(1, 1 - off), 5):
            lhs = _w1(n + 2 + off) * (n + 3)
            rhs = Poly((1, 2)) * (2 * n + 3) * _w1(n + 1 + off) - _w1(n + off) * n
            if lhs != rhs:
                good = False
                break
        if good:
            return off
    return None


def _check_rec_w(point):
    n = point
    off = _rec_w_offset()
    if off is None:
        off = 0
    if n + off < 1:
        return _skip("index below the family's first member")
    lhs = _w1(n + 2 + off) * (n + 3)
    rhs = Poly((1, 2)) * (2 * n + 3) * _w1(n + 1 + off) - _w1(n + off) * n
    if lhs != rhs:
        return _fail(lhs.render(), rhs.render())
    return _ok()


def _check_eq_4_10(point):
    delta, j, m = point
    lhs = 2 * (j + delta + 1) * sum(k ** (2 * delta) * (k - j) * comb(k + j, 2 * j)
                                    for k in range(j + 1, m + 1))
    rhs = m ** delta * (m + 1) ** delta * (m - j) * (m + j + 1) * comb(m + j, 2 * j)
    if lhs != rhs:
        return _fail(f"2(j+d+1)*partial sum = {lhs}", f"closed form = {rhs}")
    return _ok()


def _check_eq_4_11(point):
    b, c, delta, n = point
    d = b * b - 4 * c
    lhs = Fraction(_S411.at(n, (b, c, delta)))
    rhs = Fraction(b, 2) * (n * (n + 1)) ** (delta + 1) * sum(
        comb(n - 1, j) * comb(n + j + 1, j) * Fraction(comb(2 * j, j), j + delta + 1)
        * c ** j * d ** (n - 1 - j) for j in range(n))
    if lhs != rhs:
        return _fail(f"weighted T-sum = {lhs}", f"closed form = {rhs}")
    return _ok()


def _check_eq_4_12(point):
    j, m = point
    lhs = (j + 1) * sum((2 * k + 1) * comb(k + j, 2 * j) for k in range(j, m + 1))
    rhs = (m + 1) * (m + j + 1) * comb(m + j, 2 * j)
    if lhs != rhs:
        return _fail(f"(j+1)*partial sum = {lhs}", f"closed form = {rhs}")
    return _ok()


def _check_eq_4_13(point):
    n = point
    lhs = _S110_POLY.at(n)
    acc = ZERO
    ypow = ONE
    for k in range(1, n + 1):
        acc = acc + ypow * ((n + k + 1) * comb(n + 1, k + 1) * comb(n + k, k)
                            * comb(2 * k, k + 1))
        ypow = ypow * _Y
    if lhs != acc:
        return _fail(lhs.render(), acc.render())
    return _ok()


# sum_{k=1..n} k(k+1)(2k+1) s_k(x)^2 as a polynomial
_S110_POLY = _Acc(1, lambda prev, n, _: prev
                  + _s_poly(n) * _s_poly(n) * (n * (n + 1) * (2 * n + 1)), init=ZERO)


def _check_lem_2_1_b(point):
    b, c, n = point
    d = b * b - 4 * c
    target = seq.gen_motzkin(n, b, c)
    root = isqrt(d) if d > 0 else 0
    if d > 0 and root * root == d:
        x = Fraction(b - root, 2 * root)
        value = Fraction(root) ** n * _s_poly(n + 1)(x)
        if value != target:
            return _fail(f"sqrt(d)^n * s_(n+1)(x) = {value}", f"M_n(b,c) = {target}")
    else:
        x = Quadratic(Fraction(-1, 2), Fraction(b, 2 * d), d)
        value = Quadratic.sqrt_of(d) ** n * _s_poly(n + 1)(x)
        if not (value.is_rational and value.u == target):
            return _fail(f"sqrt(d)^n * s_(n+1)(x) = {value}", f"M_n(b,c) = {target}")
    return _ok()


# ---------------------------------------------------------------------------
# Checkers: the W sequence and the integrality conjectures
# ---------------------------------------------------------------------------

def _check_rec_W(point):
    n = point
    w = [seq.motzkin_analog_w(n + i) for i in range(4)]
    lhs = (n + 3) * w[3]
    rhs = (3 * n + 7) * w[2] + (n - 5) * w[1] - 3 * (n + 1) * w[0]
    if lhs != rhs:
        return _fail(f"(n+3)W_(n+3) = {lhs}", f"recurrence rhs = {rhs}")
    return _ok(seq.motzkin_analog_w(n))


def _check_conj_5_1_a(point):
    n = point
    total = _SW52.at(n)
    if total % (2 * n) != n % (2 * n):
        return _fail(f"sum = {total % (2 * n)} (mod {2 * n})", f"n = {n % (2 * n)} (mod 2n)")
    return _ok()


def _check_conj_5_1_b(point):
    p = point
    if p == 3:
        return _skip("the symbols (p/3) and (3/p) vanish at p = 3; "
                     "the congruence is outside their domain")
    total = _SW52.at(p)
    if total % p:
        return _fail(f"sum = {total}", f"0 (mod p = {p}); p must divide the sum")
    quotient = total // p
    rhs = (24 + 10 * modular.legendre(-1, p) - 9 * modular.legendre(p, 3)
           - 18 * modular.legendre(3, p))
    if (quotient - rhs) % (p * p):
        return _fail(f"(sum/p) = {quotient % (p * p)} (mod p^2)",
                     f"symbol side = {rhs % (p * p)} (mod p^2)")
    return _ok()


def _check_rem_5_1(point):
    p = point
    total = _SW51.at(p)
    if total % p != 2 % p:
        return _fail(f"sum W_k^2 = {total % p} (mod {p})", "2 (mod p)")
    return _ok()


def _conj_5_9_prefactor() -> str:
    """Interpretation switch for the ambiguous (5.9) prefactor."""
    value = os.environ.get("MOTZKINLAB_CONJ59_PREFACTOR", "gcd(2,m-1,n)")
    if value not in ("gcd(2,m-1,n)", "gcd(2^(m-1),n)"):
        raise ValueError(f"unsupported MOTZKINLAB_CONJ59_PREFACTOR {value!r}")
    return value


def _integrality_witness(poly: Poly, factor: Fraction):
    """First non-integral coefficient of poly * factor, or None."""
    scaled = poly.scaled(factor)
    if scaled.is_integral():
        return None
    for i, coef in enumerate(scaled.coeffs):
        if not isinstance(coef, int):
            return i, coef
    return None


def _check_conj_5_2(point):
    part, h, m, n = point
    if part == "5.4":
        total = _P52.at(n, (h, m))
        g = gcd(2, n)
    elif part == "5.5":
        total = _P52_ALT.at(n, (1, m))
        g = gcd(2, n)
    else:  # "5.6", h > 1
        total = _P52_ALT.at(n, (h, m))
        g = 1
    witness = _integrality_witness(total, Fraction(g, n * (n + 1) * (n + 2)))
    if witness is not None:
        i, coef = witness
        return _fail(f"coefficient of x^{i} = {coef}", "an integer")
    return _ok()


def _check_conj_5_3(point):
    part, h, m, n = point
    if part == "5.8":
        total = _P53.at(n, (h, m))
        g = gcd(2, n)
    else:  # "5.9"
        total = _P53_ALT.at(n, (h, m))
        if _conj_5_9_prefactor() == "gcd(2,m-1,n)":
            g = gcd(2, m - 1, n)
        else:
            g = gcd(2 ** (m - 1), n)
    witness = _integrality_witness(total, Fraction(g, n * (n + 1) * (n + 2)))
    if witness is not None:
        i, coef = witness
        return _fail(f"coefficient of x^{i} = {coef}", "an integer")
    return _ok()


# ---------------------------------------------------------------------------
# Checkers: mutation fixtures (must produce counterexamples)
# ---------------------------------------------------------------------------

def _check_mut_thm_1_1_i(point):
    n = point
    total = 2 * _WSUM_M_MUT.at(n)
    ok, rem = _divides(total, n)
    if not ok:
        return _fail(f"2*sum (2k+2)M_k^2 = {rem} (mod {n})", "0 (mod n)")
    return _ok()


def _check_mut_thm_1_2(point):
    n = point
    ok, rem = _divides(6 * _TT_SUM_MUT.at(n), n * n * (n * n - 1))
    if not ok:
        return _fail(f"6*sum k(k+1)(8k+10)T_k*T_(k+1): remainder {rem}",
                     "0 (mod n^2(n^2-1))")
    return _ok()


def _check_mut_id_1_8(point):
    n = point
    lhs = _S18_MUT.at(n)
    rhs = n * (n + 1) * (n + 2) * seq.motzkin(n) * seq.motzkin(n - 1)
    if lhs != rhs:
        return _fail(f"mutated sum = {lhs}", f"n(n+1)(n+2)*M_n*M_(n-1) = {rhs}")
    return _ok()


def _check_mut_lem_2_3(point):
    n = point
    total = _q_sum_2_9(n, 1, 1, weight_shift=3)
    try:
        total.exact_div(q_integer(n))
    except NotDivisible as exc:
        return _fail(f"mutated sum mod [n]_q = {exc.remainder.render('q')}", "0")
    return _ok()


# ---------------------------------------------------------------------------
# Points for the composite conjecture claims
# ---------------------------------------------------------------------------

def _points_conj_5_2(rng: ParamRange):
    for h in range(1, rng.h_max + 1):
        for m in range(1, rng.m_max + 1):
            for n in range(1, rng.n_max + 1):
                yield ("5.4", h, m, n)
    for m in range(1, rng.m_max + 1):
        for n in range(1, rng.n_max + 1):
            yield ("5.5", 1, m, n)
    for h in range(2, rng.h_max + 1):
        for m in range(1, rng.m_max + 1):
            for n in range(1, rng.n_max + 1):
                yield ("5.6", h, m, n)


def _points_conj_5_3(rng: ParamRange):
    for part in ("5.8", "5.9"):
        for h in range(1, rng.h_max + 1):
            for m in range(1, rng.m_max + 1):
                for n in range(1, rng.n_max + 1):
                    yield (part, h, m, n)


def _points_lem_2_3(rng: ParamRange):
    # exponent a = 0 falsifies the congruence (already at q = 1), so the
    # valid grid starts at a = 1; b = 0 is fine
    for a in range(1, rng.qexp_a_max + 1):
        for bexp in range(0, rng.qexp_b_max + 1):
            for n in range(1, rng.n_max + 1):
                yield (a, bexp, n)


def _points_lem_3_4(rng: ParamRange):
    for a in range(0, rng.qexp_a_max + 1):
        for bexp in range(0, rng.qexp_b_max + 1):
            if (a + bexp) % 2:
                continue
            for n in range(1, rng.n_max + 1):
                yield (a, bexp, n)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    id: str
    kind: str
    statement: str
    param_names: tuple[str, ...]
    points: Callable[[ParamRange], Iterable]
    check: Callable
    default_range: ParamRange
    deep_range: ParamRange | None = None
    range_keys: tuple[str, ...] = ("n_max",)
    notes: Callable[[ParamRange], dict] | None = None
    expect_counterexample: bool = False
    table_label: str | None = None


_BASE = ParamRange()

CLAIMS: dict[str, Claim] = {}


def _register(claim: Claim) -> Claim:
    if claim.id in CLAIMS:
        raise ValueError(f"duplicate claim id {claim.id}")
    CLAIMS[claim.id] = claim
    return claim


def _mk(claim_id, kind, statement, param_names, points, check, *,
        base=None, deep=None, range_keys=("n_max",), notes=None,
        expect_counterexample=False, table_label=None, **range_overrides):
    rng = (base or _BASE).override(**range_overrides) if range_overrides else (base or _BASE)
    deep_rng = rng.override(**deep) if deep else None
    return _register(Claim(claim_id, kind, statement, param_names, points, check,
                           rng, deep_rng, range_keys, notes, expect_counterexample,
                           table_label))


_GRID_KEYS = ("n_max", "b_set", "c_set")
_PRIME_KEYS = ("prime_lo", "prime_hi")

_mk("THM-1.1.i", "integrality",
    "2/n * sum_{k=1..n} (2k+1)*M_k^2 is an integer",
    ("n",), _n_points(), _check_thm_1_1_i,
    deep={"n_max": 2000}, table_label="s(n)")
_mk("THM-1.1.ii", "congruence",
    "sum_{k=0..p-1} (2k+1)*M_k^2 = 12p(p/3) (mod p^2) for primes p > 3",
    ("p",), _prime_points(3), _check_thm_1_1_ii, range_keys=_PRIME_KEYS)
_mk("THM-1.2", "divisibility",
    "n^2(n^2-1)/6 divides sum_{k=0..n-1} k(k+1)(8k+9)*T_k*T_{k+1}",
    ("n",), _n_points(), _check_thm_1_2,
    deep={"n_max": 1000}, table_label="t(n)")
_mk("THM-1.3.a", "divisibility",
    "b*n(n+1)/2 divides sum_{k=1..n} k*T_k(b,c)*T_{k-1}(b,c)*d^(n-k)",
    ("b", "c", "n"), _grid_points(d_nonzero=True, b_nonzero=True), _check_thm_1_3_a,
    n_max=100, range_keys=_GRID_KEYS)
_mk("THM-1.3.b", "divisibility",
    "b*n^2(n+1)^2/4 divides 3*sum_{k=1..n} k^3*T_k(b,c)*T_{k-1}(b,c)*d^(n-k)",
    ("b", "c", "n"), _grid_points(d_nonzero=True, b_nonzero=True), _check_thm_1_3_b,
    n_max=100, range_keys=_GRID_KEYS)
_mk("THM-1.3.c", "integrality",
    "gcd(2,n)/(n(n+1)(n+2)) * sum_{k=0..n-1} (k+1)(k+2)(2k+3)*M_k(b,c)^2*d^(n-1-k) is an integer",
    ("b", "c", "n"), _grid_points(d_nonzero=True, b_nonzero=True), _check_thm_1_3_c,
    n_max=100, range_keys=_GRID_KEYS)
_mk("THM-1.3.d", "identity",
    "sum_{k=0..n-1} (k+1)(k+2)(2k+3)*M_k(b,c)^2*(-d)^(n-1-k) = n(n+1)(n+2)*M_n*M_{n-1}/b, an integer",
    ("b", "c", "n"), _grid_points(d_nonzero=True, b_nonzero=True), _check_thm_1_3_d,
    n_max=100, range_keys=_GRID_KEYS)
_mk("ID-1.8", "identity",
    "sum_{k=0..n-1} (k+1)(k+2)(2k+3)*M_k^2*3^(n-1-k) = n(n+1)(n+2)*M_n*M_{n-1}",
    ("n",), _n_points(), _check_id_1_8, deep={"n_max": 500})
_mk("COR-1.1.ab", "divisibility",
    "3n(n+1)/2 divides sum k*D_k*D_{k-1} and n^2(n+1)^2/4 divides sum k^3*D_k*D_{k-1}",
    ("n",), _n_points(), _check_cor_1_1_ab, deep={"n_max": 300})
_mk("COR-1.1.c", "divisibility",
    "n(n+1)(n+2)/gcd(2,n) divides sum_{k=1..n} k(k+1)(2k+1)*s_k^2",
    ("n",), _n_points(), _check_cor_1_1_c, deep={"n_max": 300})
_mk("COR-1.1.d", "identity",
    "1/(n(n+1)(n+2)) * sum (-1)^(n-k) k(k+1)(2k+1)*s_k^2 = s_n*s_{n+1}/3, an integer",
    ("n",), _n_points(), _check_cor_1_1_d, deep={"n_max": 300})

_mk("ID-2.3", "polynomial-identity",
    "S_n(x) = (x+1)*s_n(x)",
    ("n",), _n_points(), _check_id_2_3, n_max=50)
_mk("LEM-2.1.a", "polynomial-identity",
    "n(n+1)*s_n(x)^2 = sum_{k=1..n} C(n+k,2k)C(2k,k)C(2k,k+1)*(x(x+1))^(k-1)",
    ("n",), _n_points(), _check_lem_2_1_a, n_max=50)
_mk("LEM-2.1.b", "identity",
    "M_n(b,c) = sqrt(d)^n * s_{n+1}((b/sqrt(d)-1)/2), via exact quadratic-extension arithmetic",
    ("b", "c", "n"), _grid_points(d_nonzero=True, n_lo=0), _check_lem_2_1_b,
    n_max=15, range_keys=_GRID_KEYS)
_mk("REM-2.1", "identity",
    "M_n(b,c)^2 = 1/((n+1)(n+2)) * sum_{k=1..n+1} C(n+k+1,2k)C(2k,k)C(2k,k+1)*c^(k-1)*d^(n+1-k)",
    ("b", "c", "n"), _grid_points(d_nonzero=True, n_lo=0), _check_rem_2_1,
    n_max=60, range_keys=_GRID_KEYS)
_mk("LEM-2.2", "identity",
    "sum_{k=1..n} (2k+1)M_k^2 equals its single-sum telescoped form",
    ("n",), _n_points(), _check_lem_2_2)
_mk("EQ-2.8", "identity",
    "double sum of F(k,l) = 1 + (4n+3)(-3)^(n+1) + factorial-form single sum",
    ("n",), _n_points(), _check_eq_2_8, n_max=100)
_mk("LEM-2.3", "polynomial-divisibility",
    "[n]_q divides sum_k [n+1 k]^a [n+k k]^b [2k k] [k+2]_q (-[3]_q)^(n-1-k)  (a >= 1)",
    ("a", "b", "n"), _points_lem_2_3, _check_lem_2_3,
    n_max=40, range_keys=("n_max", "qexp_a_max", "qexp_b_max"),
    notes=lambda rng: {"a_min": 1,
                       "reason": "exponent a = 0 falsifies the divisibility "
                                 "(e.g. n = 5: sum = 336 is not divisible by 5 at q = 1)"})
_mk("LEM-2.4", "congruence",
    "sum_{k=1..p-1} C(2k,k)/(k*3^k) = (3^(p-1)-1)/p (mod p) for primes p > 3",
    ("p",), _prime_points(3), _check_lem_2_4, range_keys=_PRIME_KEYS)
_mk("EQ-2.11", "congruence",
    "2*sum (2k+1)M_k^2 = 27*sum C(n+1,k)C(n+k,k)C(2k,k)(k+2)(-3)^(n-1-k) (mod n)",
    ("n",), _n_points(), _check_eq_2_11)

_mk("LEM-3.1.a", "identity",
    "b * sum_{k=0..n-1} (2k+1)T_k(b,c)^2(-d)^(n-1-k) = n*T_n(b,c)*T_{n-1}(b,c)",
    ("b", "c", "n"), _grid_points(), _check_lem_3_1_a,
    n_max=100, range_keys=_GRID_KEYS)
_mk("LEM-3.1.b", "identity",
    "T_k(b,c)^2 = sum_j C(k+j,2j)C(2j,j)^2*c^j*d^(k-j)",
    ("b", "c", "k"), _grid_points(n_lo=0), _check_lem_3_1_b,
    n_max=100, range_keys=_GRID_KEYS)
_mk("LEM-3.2", "identity",
    "sum k(k+1)(8k+9)T_k*T_{k+1} = ((-1)^n n/6) * sum C(n-1,k)C(-n-1,k)Cat_k*3^(n-1-k)*a(n,k)",
    ("n",), _n_points(), _check_lem_3_2, n_max=100)
_mk("EQ-3.partial", "identity",
    "sum_{k=j+1..m} (k-1)(8k+1)3^(k-1-j) = (3^(m-j)(16m^2-30m+21) - (16j^2-30j+21))/4",
    ("j", "m"), _triangle_points(), _check_eq_3_partial, n_max=60)
_mk("EQ-3.4", "identity",
    "double sum of the weighted T-square telescoping equals its factorial single-sum form",
    ("n",), _n_points(), _check_eq_3_4, n_max=100)
_mk("LEM-3.3", "divisibility",
    "n^2 - 1 divides sum C(n-1,k)C(-n-1,k)Cat_k*3^(n-1-k)*a(n,k)",
    ("n",), _n_points(), _check_lem_3_3, n_max=100)
_mk("LEM-3.4", "divisibility",
    "2n divides sum C(n-1,k)^a C(-n-1,k)^b C(2k,k)(k+2)3^(n-1-k) for a+b even",
    ("a", "b", "n"), _points_lem_3_4, _check_lem_3_4,
    n_max=80, qexp_a_max=3, qexp_b_max=3,
    range_keys=("n_max", "qexp_a_max", "qexp_b_max"))

_mk("LEM-4.1", "identity",
    "n*T_n(b,c)*T_{n-1}(b,c) = b*sum_j (n-j)C(n+j,2j)C(2j,j)^2*c^j*d^(n-1-j)",
    ("b", "c", "n"), _grid_points(), _check_lem_4_1,
    n_max=100, range_keys=_GRID_KEYS)
_mk("EQ-4.2", "identity",
    "sum_{k=j..m-1} (-1)^(m-1-k)(2k+1)C(k+j,2j) = (m-j)C(m+j,2j)",
    ("j", "m"), _triangle_points(), _check_eq_4_2, n_max=60)
_mk("LEM-4.2", "divisibility",
    "n(n+1)(n+2)/gcd(2,n) divides (n+k+1)C(n+k,k)C(n+1,k+1)C(2k,k+1)",
    ("n", "k"), _nk_points(), _check_lem_4_2, n_max=100)
_mk("LEM-4.3", "divisibility",
    "n+2 divides 6*C(2n,n)",
    ("n",), _n_points(lo=0), _check_lem_4_3)
_mk("LEM-4.4.a", "identity",
    "w(n,k) = sum_j C(n-j,k-j)*N(n,j)",
    ("n", "k"), _nk_points(), _check_lem_4_4_a, n_max=100)
_mk("LEM-4.4.b", "identity",
    "N(n,k) = sum_j C(n-j,k-j)(-1)^(k-j)*w(n,j)",
    ("n", "k"), _nk_points(), _check_lem_4_4_b, n_max=100)
_mk("LEM-4.5", "polynomial-identity",
    "w_n(x) = s_n(x)",
    ("n",), _n_points(), _check_lem_4_5, n_max=60)
_mk("LEM-4.6", "polynomial-identity",
    "(2x+1)*sum (-1)^(n-k) k(k+1)(2k+1)w_k(x)^2 = n(n+1)(n+2)*w_n(x)*w_{n+1}(x)",
    ("n",), _n_points(), _check_lem_4_6, n_max=50)
_mk("REC-w", "polynomial-identity",
    "(n+3)*w_{n+2}(x) = (2x+1)(2n+3)*w_{n+1}(x) - n*w_n(x), offset auto-detected",
    ("n",), _n_points(), _check_rec_w, n_max=50,
    notes=lambda rng: {"index_offset": _rec_w_offset(),
                       "form": "(n+3)*w[n+2+off] = (2x+1)(2n+3)*w[n+1+off] - n*w[n+off]"})
_mk("EQ-4.10", "identity",
    "sum_{k=j+1..m} k^(2d)(k-j)C(k+j,2j) = (m^d(m+1)^d/2)((m-j)(m+j+1)/(j+d+1))C(m+j,2j)",
    ("delta", "j", "m"), _triangle_points(deltas=(0, 1)), _check_eq_4_10, n_max=60)
_mk("EQ-4.11", "identity",
    "sum_k k^(2d+1)T_k*T_{k-1}*d^(n-k) = (b/2)(n(n+1))^(d+1)*sum_j ... C(2j,j)/(j+d+1) ...",
    ("b", "c", "delta", "n"), _grid_points(deltas=(0, 1)), _check_eq_4_11,
    n_max=100, range_keys=_GRID_KEYS)
_mk("EQ-4.12", "identity",
    "sum_{k=j..m} (2k+1)C(k+j,2j) = ((m+1)(m+j+1)/(j+1))C(m+j,2j)",
    ("j", "m"), _triangle_points(strict=False), _check_eq_4_12, n_max=60)
_mk("EQ-4.13", "polynomial-identity",
    "sum k(k+1)(2k+1)s_k(x)^2 = sum (n+k+1)C(n+1,k+1)C(n+k,k)C(2k,k+1)(x(x+1))^(k-1)",
    ("n",), _n_points(), _check_eq_4_13, n_max=50)

_mk("REC-W", "identity",
    "(n+3)W_{n+3} = (3n+7)W_{n+2} + (n-5)W_{n+1} - 3(n+1)W_n",
    ("n",), _n_points(lo=0), _check_rec_W, n_max=1000, table_label="W(n)")
_mk("CONJ-5.1.a", "congruence",
    "sum_{k=0..n-1} (8k+9)W_k^2 = n (mod 2n)",
    ("n",), _n_points(), _check_conj_5_1_a, deep={"n_max": 2000})
_mk("CONJ-5.1.b", "congruence",
    "(1/p)*sum_{k=0..p-1} (8k+9)W_k^2 = 24 + 10(-1/p) - 9(p/3) - 18(3/p) (mod p^2)",
    ("p",), _prime_points(2), _check_conj_5_1_b,
    prime_hi=500, range_keys=_PRIME_KEYS)
_mk("REM-5.1", "congruence",
    "sum_{k=0..p-1} W_k^2 = 2 (mod p) for primes p > 3",
    ("p",), _prime_points(3), _check_rem_5_1,
    prime_hi=500, range_keys=_PRIME_KEYS)
_mk("CONJ-5.2.abc", "integrality",
    "gcd-scaled sums of k(k+1)(2k+1)*w_k^(h)(x)^m (plain and alternating) lie in Z[x]",
    ("part", "h", "m", "n"), _points_conj_5_2, _check_conj_5_2,
    n_max=40, range_keys=("n_max", "h_max", "m_max"))
_mk("CONJ-5.3.ab", "integrality",
    "gcd-scaled sums of k(k+1)(2k+1)*S_k^(h)(x)^m (plain and alternating) lie in Z[x]",
    ("part", "h", "m", "n"), _points_conj_5_3, _check_conj_5_3,
    n_max=40, range_keys=("n_max", "h_max", "m_max"),
    notes=lambda rng: {"prefactor_5_9": _conj_5_9_prefactor()})

_mk("MUT-THM-1.1.i", "divisibility",
    "mutation fixture: weight (2k+1) perturbed to (2k+2); must yield a counterexample",
    ("n",), _n_points(), _check_mut_thm_1_1_i, n_max=25, expect_counterexample=True)
_mk("MUT-THM-1.2", "divisibility",
    "mutation fixture: weight (8k+9) perturbed to (8k+10); must yield a counterexample",
    ("n",), _n_points(), _check_mut_thm_1_2, n_max=25, expect_counterexample=True)
_mk("MUT-ID-1.8", "identity",
    "mutation fixture: weight (2k+3) perturbed to (2k+4); must yield a counterexample",
    ("n",), _n_points(), _check_mut_id_1_8, n_max=25, expect_counterexample=True)
_mk("MUT-LEM-2.3", "polynomial-divisibility",
    "mutation fixture: [k+2]_q perturbed to [k+3]_q at a = b = 1; must yield a counterexample",
    ("n",), _n_points(), _check_mut_lem_2_3, n_max=25, expect_counterexample=True)
