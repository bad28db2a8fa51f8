"""Exact integer sequences: Motzkin, central trinomial, Catalan, Narayana,
Delannoy, Schroder numbers, their (b, c) generalizations, and the signed
Motzkin analogue W.

Every function returns exact Python ints.  Sequences with prefix tables are
cached per process; the cache size can be capped with the environment
variable MOTZKINLAB_CACHE_LIMIT (entries per sequence, 0 = unlimited).
Values past the cap are recomputed on demand, so results never depend on the
cache.  All functions are pure and safe to call from multiple threads.
"""
from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass

_CACHE_LIMIT = max(0, int(os.environ.get("MOTZKINLAB_CACHE_LIMIT", "0") or "0"))


@dataclass(frozen=True)
class TrinomialParams:
    """Parameter pair (b, c) for the generalized trinomial/Motzkin families.

    The discriminant d = b^2 - 4c is always derived, never stored.
    """

    b: int
    c: int

    @property
    def d(self) -> int:
        return self.b * self.b - 4 * self.c


class _Table:
    """Append-only prefix cache fed by a self-contained per-index step.

    ``step(n)`` must not read the table (each entry is computed from scratch),
    which keeps the optional size cap trivial: indices past the cap are
    simply computed without being stored.
    """

    def __init__(self, step):
        self._step = step
        self._vals: list[int] = []
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        vals = self._vals
        if n < len(vals):
            return vals[n]
        if _CACHE_LIMIT and n >= _CACHE_LIMIT:
            return self._step(n)
        with self._lock:
            while len(self._vals) <= n:
                self._vals.append(self._step(len(self._vals)))
        return self._vals[n]

    def prefix(self, n: int) -> list[int]:
        """Values for indices 0..n as a fresh list."""
        if _CACHE_LIMIT and n >= _CACHE_LIMIT:
            return [self.get(i) for i in range(n + 1)]
        self.get(n)
        return self._vals[: n + 1]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with arbitrary integer upper index.

    For n >= 0 this is the ordinary C(n, k); for n < 0 it is the value of
    the falling-factorial product n(n-1)...(n-k+1)/k!, which equals
    (-1)^k * C(k - n - 1, k).
    """
    if k < 0:
        raise ValueError("binomial: k must be >= 0")
    if n >= 0:
        return math.comb(n, k)
    v = math.comb(k - n - 1, k)
    return -v if k & 1 else v


def _catalan_step(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


_CATALAN = _Table(_catalan_step)


def catalan(k: int) -> int:
    """Catalan number C(2k, k)/(k+1)."""
    if k < 0:
        raise ValueError("catalan: k must be >= 0")
    return _CATALAN.get(k)


def catalan_values(k_max: int) -> list[int]:
    return _CATALAN.prefix(k_max)


def _central_binomial_step(k: int) -> int:
    return math.comb(2 * k, k)


_CENTRAL_BINOMIAL = _Table(_central_binomial_step)


def central_binomial(k: int) -> int:
    """C(2k, k)."""
    return _CENTRAL_BINOMIAL.get(k)


def narayana(m: int, k: int) -> int:
    """Narayana number C(m, k) * C(m, k-1) / m for m >= k >= 1."""
    if k < 1 or m < k:
        raise ValueError("narayana: need m >= k >= 1")
    q, r = divmod(math.comb(m, k) * math.comb(m, k - 1), m)
    if r:
        raise AssertionError(f"narayana({m}, {k}) is not an integer")
    return q


def _motzkin_step(n: int) -> int:
    # sum_k C(n, 2k) * Catalan(k) with a running binomial update
    cat = _CATALAN.prefix(n // 2 + 1)
    b = 1
    tot = 0
    for k in range(n // 2 + 1):
        tot += b * cat[k]
        b = b * (n - 2 * k) * (n - 2 * k - 1) // ((2 * k + 1) * (2 * k + 2))
    return tot


_MOTZKIN = _Table(_motzkin_step)


def motzkin(n: int) -> int:
    """Motzkin number: sum_k C(n, 2k) * Catalan(k)."""
    if n < 0:
        raise ValueError("motzkin: n must be >= 0")
    return _MOTZKIN.get(n)


def motzkin_values(n_max: int) -> list[int]:
    return _MOTZKIN.prefix(n_max)


def _central_trinomial_step(n: int) -> int:
    cb = _CENTRAL_BINOMIAL.prefix(n // 2 + 1)
    b = 1
    tot = 0
    for k in range(n // 2 + 1):
        tot += b * cb[k]
        b = b * (n - 2 * k) * (n - 2 * k - 1) // ((2 * k + 1) * (2 * k + 2))
    return tot


_CENTRAL_TRINOMIAL = _Table(_central_trinomial_step)


def central_trinomial(n: int) -> int:
    """Central trinomial coefficient: constant term of (1 + x + 1/x)^n,
    computed as sum_k C(n, 2k) * C(2k, k)."""
    if n < 0:
        raise ValueError("central_trinomial: n must be >= 0")
    return _CENTRAL_TRINOMIAL.get(n)


def central_trinomial_values(n_max: int) -> list[int]:
    return _CENTRAL_TRINOMIAL.prefix(n_max)


class _ParamTables:
    """(b, c)-keyed family of prefix tables."""

    def __init__(self, make_step):
        self._make_step = make_step
        self._tables: dict[tuple[int, int], _Table] = {}
        self._lock = threading.Lock()

    def table(self, b: int, c: int) -> _Table:
        key = (b, c)
        tab = self._tables.get(key)
        if tab is None:
            with self._lock:
                tab = self._tables.setdefault(key, _Table(self._make_step(b, c)))
        return tab


def _gen_step(weights_table):
    def make(b: int, c: int):
        def step(n: int) -> int:
            wt = weights_table.prefix(n // 2 + 1)
            bb = 1
            tot = 0
            for k in range(n // 2 + 1):
                tot += bb * wt[k] * b ** (n - 2 * k) * c**k
                bb = bb * (n - 2 * k) * (n - 2 * k - 1) // ((2 * k + 1) * (2 * k + 2))
            return tot

        return step

    return make


_GEN_TRINOMIAL = _ParamTables(_gen_step(_CENTRAL_BINOMIAL))
_GEN_MOTZKIN = _ParamTables(_gen_step(_CATALAN))


def gen_trinomial(n: int, b: int, c: int) -> int:
    """Generalized central trinomial coefficient:
    sum_k C(n, 2k) * C(2k, k) * b^(n-2k) * c^k."""
    if n < 0:
        raise ValueError("gen_trinomial: n must be >= 0")
    return _GEN_TRINOMIAL.table(b, c).get(n)


def gen_trinomial_values(n_max: int, b: int, c: int) -> list[int]:
    return _GEN_TRINOMIAL.table(b, c).prefix(n_max)


def gen_motzkin(n: int, b: int, c: int) -> int:
    """Generalized Motzkin number:
    sum_k C(n, 2k) * Catalan(k) * b^(n-2k) * c^k."""
    if n < 0:
        raise ValueError("gen_motzkin: n must be >= 0")
    return _GEN_MOTZKIN.table(b, c).get(n)


def gen_motzkin_values(n_max: int, b: int, c: int) -> list[int]:
    return _GEN_MOTZKIN.table(b, c).prefix(n_max)


def _delannoy_step(n: int) -> int:
    # sum_k C(n, k) * C(n+k, k); the two-stage update keeps division exact
    r = 1
    tot = 0
    for k in range(n + 1):
        tot += r
        r = r * (n - k) // (k + 1)
        r = r * (n + k + 1) // (k + 1)
    return tot


_DELANNOY = _Table(_delannoy_step)


def delannoy(n: int) -> int:
    """Central Delannoy number: sum_k C(n, k) * C(n+k, k)."""
    if n < 0:
        raise ValueError("delannoy: n must be >= 0")
    return _DELANNOY.get(n)


def delannoy_values(n_max: int) -> list[int]:
    return _DELANNOY.prefix(n_max)


def _schroder_little_step(i: int) -> int:
    # table index i holds s_{i+1} = sum_{k=1}^{i+1} N(i+1, k) * 2^(i+1-k)
    n = i + 1
    return sum(narayana(n, k) * 2 ** (n - k) for k in range(1, n + 1))


_SCHRODER_LITTLE = _Table(_schroder_little_step)


def schroder_little(n: int) -> int:
    """Little Schroder number s_n = sum_k N(n, k) * 2^(n-k), defined for n >= 1."""
    if n < 1:
        raise ValueError("schroder_little: n must be >= 1 (s_0 is undefined)")
    return _SCHRODER_LITTLE.get(n - 1)


def schroder_little_values(n_max: int) -> list[int]:
    """[s_1, ..., s_n_max]."""
    return _SCHRODER_LITTLE.prefix(n_max - 1)


def _schroder_large_step(n: int) -> int:
    cat = _CATALAN.prefix(n)
    return sum(math.comb(n + k, 2 * k) * cat[k] for k in range(n + 1))


_SCHRODER_LARGE = _Table(_schroder_large_step)


def schroder_large(n: int) -> int:
    """Large Schroder number: sum_k C(n+k, 2k) * Catalan(k)."""
    if n < 0:
        raise ValueError("schroder_large: n must be >= 0")
    return _SCHRODER_LARGE.get(n)


def w_coeff(n: int, k: int) -> int:
    """Triangle entry w(n, k) = C(n-1, k-1) * C(n+k, k-1) / k for n >= k >= 1."""
    if k < 1 or n < k:
        raise ValueError("w_coeff: need n >= k >= 1")
    q, r = divmod(math.comb(n - 1, k - 1) * math.comb(n + k, k - 1), k)
    if r:
        raise AssertionError(f"w_coeff({n}, {k}) is not an integer")
    return q


def _motzkin_analog_w_step(n: int) -> int:
    # sum_k C(n, 2k) * C(2k, k)/(2k - 1); the k = 0 term is -1 and for k >= 1
    # the weight C(2k, k)/(2k - 1) equals 2 * Catalan(k - 1)
    cat = _CATALAN.prefix(max(n // 2, 1))
    b = 1
    tot = -1
    for k in range(1, n // 2 + 1):
        b = b * (n - 2 * k + 2) * (n - 2 * k + 1) // ((2 * k - 1) * (2 * k))
        tot += b * 2 * cat[k - 1]
    return tot


_MOTZKIN_ANALOG_W = _Table(_motzkin_analog_w_step)


def motzkin_analog_w(n: int) -> int:
    """Signed Motzkin analogue W_n = sum_k C(n, 2k) * C(2k, k)/(2k-1).

    W_0 = -1 and the family satisfies
    (n+3) W_{n+3} = (3n+7) W_{n+2} + (n-5) W_{n+1} - 3(n+1) W_n.
    """
    if n < 0:
        raise ValueError("motzkin_analog_w: n must be >= 0")
    return _MOTZKIN_ANALOG_W.get(n)


def motzkin_analog_w_values(n_max: int) -> list[int]:
    return _MOTZKIN_ANALOG_W.prefix(n_max)


def _reset_caches() -> None:
    """Testing hook: drop every cached table."""
    for tab in (_CATALAN, _CENTRAL_BINOMIAL, _MOTZKIN, _CENTRAL_TRINOMIAL,
                _DELANNOY, _SCHRODER_LITTLE, _SCHRODER_LARGE, _MOTZKIN_ANALOG_W):
        with tab._lock:
            tab._vals.clear()
    for fam in (_GEN_TRINOMIAL, _GEN_MOTZKIN):
        with fam._lock:
            fam._tables.clear()
