"""Dense exact univariate polynomial arithmetic over int/Fraction
coefficients, q-integers, q-binomials, cyclotomic polynomials, and the
Schroder/Narayana polynomial families.

Coefficients are stored in ascending degree order in a canonical form with
no trailing zeros; the zero polynomial has degree ``None``.  Integer and
Fraction coefficients may be mixed freely; Fractions that reduce to integers
are normalized back to int.
"""
from __future__ import annotations

import math
import re
import threading
from fractions import Fraction

from . import sequences


class DivisionByZeroPolynomial(ZeroDivisionError):
    pass


class NotDivisible(ArithmeticError):
    """Exact polynomial division failed; carries the offending remainder."""

    def __init__(self, message: str, remainder: "Poly"):
        super().__init__(message)
        self.remainder = remainder


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# Schoolbook multiplication below this operand length; Kronecker packing above.
_KRON_MIN = 50


def _mul_school(a: tuple, b: tuple) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _kron_nonneg(a: list[int], b: list[int], width: int) -> list[int]:
    """Multiply polynomials with nonnegative int coefficients by packing them
    into big integers (width bytes per coefficient) and using int multiplication."""
    pa = b"".join(c.to_bytes(width, "little") for c in a)
    pb = b"".join(c.to_bytes(width, "little") for c in b)
    n = int.from_bytes(pa, "little") * int.from_bytes(pb, "little")
    nlen = len(a) + len(b) - 1
    buf = n.to_bytes((nlen + 1) * width, "little")
    return [int.from_bytes(buf[i * width:(i + 1) * width], "little") for i in range(nlen)]


def _split_signs(a: tuple) -> tuple[list[int], list[int]]:
    pos = [c if c > 0 else 0 for c in a]
    neg = [-c if c < 0 else 0 for c in a]
    return pos, neg


def _mul_kronecker(a: tuple, b: tuple) -> list:
    bits = (max(abs(c) for c in a).bit_length()
            + max(abs(c) for c in b).bit_length()
            + min(len(a), len(b)).bit_length() + 1)
    width = (bits + 7) // 8
    ap, an = _split_signs(a)
    bp, bn = _split_signs(b)
    nlen = len(a) + len(b) - 1
    out = [0] * nlen

    def acc(x, y, sign):
        if any(x) and any(y):
            prod = _kron_nonneg(x, y, width)
            for i, v in enumerate(prod):
                if v:
                    out[i] += sign * v

    acc(ap, bp, 1)
    acc(an, bn, 1)
    acc(ap, bn, -1)
    acc(an, bp, -1)
    return out


def _mul_coeffs(a: tuple, b: tuple) -> list:
    if not a or not b:
        return []
    if (len(a) >= _KRON_MIN and len(b) >= _KRON_MIN
            and all(type(c) is int for c in a) and all(type(c) is int for c in b)):
        return _mul_kronecker(a, b)
    return _mul_school(a, b)


class Poly:
    """Dense univariate polynomial with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs)) if other else ZERO
        if isinstance(other, Poly):
            return Poly(_mul_coeffs(self.coeffs, other.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("Poly power must be >= 0")
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            exp >>= 1
            if exp:
                base = base * base
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero or k == 0:
            return self
        return Poly((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def div_rem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Long division: self = q * other + r with deg r < deg other.

        Stays in integers while leading-coefficient divisions are exact,
        lifting to Fractions otherwise.
        """
        if not isinstance(other, Poly):
            other = _coerce(other)
        if other is None or other.is_zero:
            raise DivisionByZeroPolynomial("polynomial division by zero")
        db = other.degree
        if self.degree is None or self.degree < db:
            return ZERO, self
        a = list(self.coeffs)
        lead = other.coeffs[-1]
        body = other.coeffs[:-1]
        q = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if not c:
                continue
            if lead == 1:
                step = c
            elif lead == -1:
                step = -c
            elif isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
                step = c // lead
            else:
                step = Fraction(c) / Fraction(lead)
            q[i - db] = step
            for j, y in enumerate(body):
                if y:
                    a[i - db + j] -= step * y
            a[i] = 0
        return Poly(q), Poly(a[:db])

    def __mod__(self, other):
        return self.div_rem(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Return q with self = other * q, or raise NotDivisible.

        For integer inputs the quotient must also be integer (divisibility
        in Z[x], not Q[x]).
        """
        q, r = self.div_rem(other)
        if not r.is_zero:
            raise NotDivisible(f"remainder {r.render()} is nonzero", r)
        if self.is_integral() and other.is_integral() and not q.is_integral():
            raise NotDivisible("quotient is not integer-coefficient", r)
        return q

    def scaled(self, s) -> "Poly":
        """Exact scalar multiple (s may be a Fraction)."""
        return Poly(tuple(Fraction(c) * s for c in self.coeffs))

    def render(self, var: str = "x") -> str:
        """Canonical text form: 'c0 + c1*x + c2*x^2 + ...' with zero terms omitted."""
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = var if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    _TERM_RE = re.compile(
        r"^(?:(?P<coef>\d+(?:/\d+)?)(?:\*(?=[A-Za-z]))?)?"
        r"(?:(?P<var>[A-Za-z][A-Za-z0-9_]*)(?:\^(?P<exp>\d+))?)?$"
    )

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse the ``render`` format back into a polynomial."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial string")
        s = s.replace("-", "+-")
        terms = [t.strip() for t in s.split("+")]
        coeffs: dict[int, Fraction] = {}
        var_seen = None
        for term in terms:
            if not term:
                continue
            sign = 1
            if term.startswith("-"):
                sign = -1
                term = term[1:].strip()
            m = cls._TERM_RE.match(term.replace(" ", ""))
            if not m or (m.group("coef") is None and m.group("var") is None):
                raise ValueError(f"cannot parse polynomial term {term!r}")
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if m.group("var"):
                if var_seen is None:
                    var_seen = m.group("var")
                elif var_seen != m.group("var"):
                    raise ValueError("mixed variable names in polynomial string")
                exp = int(m.group("exp")) if m.group("exp") else 1
            else:
                exp = 0
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
        if not coeffs:
            return ZERO
        out = [Fraction(0)] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return cls(out)

    def __repr__(self):
        return f"Poly({self.render()!r})"


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return None


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def q_integer(n: int) -> Poly:
    """q-analogue of n: 1 + q + ... + q^(n-1); zero polynomial for n = 0."""
    if n < 0:
        raise ValueError("q_integer: n must be >= 0")
    return Poly((1,) * n)


_QBINOM_ROWS: list[list[Poly]] = [[ONE]]
_QBINOM_LOCK = threading.Lock()


def q_binomial(n: int, k: int) -> Poly:
    """Gaussian binomial [n k]_q built by the Pascal-style recursion
    [n k] = q^k [n-1 k] + [n-1 k-1]; zero for k > n, one for k = 0."""
    if n < 0 or k < 0:
        raise ValueError("q_binomial: need n >= 0 and k >= 0")
    if k > n:
        return ZERO
    if len(_QBINOM_ROWS) <= n:
        with _QBINOM_LOCK:
            while len(_QBINOM_ROWS) <= n:
                m = len(_QBINOM_ROWS)
                prev = _QBINOM_ROWS[m - 1]
                row = [ONE]
                for j in range(1, m):
                    a = prev[j].coeffs
                    b = prev[j - 1].coeffs
                    out = [0] * max(len(a) + j, len(b))
                    for i, x in enumerate(b):
                        out[i] = x
                    for i, x in enumerate(a):
                        out[i + j] += x
                    row.append(Poly(out))
                row.append(ONE)
                _QBINOM_ROWS.append(row)
    return _QBINOM_ROWS[n][k]


_CYCLOTOMIC: dict[int, Poly] = {}
_CYCLOTOMIC_LOCK = threading.Lock()


def cyclotomic(n: int) -> Poly:
    """n-th cyclotomic polynomial, by exact division of q^n - 1 by the
    product of the lower cyclotomics over proper divisors of n."""
    if n < 1:
        raise ValueError("cyclotomic: n must be >= 1")
    got = _CYCLOTOMIC.get(n)
    if got is not None:
        return got
    with _CYCLOTOMIC_LOCK:
        return _cyclotomic_locked(n)


def _cyclotomic_locked(n: int) -> Poly:
    got = _CYCLOTOMIC.get(n)
    if got is not None:
        return got
    prod = ONE
    for d in range(1, n):
        if n % d == 0:
            prod = prod * _cyclotomic_locked(d)
    q_n_minus_1 = Poly((-1,) + (0,) * (n - 1) + (1,))
    quot, rem = q_n_minus_1.div_rem(prod)
    if not rem.is_zero:
        raise AssertionError(f"cyclotomic({n}): division left a remainder")
    _CYCLOTOMIC[n] = quot
    return quot


def s_poly(n: int) -> Poly:
    """Narayana polynomial sum_{k=1..n} N(n, k) x^(k-1) (x+1)^(n-k)."""
    if n < 1:
        raise ValueError("s_poly: n must be >= 1")
    xp1 = [ONE]
    for _ in range(n - 1):
        xp1.append(xp1[-1] * Poly((1, 1)))
    acc = ZERO
    for k in range(1, n + 1):
        acc = acc + (xp1[n - k] * sequences.narayana(n, k)).shift(k - 1)
    return acc


def big_schroder_poly(n: int, h: int = 1) -> Poly:
    """Large Schroder polynomial family: coefficient of x^k is
    (C(n+k, 2k) * Catalan(k))^h."""
    if n < 0 or h < 1:
        raise ValueError("big_schroder_poly: need n >= 0 and h >= 1")
    cat = sequences.catalan_values(n)
    return Poly(tuple((math.comb(n + k, 2 * k) * cat[k]) ** h for k in range(n + 1)))


def w_poly(n: int, h: int = 1) -> Poly:
    """w-polynomial family: coefficient of x^(k-1) is w(n, k)^h."""
    if n < 1 or h < 1:
        raise ValueError("w_poly: need n >= 1 and h >= 1")
    return Poly(tuple(sequences.w_coeff(n, k) ** h for k in range(1, n + 1)))


def _reset_caches() -> None:
    """Testing hook: drop q-binomial and cyclotomic caches."""
    with _QBINOM_LOCK:
        del _QBINOM_ROWS[1:]
    with _CYCLOTOMIC_LOCK:
        _CYCLOTOMIC.clear()
