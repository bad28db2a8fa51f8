"""Exact arithmetic in quadratic extensions Q(sqrt(d)).

A ``Quadratic`` is u + v*sqrt(d) with rational u, v and a fixed nonzero
integer d.  Arithmetic is exact; elements with different d never mix.
"""
from __future__ import annotations

from fractions import Fraction


class MismatchedExtension(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Quadratic:
    """u + v*sqrt(d), exact."""

    __slots__ = ("u", "v", "d")

    def __init__(self, u, v, d: int):
        if d == 0:
            raise ValueError("Quadratic: d must be nonzero")
        object.__setattr__(self, "u", _frac(u))
        object.__setattr__(self, "v", _frac(v))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Quadratic is immutable")

    @classmethod
    def sqrt_of(cls, d: int) -> "Quadratic":
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def conjugate(self) -> "Quadratic":
        return Quadratic(self.u, -self.v, self.d)

    def norm(self) -> Fraction:
        return self.u * self.u - self.v * self.v * self.d

    def _lift(self, other):
        if isinstance(other, Quadratic):
            if other.d != self.d:
                raise MismatchedExtension(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) elements")
            return other
        if isinstance(other, (int, Fraction)):
            return Quadratic(other, 0, self.d)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        if isinstance(other, Quadratic):
            if other.d != self.d:
                return self.is_rational and other.is_rational and self.u == other.u
            return self.u == other.u and self.v == other.v
        return NotImplemented

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.d))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quadratic(self.u + o.u, self.v + o.v, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Quadratic(-self.u, -self.v, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quadratic(self.u - o.u, self.v - o.v, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quadratic(self.u * o.u + self.v * o.v * self.d,
                         self.u * o.v + self.v * o.u, self.d)

    __rmul__ = __mul__

    def inverse(self) -> "Quadratic":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Quadratic element with zero norm")
        return Quadratic(self.u / n, -self.v / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exp: int):
        if exp < 0:
            return self.inverse() ** (-exp)
        result = Quadratic(1, 0, self.d)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            exp >>= 1
            if exp:
                base = base * base
        return result

    def __repr__(self):
        return f"Quadratic({self.u}, {self.v}, d={self.d})"

    def __str__(self):
        return f"{self.u} + {self.v}*sqrt({self.d})"
