"""Exact arithmetic in Q(sqrt q) for a fixed prime q.

A :class:`Coeff` is ``a + b*v`` with ``v = sqrt(q)`` and rational ``a``,
``b``.  Every structure constant in this package is such a number.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import ValidationError


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class Coeff:
    __slots__ = ("a", "b", "q")

    def __init__(self, a, b, q: int):
        self.a = _frac(a)
        self.b = _frac(b)
        self.q = q

    # constructors
    @classmethod
    def zero(cls, q: int) -> "Coeff":
        return cls(0, 0, q)

    @classmethod
    def one(cls, q: int) -> "Coeff":
        return cls(1, 0, q)

    @classmethod
    def v(cls, q: int) -> "Coeff":
        return cls(0, 1, q)

    def _lift(self, other) -> "Coeff":
        if isinstance(other, Coeff):
            if other.q != self.q:
                raise ValidationError(f"mixing coefficients for q={self.q} and q={other.q}")
            return other
        return Coeff(_frac(other), 0, self.q)

    def __add__(self, other):
        o = self._lift(other)
        return Coeff(self.a + o.a, self.b + o.b, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return Coeff(self.a - o.a, self.b - o.b, self.q)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Coeff(-self.a, -self.b, self.q)

    def __mul__(self, other):
        if not isinstance(other, Coeff):
            f = _frac(other)
            return Coeff(self.a * f, self.b * f, self.q)
        o = self._lift(other)
        return Coeff(self.a * o.a + self.b * o.b * self.q, self.a * o.b + self.b * o.a, self.q)

    __rmul__ = __mul__

    def conjugate(self) -> "Coeff":
        return Coeff(self.a, -self.b, self.q)

    def norm(self) -> Fraction:
        return self.a * self.a - self.q * self.b * self.b

    def inverse(self) -> "Coeff":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt q)")
        return Coeff(self.a / n, -self.b / n, self.q)

    def __truediv__(self, other):
        if not isinstance(other, Coeff):
            f = _frac(other)
            if f == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt q)")
            return Coeff(self.a / f, self.b / f, self.q)
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        out = Coeff.one(self.q)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, Coeff):
            return self.q == other.q and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.q))

    def __repr__(self):
        return f"Coeff({self.a}, {self.b}, q={self.q})"

    def __str__(self):
        if self.b == 0:
            return f"({self.a})"
        return f"({self.a},{self.b})"

    def to_json(self) -> dict:
        return {"rat": str(self.a), "srt": str(self.b)}

    @classmethod
    def from_json(cls, data, q: int) -> "Coeff":
        return cls(Fraction(data["rat"]), Fraction(data["srt"]), q)


@functools.lru_cache(maxsize=4096)
def v_pow(e: int, q: int) -> Coeff:
    """v^e with v = sqrt(q); exact for negative e too."""
    if e >= 0:
        if e % 2 == 0:
            return Coeff(q ** (e // 2), 0, q)
        return Coeff(0, q ** ((e - 1) // 2), q)
    # v^e = v^(e + 2k) / q^k, shifting to a nonnegative exponent
    k = (-e + 1) // 2
    pos = v_pow(e + 2 * k, q)
    return pos / (q**k)


def q_pow(e: int, q: int) -> Fraction:
    return Fraction(q) ** e
