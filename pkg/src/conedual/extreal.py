"""Exact arithmetic in the extended nonnegative reals: rationals >= 0 plus +inf.

Conventions: r + inf = inf for every r, r * inf = inf for r > 0, and
0 * inf = 0.  The order is total with +inf on top.  Values are reduced at
construction, immutable by convention, and hashable, so equality is
structural.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import EmptyList, ParseError, UndefinedDifference

__all__ = [
    "ExtReal",
    "INF",
    "ZERO",
    "ONE",
    "as_extreal",
    "ext_min",
    "ext_max",
    "ext_sup",
    "sub_partial",
    "parse_extreal",
]

_HASH_INF = hash(float("inf"))


class ExtReal:
    """A nonnegative rational in lowest terms, or +inf (encoded as den == 0)."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, Fraction) and den == 1:
            num, den = num.numerator, num.denominator
        if isinstance(num, ExtReal) and den == 1:
            self.num = num.num
            self.den = num.den
            return
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError(f"expected integers, got {num!r}/{den!r}")
        if den <= 0:
            raise ValueError("denominator must be positive")
        if num < 0:
            raise ValueError("negative values are outside the extended nonnegative reals")
        g = gcd(num, den)
        self.num = num // g
        self.den = den // g

    @classmethod
    def _raw(cls, num, den):
        v = object.__new__(cls)
        v.num = num
        v.den = den
        return v

    @classmethod
    def from_fraction(cls, f: Fraction) -> "ExtReal":
        if f < 0:
            raise ValueError("negative values are outside the extended nonnegative reals")
        return cls._raw(f.numerator, f.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_finite(self) -> bool:
        return self.den != 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0 and self.den != 0

    def as_fraction(self) -> Fraction:
        if self.den == 0:
            raise ValueError("infinity has no rational value")
        return Fraction(self.num, self.den)

    def __add__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == 0 or other.den == 0:
            return INF
        num = self.num * other.den + other.num * self.den
        den = self.den * other.den
        g = gcd(num, den)
        return ExtReal._raw(num // g, den // g)

    __radd__ = __add__

    def __mul__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == 0:
            return ZERO if other.num == 0 and other.den != 0 else INF
        if other.den == 0:
            return ZERO if self.num == 0 else INF
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        return ExtReal._raw(
            (self.num // g1) * (other.num // g2),
            (self.den // g2) * (other.den // g1),
        )

    __rmul__ = __mul__

    def __sub__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        if other.den == 0:
            raise UndefinedDifference("cannot subtract infinity")
        if self.den == 0:
            return INF
        num = self.num * other.den - other.num * self.den
        if num < 0:
            raise UndefinedDifference(f"{other} exceeds {self}")
        den = self.den * other.den
        g = gcd(num, den)
        return ExtReal._raw(num // g, den // g)

    def __truediv__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        if other.den == 0:
            raise ValueError("division by infinity is not supported")
        if other.num == 0:
            raise ZeroDivisionError("division by zero")
        if self.den == 0:
            return INF
        return ExtReal(self.num * other.den, self.den * other.num)

    def __le__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        if other.den == 0:
            return True
        if self.den == 0:
            return False
        return self.num * other.den <= other.num * self.den

    def __lt__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == 0:
            return False
        if other.den == 0:
            return True
        return self.num * other.den < other.num * self.den

    def __ge__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__le__(self)

    def __gt__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__lt__(self)

    def __eq__(self, other):
        other = as_extreal(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return NotImplemented
        return not eq

    def __hash__(self):
        if self.den == 0:
            return _HASH_INF
        return hash(Fraction(self.num, self.den))

    def __bool__(self):
        return self.num != 0

    def __str__(self):
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"ExtReal({self})"


ZERO = ExtReal._raw(0, 1)
ONE = ExtReal._raw(1, 1)
INF = ExtReal._raw(1, 0)


def as_extreal(x):
    """Coerce an int, Fraction, or ExtReal; NotImplemented otherwise."""
    if isinstance(x, ExtReal):
        return x
    if isinstance(x, int):
        if x < 0:
            raise ValueError("negative values are outside the extended nonnegative reals")
        return ExtReal._raw(x, 1)
    if isinstance(x, Fraction):
        return ExtReal.from_fraction(x)
    return NotImplemented


def sub_partial(a, b) -> ExtReal:
    """a - b, defined only when b is finite and b <= a."""
    a = as_extreal(a)
    return a - b


def ext_min(values) -> ExtReal:
    vs = [as_extreal(v) for v in values]
    if not vs:
        raise EmptyList("min over an empty collection")
    out = vs[0]
    for v in vs[1:]:
        if v < out:
            out = v
    return out


def ext_max(values) -> ExtReal:
    vs = [as_extreal(v) for v in values]
    if not vs:
        raise EmptyList("max over an empty collection")
    out = vs[0]
    for v in vs[1:]:
        if out < v:
            out = v
    return out


# For nonempty finite collections the supremum is attained.
ext_sup = ext_max


def parse_extreal(text: str) -> ExtReal:
    """Parse "p/q" (reduced or not), the integer shorthand "p", or "inf"."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if s == "inf":
        return INF
    num_s, sep, den_s = s.partition("/")
    try:
        num = int(num_s)
        den = int(den_s) if sep else 1
    except ValueError:
        raise ParseError(f"not an extended rational: {text!r}") from None
    if num < 0:
        raise ParseError(f"negative values are rejected: {text!r}")
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    if den < 0:
        raise ParseError(f"negative denominator: {text!r}")
    return ExtReal(num, den)
