"""Exact arithmetic in Q and Q(i), plus (q-)Pochhammer symbols.

Rationals are plain :class:`fractions.Fraction`.  A Gaussian rational
``(a + b*i)/d`` is stored as three Python ints with ``d > 0`` and
``gcd(a, b, d) == 1``, which keeps products cheap: one gcd per result
instead of the two that a pair of Fractions would need.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

Rat = Fraction

__all__ = [
    "Rat",
    "GaussianRational",
    "GR",
    "as_gr",
    "parse_rat",
    "parse_gr",
    "ZERO",
    "ONE",
    "I",
    "exact_sqrt",
    "pochhammer",
    "q_pochhammer",
]


class GaussianRational:
    """An element ``(a + b i) / d`` of Q(i)."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = _to_fraction(re)
        im = _to_fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @classmethod
    def from_complex(cls, z: complex) -> "GaussianRational":
        """Exact value of a binary64 complex number."""
        z = complex(z)
        return cls(Fraction(z.real), Fraction(z.imag))

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def is_real(self) -> bool:
        return self._b == 0

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def abs2(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def real_value(self) -> Fraction:
        """Return the real part, raising if the imaginary part is nonzero."""
        if self._b:
            raise ValueError(f"expected a real value, got {self}")
        return Fraction(self._a, self._d)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d,
            self._b * o._d + o._b * self._d,
            self._d * o._d,
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = -self._a, -self._b, self._d
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational._raw(self._a * self._d, -self._b * self._d, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison / conversion ---------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __complex__(self):
        return complex(Fraction(self._a, self._d), Fraction(self._b, self._d))

    def __repr__(self):
        return f"GR({self})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return _fmt(re_)
        if re_ == 0:
            return f"{_fmt(im_)}*i"
        sign = "+" if im_ > 0 else "-"
        return f"{_fmt(re_)}{sign}{_fmt(abs(im_))}*i"

    def to_json(self) -> str:
        """``"p/q"`` for reals, ``"p/q+r/s*i"`` otherwise (integers keep ``/1``)."""
        re_, im_ = self.re, self.im
        r = f"{re_.numerator}/{re_.denominator}"
        if im_ == 0:
            return r
        sign = "+" if im_ > 0 else "-"
        return f"{r}{sign}{abs(im_.numerator)}/{im_.denominator}*i"


GR = GaussianRational
ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)


def _fmt(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, float):
        return Fraction(v)
    raise TypeError(f"cannot convert {type(v).__name__} to an exact rational")


def _coerce(v):
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, int):
        return GaussianRational._raw(v, 0, 1)
    if isinstance(v, Fraction):
        return GaussianRational._raw(v.numerator, 0, v.denominator)
    return NotImplemented


def as_gr(v) -> GaussianRational:
    """Convert int, Fraction, complex-literal string or GR to a GaussianRational."""
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, str):
        return parse_gr(v)
    if isinstance(v, complex):
        return GaussianRational.from_complex(v)
    return GaussianRational(v)


_RAT = r"[0-9]+(?:/[0-9]+)?"
_GR_RE = re.compile(
    rf"^\s*(?:(?P<re>[+-]?{_RAT}))?\s*"
    rf"(?:(?P<sign>[+-])?\s*(?:(?P<im>{_RAT})\s*)?\*?\s*i)?\s*$"
)


def parse_rat(text: str) -> Fraction:
    """Parse an exact rational string such as ``"3/2"`` or ``"-4"``.

    Decimal notation is refused so that no value silently loses precision.
    """
    text = text.strip()
    if not re.fullmatch(rf"[+-]?{_RAT}", text):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def parse_gr(text: str) -> GaussianRational:
    """Parse ``"3/2"``, ``"2+i"``, ``"1/4-1/4*i"``, ``"-i"`` and similar."""
    m = _GR_RE.match(text)
    if not m or not text.strip() or (m.group("re") is None and "i" not in text):
        raise ValueError(f"not an exact Gaussian rational: {text!r}")
    re_ = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_ = Fraction(0)
    if text.strip().endswith("i"):
        im_ = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("sign") == "-":
            im_ = -im_
        elif m.group("sign") is None and m.group("re") is not None:
            if m.group("im") is not None:
                raise ValueError(f"not an exact Gaussian rational: {text!r}")
            re_, im_ = Fraction(0), re_  # "2i", "-3/2*i"
    return GaussianRational(re_, im_)


def exact_sqrt(q: Fraction) -> Fraction:
    """Exact square root of a nonnegative rational; ValueError if irrational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative argument")
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise ValueError(f"{q} has no rational square root")
    return Fraction(rn, rd)


def pochhammer(a, n: int) -> GaussianRational:
    """Rising factorial ``a (a+1) ... (a+n-1)``; 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = as_gr(a)
    out = ONE
    for k in range(n):
        out = out * (a + k)
    return out


def q_pochhammer(a, q, n: int) -> GaussianRational:
    """``prod_{k<n} (1 - a q^k)``; 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = as_gr(a)
    q = as_gr(q)
    out = ONE
    t = a
    for _ in range(n):
        out = out * (1 - t)
        t = t * q
    return out
