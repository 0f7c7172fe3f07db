"""Dense exact polynomials over Q(i), Laurent polynomials and rational functions.

A :class:`Poly` keeps its coefficients as Gaussian integers over one common
positive denominator::

    p = (sum_k (re[k] + i*im[k]) * t**k) / den

so products and sums run on plain Python ints and normalise once per result.
The variable tag is ``"eta"``, ``"x"`` or ``"z"``; mixing tags is an error.

The imaginary shifts of the difference operators become exact substitutions:
``x -> x + c`` (:func:`shift_x`) in the Wilson frame and ``z -> c z``
(:func:`scale_z`) in the Askey-Wilson frame, where ``z = exp(ix)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .numfield import ONE, ZERO, GaussianRational, as_gr

__all__ = [
    "Poly",
    "LaurentPoly",
    "RatFunc",
    "compose_eta",
    "decompose_eta",
    "shift_x",
    "scale_z",
    "ratfunc_is_zero",
    "poly_gcd",
    "sturm_chain",
    "sturm_count",
    "sturm_count_detailed",
    "cauchy_bound",
    "ENDPOINT_EPS",
]

VARIABLES = ("eta", "x", "z")
ENDPOINT_EPS = Fraction(1, 2**64)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class Poly:
    """Univariate polynomial with Gaussian-rational coefficients (lowest degree first)."""

    __slots__ = ("var", "_re", "_im", "_den")

    def __init__(self, coeffs: Iterable = (), var: str = "eta"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}")
        cs = [as_gr(c) for c in coeffs]
        den = reduce(_lcm, (c._d for c in cs), 1)
        re = [c._a * (den // c._d) for c in cs]
        im = [c._b * (den // c._d) for c in cs]
        Poly._fill(self, var, re, im, den)

    @staticmethod
    def _fill(obj, var, re, im, den):
        n = len(re)
        while n and re[n - 1] == 0 and im[n - 1] == 0:
            n -= 1
        if n < len(re):
            re = re[:n]
            im = im[:n]
        if n == 0:
            obj.var, obj._re, obj._im, obj._den = var, (), (), 1
            return obj
        if den < 0:
            re = [-v for v in re]
            im = [-v for v in im]
            den = -den
        g = den
        for v in re:
            if g == 1:
                break
            g = gcd(g, v)
        for v in im:
            if g == 1:
                break
            g = gcd(g, v)
        if g != 1:
            re = [v // g for v in re]
            im = [v // g for v in im]
            den //= g
        obj.var, obj._re, obj._im, obj._den = var, tuple(re), tuple(im), den
        return obj

    @classmethod
    def _raw(cls, var, re, im, den) -> "Poly":
        return Poly._fill(object.__new__(cls), var, list(re), list(im), den)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "eta") -> "Poly":
        return cls([0] * k + [c], var)

    @classmethod
    def const(cls, c, var: str = "eta") -> "Poly":
        return cls([c], var)

    @classmethod
    def identity(cls, var: str = "eta") -> "Poly":
        return cls([0, 1], var)

    # inspection -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        d = self._den
        return tuple(GaussianRational._raw(a, b, d) for a, b in zip(self._re, self._im))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._re) - 1

    def is_zero(self) -> bool:
        return not self._re

    def __bool__(self):
        return bool(self._re)

    def __len__(self):
        return len(self._re)

    def coeff(self, k: int) -> GaussianRational:
        if 0 <= k < len(self._re):
            return GaussianRational._raw(self._re[k], self._im[k], self._den)
        return ZERO

    @property
    def lc(self) -> GaussianRational:
        if not self._re:
            return ZERO
        return self.coeff(len(self._re) - 1)

    def is_real(self) -> bool:
        return not any(self._im)

    def real_coeffs(self) -> list[Fraction]:
        if not self.is_real():
            raise ValueError("polynomial has non-real coefficients")
        return [Fraction(a, self._den) for a in self._re]

    def low_order(self) -> int:
        """Multiplicity of the root at 0 (0 for the zero polynomial)."""
        for k, (a, b) in enumerate(zip(self._re, self._im)):
            if a or b:
                return k
        return 0

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}], var={self.var!r})"

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        return cls([_parse_json_gr(c) for c in data["coeffs"]], data["var"])

    # arithmetic -----------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Poly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        d1, d2 = self._den, o._den
        den = _lcm(d1, d2)
        m1, m2 = den // d1, den // d2
        n = max(len(self._re), len(o._re))
        re = [0] * n
        im = [0] * n
        for k, (a, b) in enumerate(zip(self._re, self._im)):
            re[k] = a * m1
            im[k] = b * m1
        for k, (a, b) in enumerate(zip(o._re, o._im)):
            re[k] += a * m2
            im[k] += b * m2
        return Poly._fill(object.__new__(Poly), self.var, re, im, den)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.var, [-a for a in self._re], [-b for b in self._im], self._den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale_by(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if not self._re or not other._re:
            return Poly((), self.var)
        ar, ai, br, bi = self._re, self._im, other._re, other._im
        n = len(ar) + len(br) - 1
        rr = [0] * n
        ri = [0] * n
        a_real = not any(ai)
        b_real = not any(bi)
        for j, (x, y) in enumerate(zip(ar, ai)):
            if x == 0 and y == 0:
                continue
            for k, (u, v) in enumerate(zip(br, bi)):
                if a_real and b_real:
                    rr[j + k] += x * u
                else:
                    rr[j + k] += x * u - y * v
                    ri[j + k] += x * v + y * u
        return Poly._fill(object.__new__(Poly), self.var, rr, ri, self._den * other._den)

    __rmul__ = __mul__

    def scale_by(self, c) -> "Poly":
        c = as_gr(c)
        a, b, d = c._a, c._b, c._d
        if b == 0:
            re = [x * a for x in self._re]
            im = [y * a for y in self._im]
        else:
            re = [x * a - y * b for x, y in zip(self._re, self._im)]
            im = [x * b + y * a for x, y in zip(self._re, self._im)]
        return Poly._fill(object.__new__(Poly), self.var, re, im, self._den * d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale_by(as_gr(other).inverse())
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Poly([1], self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (
                self.var == other.var
                and self._re == other._re
                and self._im == other._im
                and self._den == other._den
            )
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == Poly([other], self.var)
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self._re, self._im, self._den))

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over Q(i)."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dc = divisor.coeffs
        dn = len(dc) - 1
        inv_lc = dc[-1].inverse()
        if len(r) <= dn:
            return Poly((), self.var), self
        q = [ZERO] * (len(r) - dn)
        for k in range(len(r) - 1, dn - 1, -1):
            t = r[k] * inv_lc
            if not t:
                continue
            q[k - dn] = t
            for j in range(dn + 1):
                r[k - dn + j] = r[k - dn + j] - t * dc[j]
        return Poly(q, self.var), Poly(r[:dn], self.var)

    def exact_div(self, divisor: "Poly") -> "Poly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"inexact polynomial division (remainder {r!r})")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale_by(self.lc.inverse())

    def conj(self) -> "Poly":
        """Conjugate every coefficient (the ``*``-operation at fixed variable)."""
        return Poly._raw(self.var, self._re, [-b for b in self._im], self._den)

    def deriv(self) -> "Poly":
        re = [k * a for k, a in enumerate(self._re)][1:]
        im = [k * b for k, b in enumerate(self._im)][1:]
        return Poly._raw(self.var, re, im, self._den)

    def with_var(self, var: str) -> "Poly":
        return Poly._raw(var, self._re, self._im, self._den)

    def compose(self, inner: "Poly") -> "Poly":
        """``self(inner(t))``; the result carries ``inner``'s variable."""
        out = Poly((), inner.var)
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def reverse(self) -> "Poly":
        """``t**deg * self(1/t)``."""
        return Poly._raw(self.var, self._re[::-1], self._im[::-1], self._den)

    def shift_power(self, k: int) -> "Poly":
        """Multiply by ``t**k`` (``k >= 0``) or divide exactly by ``t**-k``."""
        if k >= 0:
            return Poly._raw(self.var, (0,) * k + self._re, (0,) * k + self._im, self._den)
        if self.low_order() < -k and self._re:
            raise ArithmeticError("negative shift drops nonzero coefficients")
        return Poly._raw(self.var, self._re[-k:], self._im[-k:], self._den)

    # evaluation -----------------------------------------------------------

    def __call__(self, t):
        """Exact Horner evaluation at an int, Fraction or GaussianRational."""
        t = as_gr(t)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def float_coeffs(self) -> list[complex]:
        d = self._den
        return [complex(Fraction(a, d), Fraction(b, d)) for a, b in zip(self._re, self._im)]

    def evalf(self, t):
        """Floating Horner evaluation; works elementwise on numpy arrays."""
        cs = self.float_coeffs()
        if self.is_real():
            cs = [c.real for c in cs]
        acc = 0.0 * t
        for c in reversed(cs):
            acc = acc * t + c
        return acc


def _parse_json_gr(text: str) -> GaussianRational:
    from .numfield import parse_gr

    return parse_gr(text)


class LaurentPoly:
    """``sum_k c_k z**k`` for ``min_exp <= k <= min_exp + len - 1``."""

    __slots__ = ("poly", "min_exp")

    def __init__(self, coeffs: Iterable = (), min_exp: int = 0, var: str = "z"):
        p = coeffs if isinstance(coeffs, Poly) else Poly(coeffs, var)
        if p.is_zero():
            self.poly, self.min_exp = p, 0
            return
        lo = p.low_order()
        self.poly = p.shift_power(-lo)
        self.min_exp = min_exp + lo

    @property
    def var(self) -> str:
        return self.poly.var

    @property
    def coeffs(self) -> tuple:
        return self.poly.coeffs

    @property
    def max_exp(self) -> int:
        return self.min_exp + self.poly.degree

    def coeff(self, k: int) -> GaussianRational:
        return self.poly.coeff(k - self.min_exp)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_symmetric(self) -> bool:
        """Invariant under ``z -> 1/z``."""
        if self.is_zero():
            return True
        return self.min_exp == -self.max_exp and self.poly.reverse() == self.poly

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.poly == other.poly and self.min_exp == other.min_exp

    def __hash__(self):
        return hash((self.poly, self.min_exp))

    def __repr__(self):
        return f"LaurentPoly([{', '.join(str(c) for c in self.coeffs)}], min_exp={self.min_exp})"

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = LaurentPoly([other], 0, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        p = self.poly.shift_power(self.min_exp - lo) + other.poly.shift_power(other.min_exp - lo)
        return LaurentPoly(p, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self.poly, self.min_exp)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = LaurentPoly([other], 0, self.var)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return LaurentPoly(self.poly.scale_by(other), self.min_exp)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(self.poly * other.poly, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def conj(self) -> "LaurentPoly":
        return LaurentPoly(self.poly.conj(), self.min_exp)

    def invert_variable(self) -> "LaurentPoly":
        """``z -> 1/z``."""
        return LaurentPoly(self.poly.reverse(), -self.max_exp)

    def __call__(self, z):
        z = as_gr(z)
        return self.poly(z) * z**self.min_exp

    def evalf(self, z):
        return self.poly.evalf(z) * z**self.min_exp

    def to_json(self) -> dict:
        d = self.poly.to_json()
        d["min_exp"] = self.min_exp
        return d


class RatFunc:
    """Quotient of two :class:`Poly` in the same variable.

    Arithmetic cross-multiplies without gcd reduction (common powers of the
    variable are cancelled, which is free); :meth:`canonical` produces the
    reduced form with monic denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, LaurentPoly):
            num = RatFunc.from_laurent(num)
        if isinstance(num, RatFunc):
            if den is not None:
                num = num / (den if isinstance(den, RatFunc) else RatFunc(den))
            self.num, self.den = num.num, num.den
            return
        if den is None:
            den = Poly([1], num.var)
        if isinstance(den, LaurentPoly):
            r = RatFunc(num) / RatFunc.from_laurent(den)
            self.num, self.den = r.num, r.den
            return
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        k = min(num.low_order() if num else den.low_order(), den.low_order())
        if k:
            num, den = num.shift_power(-k), den.shift_power(-k)
        self.num, self.den = num, den

    @classmethod
    def from_laurent(cls, lp: LaurentPoly) -> "RatFunc":
        if lp.min_exp >= 0:
            return cls(lp.poly.shift_power(lp.min_exp))
        return cls(lp.poly, Poly.monomial(-lp.min_exp, 1, lp.var))

    @property
    def var(self) -> str:
        return self.num.var

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (Poly, LaurentPoly)):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return RatFunc(Poly([other], self.var))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return RatFunc(self.num.scale_by(other), self.den)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return RatFunc(self.num.scale_by(as_gr(other).inverse()), self.den)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def conj(self) -> "RatFunc":
        return RatFunc(self.num.conj(), self.den.conj())

    def canonical(self) -> "RatFunc":
        """Reduced form: ``gcd(num, den) == 1`` and monic denominator."""
        g = poly_gcd(self.num, self.den)
        num = self.num.exact_div(g)
        den = self.den.exact_div(g)
        c = den.lc.inverse()
        out = object.__new__(RatFunc)
        out.num, out.den = num.scale_by(c), den.scale_by(c)
        return out

    def to_poly(self) -> Poly:
        """Exact quotient; ArithmeticError if the denominator does not divide."""
        return self.num.exact_div(self.den)

    def to_laurent(self) -> LaurentPoly:
        """Exact quotient allowing a monomial denominator factor."""
        k = self.den.low_order()
        q = self.num.exact_div(self.den.shift_power(-k))
        return LaurentPoly(q, -k)

    def map_poly(self, fn) -> "RatFunc":
        return RatFunc(fn(self.num), fn(self.den))

    def __call__(self, t):
        t = as_gr(t)
        return self.num(t) / self.den(t)

    def evalf(self, t):
        return self.num.evalf(t) / self.den.evalf(t)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


# substitution maps ----------------------------------------------------------


def _family_tag(family) -> str:
    tag = getattr(family, "family", family)
    if tag not in ("wilson", "aw"):
        raise ValueError(f"unknown family {family!r}")
    return tag


def compose_eta(p: Poly, family):
    """Substitute the sinusoidal coordinate.

    Wilson: ``eta -> x**2`` giving a :class:`Poly` in ``x``.  Askey-Wilson:
    ``eta -> (z + 1/z)/2`` giving a symmetric :class:`LaurentPoly` in ``z``.
    """
    if p.var != "eta":
        raise ValueError("compose_eta expects a polynomial in eta")
    tag = _family_tag(family)
    if tag == "wilson":
        n = len(p._re)
        re = [0] * max(2 * n - 1, 0)
        im = [0] * max(2 * n - 1, 0)
        re[::2] = p._re
        im[::2] = p._im
        return Poly._raw("x", re, im, p._den)
    d = p.degree
    if d < 0:
        return LaurentPoly((), 0)
    zz1 = Poly([1, 0, 1], "z")
    out = Poly((), "z")
    power = Poly([1], "z")
    half = Fraction(1, 2)
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + (power * Poly.monomial(d - k, c * half**k, "z"))
        power = power * zz1
    return LaurentPoly(out, -d)


def decompose_eta(f, family) -> Poly:
    """Inverse of :func:`compose_eta`; raises if ``f`` is not in its image."""
    tag = _family_tag(family)
    if isinstance(f, RatFunc):
        f = f.to_poly() if tag == "wilson" else f.to_laurent()
    if tag == "wilson":
        if not isinstance(f, Poly) or f.var != "x":
            raise ValueError("expected a polynomial in x")
        if any(f._re[1::2]) or any(f._im[1::2]):
            raise ArithmeticError("polynomial in x is not even")
        return Poly._raw("eta", f._re[::2], f._im[::2], f._den)
    if isinstance(f, Poly):
        f = LaurentPoly(f, 0)
    if not f.is_symmetric():
        raise ArithmeticError("Laurent polynomial is not symmetric under z -> 1/z")
    result = Poly((), "eta")
    rest = f
    while not rest.is_zero():
        d = rest.max_exp
        c = rest.coeff(d)
        # (z + 1/z)**d has leading coefficient 1 and equals (2 eta)**d
        term = Poly.monomial(d, c * 2**d, "eta")
        result = result + term
        rest = rest - compose_eta(term, "aw")
        if not rest.is_zero() and rest.max_exp >= d:
            raise ArithmeticError("eta decomposition failed to reduce degree")
    return result


def shift_x(p, c):
    """``p(x + c)`` for a Poly or RatFunc in ``x``."""
    if isinstance(p, RatFunc):
        return RatFunc(shift_x(p.num, c), shift_x(p.den, c))
    c = as_gr(c)
    if not c:
        return p
    lin = Poly([c, 1], p.var)
    out = Poly((), p.var)
    for coef in reversed(p.coeffs):
        out = out * lin + coef
    return out


def scale_z(p, c):
    """``p(c z)`` for a Poly, LaurentPoly or RatFunc."""
    c = as_gr(c)
    if not c:
        raise ValueError("scale_z requires a nonzero factor")
    if isinstance(p, RatFunc):
        return RatFunc(scale_z(p.num, c), scale_z(p.den, c))
    if isinstance(p, LaurentPoly):
        return LaurentPoly(scale_z(p.poly, c), p.min_exp).__mul__(c**p.min_exp)
    if c == ONE:
        return p
    out = []
    w = ONE
    for coef in p.coeffs:
        out.append(coef * w)
        w = w * c
    return Poly(out, p.var)


def ratfunc_is_zero(r: RatFunc) -> bool:
    return r.is_zero()


# gcd ------------------------------------------------------------------------


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder ``lc(b)**(deg a - deg b + 1) * a mod b``."""
    db = b.degree
    lcb = b.lc
    r = a
    e = a.degree - db + 1
    while not r.is_zero() and r.degree >= db:
        t = Poly.monomial(r.degree - db, r.lc, a.var)
        r = r.scale_by(lcb) - t * b
        e -= 1
    if e > 0:
        r = r.scale_by(lcb**e)
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the subresultant polynomial remainder sequence (``gcd(0, 0) = 0``)."""
    a._check(b)
    if a.is_zero():
        return b.monic() if not b.is_zero() else Poly((), a.var)
    if b.is_zero():
        return a.monic()
    if a.degree < b.degree:
        a, b = b, a
    g = ONE
    h = ONE
    delta = a.degree - b.degree
    while True:
        r = _prem(a, b)
        if r.is_zero():
            return b.monic()
        if r.degree == 0:
            return Poly([1], a.var)
        a, b = b, r.scale_by((g * h**delta).inverse())
        g = a.lc
        h = g if delta == 1 else (h ** (1 - delta) * g**delta if delta else h)
        delta = a.degree - b.degree


# Sturm sequences --------------------------------------------------------------


def _frac_eval(cs: Sequence[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * t + c
    return acc


def _frac_rem(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    inv = 1 / b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] * inv
        off = len(a) - 1 - db
        for j in range(db + 1):
            a[off + j] -= f * b[j]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def sturm_chain(p: Poly) -> list[list[Fraction]]:
    """Canonical Sturm sequence ``p, p', -rem(...), ...`` as Fraction lists."""
    cs = p.real_coeffs()
    if not cs:
        raise ValueError("zero polynomial has no Sturm chain")
    chain = [cs, [k * c for k, c in enumerate(cs)][1:]]
    while chain[-1] and len(chain[-1]) > 1:
        r = _frac_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes(chain, t: Fraction) -> int:
    count = 0
    prev = 0
    for cs in chain:
        v = _frac_eval(cs, t)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def cauchy_bound(p: Poly) -> Fraction:
    """``1 + max |c_k / c_deg|`` (an upper bound, rounded up to a rational)."""
    cs = p.real_coeffs() if p.is_real() else None
    if cs is not None:
        lead = abs(cs[-1])
        return 1 + max((abs(c) / lead for c in cs[:-1]), default=Fraction(0))
    lead2 = p.lc.abs2()
    m2 = max((c.abs2() / lead2 for c in p.coeffs[:-1]), default=Fraction(0))
    root = Fraction(math.isqrt(m2.numerator // m2.denominator + 1) + 1)
    return 1 + root


class SturmResult(NamedTuple):
    count: int
    endpoint_roots: tuple


def sturm_count_detailed(p: Poly, lo=None, hi=None) -> SturmResult:
    """Distinct real roots in the open interval ``(lo, hi)``.

    ``None`` or an infinite float for an endpoint means unbounded; it is
    replaced by the Cauchy bound.  A root sitting exactly on an endpoint is
    excluded from ``count`` and listed in ``endpoint_roots``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    cs = p.real_coeffs()
    R = cauchy_bound(p)
    lo = -R if lo is None or (isinstance(lo, float) and math.isinf(lo)) else Fraction(lo)
    hi = R if hi is None or (isinstance(hi, float) and math.isinf(hi)) else Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    ends = []
    if _frac_eval(cs, lo) == 0:
        ends.append(lo)
        lo = lo + ENDPOINT_EPS
    if _frac_eval(cs, hi) == 0:
        ends.append(hi)
        hi = hi - ENDPOINT_EPS
    if p.degree == 0:
        return SturmResult(0, tuple(ends))
    chain = sturm_chain(p)
    return SturmResult(_sign_changes(chain, lo) - _sign_changes(chain, hi), tuple(ends))


def sturm_count(p: Poly, lo=None, hi=None) -> int:
    return sturm_count_detailed(p, lo, hi).count
