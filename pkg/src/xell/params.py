"""Parameter sets and the exact substitution frame of each family.

Both families are handled in one vocabulary.  A shift ``x -> x + i t gamma``
(``t`` a half-integer) is realised exactly as

* Wilson (``gamma = 1``, variable ``x``): ``x -> x + i t``;
* Askey-Wilson (``gamma = log q``, variable ``z = exp(ix)``): ``z -> z q**-t``,
  with ``q**(1/2) = s`` stored exactly.

The ``*``-operation conjugates coefficients of an analytic function of ``x``;
in the ``z`` frame this also sends ``z -> 1/z``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numfield import ONE, GaussianRational, as_gr, exact_sqrt
from .polycore import LaurentPoly, Poly, RatFunc, compose_eta, scale_z, shift_x

WILSON = "wilson"
ASKEY_WILSON = "aw"
FAMILIES = (WILSON, ASKEY_WILSON)

HALF = Fraction(1, 2)


class ParameterError(ValueError):
    """Parameters violate the admissible range of the family."""


class DegenerateParameterError(ArithmeticError):
    """A closed-form coefficient has a vanishing denominator."""


def _conj_closed(a: Sequence[GaussianRational]) -> bool:
    return sorted(map(str, a)) == sorted(str(x.conj()) for x in a)


@dataclass(frozen=True)
class ParamSet:
    """Four parameters of a Wilson or Askey-Wilson system.

    Use :meth:`wilson` / :meth:`askey_wilson` to build a validated set.  The
    plain constructor performs no range checks: shifted and twisted
    parameters routinely leave the admissible range.
    """

    family: str
    a: tuple
    q: Fraction | None = None
    s: Fraction | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")
        a = tuple(as_gr(v) for v in self.a)
        if len(a) != 4:
            raise ParameterError("exactly four parameters are required")
        object.__setattr__(self, "a", a)
        if self.family == ASKEY_WILSON:
            if self.q is None or self.s is None:
                raise ParameterError("Askey-Wilson needs q and its exact root s")
            object.__setattr__(self, "q", Fraction(self.q))
            object.__setattr__(self, "s", Fraction(self.s))
            if self.s * self.s != self.q:
                raise ParameterError("s*s must equal q")

    # constructors ---------------------------------------------------------

    @classmethod
    def wilson(cls, *a) -> "ParamSet":
        if len(a) == 1 and not isinstance(a[0], (str, int, Fraction, GaussianRational)):
            a = tuple(a[0])
        lam = cls(WILSON, tuple(a))
        lam.validate()
        return lam

    @classmethod
    def askey_wilson(cls, a, q, s=None) -> "ParamSet":
        q = Fraction(q)
        if s is None:
            try:
                s = exact_sqrt(q)
            except ValueError as exc:
                raise ParameterError(str(exc)) from None
        lam = cls(ASKEY_WILSON, tuple(a), q, Fraction(s))
        lam.validate()
        return lam

    def validate(self) -> None:
        """Raise :class:`ParameterError` unless the set is admissible."""
        if not _conj_closed(self.a):
            raise ParameterError("parameters must be closed under conjugation as a set")
        if self.family == WILSON:
            if any(v.re <= 0 for v in self.a):
                raise ParameterError("Wilson parameters need positive real part")
        else:
            if not 0 < self.q < 1:
                raise ParameterError("need 0 < q < 1")
            if self.s <= 0:
                raise ParameterError("s must be the positive root of q")
            if any(v.abs2() >= 1 for v in self.a):
                raise ParameterError("Askey-Wilson parameters need |a| < 1")

    def in_restricted_range(self) -> bool:
        """Range in which the deformed systems are defined."""
        a1, a2, a3, a4 = self.a
        if not (a1.is_real and a2.is_real):
            return False
        if not _conj_closed((a3, a4)):
            return False
        if self.family == WILSON:
            return all(0 < aj.re < ak.re for aj in (a1, a2) for ak in (a3, a4))
        return all(1 > aj.re and aj.re * aj.re > ak.abs2() and aj.re > 0
                   for aj in (a1, a2) for ak in (a3, a4))

    # derived data ---------------------------------------------------------

    @property
    def is_wilson(self) -> bool:
        return self.family == WILSON

    @property
    def kappa(self) -> Fraction:
        return Fraction(1) if self.is_wilson else 1 / self.q

    @property
    def b(self) -> GaussianRational:
        """Sum (Wilson) or product (Askey-Wilson) of the four parameters."""
        a1, a2, a3, a4 = self.a
        return a1 + a2 + a3 + a4 if self.is_wilson else a1 * a2 * a3 * a4

    @property
    def domain(self) -> tuple[float, float]:
        return (0.0, math.inf) if self.is_wilson else (0.0, math.pi)

    @property
    def var(self) -> str:
        return "x" if self.is_wilson else "z"

    def shift(self, k: int = 1, kp: int = 0) -> "ParamSet":
        """Parameters ``lambda + k*delta + kp*delta'``.

        ``delta = (1/2,1/2,1/2,1/2)`` and ``delta' = (-1/2,-1/2,1/2,1/2)``;
        for Askey-Wilson the shift is multiplicative in ``a_j = q**lambda_j``.
        """
        if self.is_wilson:
            lo = Fraction(k - kp, 2)
            hi = Fraction(k + kp, 2)
            a = (self.a[0] + lo, self.a[1] + lo, self.a[2] + hi, self.a[3] + hi)
        else:
            lo = self.s ** (k - kp)
            hi = self.s ** (k + kp)
            a = (self.a[0] * lo, self.a[1] * lo, self.a[2] * hi, self.a[3] * hi)
        return ParamSet(self.family, a, self.q, self.s)

    def twist(self) -> "ParamSet":
        """``(-l1, -l2, l3, l4)``: negation (Wilson) or inversion (Askey-Wilson)."""
        a1, a2, a3, a4 = self.a
        if self.is_wilson:
            a = (-a1, -a2, a3, a4)
        else:
            a = (a1.inverse(), a2.inverse(), a3, a4)
        return ParamSet(self.family, a, self.q, self.s)

    def permuted(self, order: Sequence[int]) -> "ParamSet":
        return ParamSet(self.family, tuple(self.a[i] for i in order), self.q, self.s)

    def to_json(self) -> dict:
        d = {"family": self.family, "a": [v.to_json() for v in self.a]}
        if not self.is_wilson:
            d["q"] = f"{self.q.numerator}/{self.q.denominator}"
            d["s"] = f"{self.s.numerator}/{self.s.denominator}"
        return d

    def __str__(self):
        body = ", ".join(str(v) for v in self.a)
        if self.is_wilson:
            return f"Wilson({body})"
        return f"AskeyWilson({body}; q={self.q})"


# exact frame ------------------------------------------------------------------


def shifted(obj, lam: ParamSet, t):
    """Apply ``x -> x + i t gamma`` to a Poly/RatFunc in the family variable."""
    t = Fraction(t)
    if t == 0:
        return obj
    if lam.is_wilson:
        return shift_x(obj, GaussianRational(0, t))
    two_t = 2 * t
    if two_t.denominator != 1:
        raise ValueError("only half-integer multiples of gamma are exact")
    return scale_z(obj, lam.s ** (-int(two_t)))


def star(obj, lam: ParamSet):
    """The ``*``-operation on a rational function of ``x`` (or ``z``)."""
    if isinstance(obj, Poly):
        obj = RatFunc(obj)
    if lam.is_wilson:
        return obj.conj()
    num, den = obj.num.conj(), obj.den.conj()
    return RatFunc(num.reverse().shift_power(den.degree), den.reverse().shift_power(num.degree))


def eta_rat(p: Poly, lam: ParamSet, t=0) -> RatFunc:
    """``p(eta(x + i t gamma))`` as a rational function of the frame variable."""
    f = compose_eta(p, lam.family)
    if isinstance(f, LaurentPoly):
        f = RatFunc.from_laurent(f)
    else:
        f = RatFunc(f)
    return shifted(f, lam, t)


def phi_aux(lam: ParamSet) -> RatFunc:
    """``2x`` (Wilson) or ``2 sin x = -i (z - 1/z)`` (Askey-Wilson)."""
    if lam.is_wilson:
        return RatFunc(Poly([0, 2], "x"))
    i = GaussianRational(0, 1)
    return RatFunc(Poly([i, 0, -i], "z"), Poly([0, 1], "z"))


def s_power(lam: ParamSet, k: int) -> Fraction:
    """``q**(k/2)`` exactly."""
    return lam.s**k
