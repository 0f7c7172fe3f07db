"""Wilson and Askey-Wilson systems: polynomials, potentials, shift operators.

Everything here is exact.  Operators act on polynomials in ``eta``; each one
is evaluated by composing with the sinusoidal coordinate, applying the shifts
as substitutions in the frame variable, and decomposing the result back into
``eta``.  A non-exact decomposition means the identity failed, so it raises.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from functools import lru_cache

from .numfield import ONE, GaussianRational, pochhammer, q_pochhammer
from .params import (
    ParamSet,
    eta_rat,
    phi_aux,
    shifted,
    star,
)
from .polycore import Poly, RatFunc, decompose_eta
from .report import VerificationReport, exact_report
from . import special

I = GaussianRational(0, 1)

__all__ = [
    "ParamSet",
    "classical_poly",
    "potential",
    "energy",
    "f_coef",
    "b_coef",
    "apply_forward",
    "apply_backward",
    "apply_htilde",
    "check_difference_eq",
    "check_shape_invariance",
    "shape_invariance_residuals",
    "norm_h",
    "norm_h_over_pi",
]


@lru_cache(maxsize=4096)
def classical_poly(n: int, lam: ParamSet) -> Poly:
    """Wilson ``W_n`` or Askey-Wilson ``p_n`` as an exact polynomial in eta.

    The terminating hypergeometric sum is expanded with the normalising
    prefactor folded into each term, so no parameter-dependent division
    occurs (twisted parameters may make the lower parameters vanish).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if lam.is_wilson:
        return _wilson_poly(n, lam.a)
    return _aw_poly(n, lam.a, lam.q)


def _wilson_poly(n: int, a) -> Poly:
    a1, a2, a3, a4 = a
    b = a1 + a2 + a3 + a4
    total = Poly((), "eta")
    factor = Poly([1], "eta")  # prod_{m<k} ((a1+m)^2 + eta)
    k_fact = 1
    for k in range(n + 1):
        if k:
            k_fact *= k
            factor = factor * Poly([(a1 + (k - 1)) * (a1 + (k - 1)), 1], "eta")
        c = pochhammer(-n, k) * pochhammer(n + b - 1, k) / k_fact
        for aj in (a2, a3, a4):
            c = c * pochhammer(a1 + aj + k, n - k)
        if c:
            total = total + factor.scale_by(c)
    return total


def _aw_poly(n: int, a, q: Fraction) -> Poly:
    nz = [i for i, v in enumerate(a) if v]
    if not nz:
        raise ValueError("Askey-Wilson polynomial with all parameters zero is not supported")
    order = [nz[0]] + [i for i in range(4) if i != nz[0]]
    a1, a2, a3, a4 = (a[i] for i in order)
    b = a1 * a2 * a3 * a4
    qinv_n = Fraction(1) / q**n
    total = Poly((), "eta")
    factor = Poly([1], "eta")  # prod_{m<k} (1 - 2 a1 q^m eta + a1^2 q^{2m})
    for k in range(n + 1):
        if k:
            t = a1 * q ** (k - 1)
            factor = factor * Poly([1 + t * t, -2 * t], "eta")
        c = (q_pochhammer(qinv_n, q, k) * q_pochhammer(b * q ** (n - 1), q, k)
             * q**k / q_pochhammer(q, q, k))
        for aj in (a2, a3, a4):
            c = c * q_pochhammer(a1 * aj * q**k, q, n - k)
        if c:
            total = total + factor.scale_by(c)
    return total.scale_by(a1 ** (-n))


# spectral data ----------------------------------------------------------------


def energy(n: int, lam: ParamSet) -> GaussianRational:
    if lam.is_wilson:
        return GaussianRational(n) * (n + lam.b - 1)
    q = lam.q
    return (Fraction(1) / q**n - 1) * (1 - lam.b * q ** (n - 1))


def f_coef(n: int, lam: ParamSet) -> GaussianRational:
    if lam.is_wilson:
        return -energy(n, lam)
    return energy(n, lam) * lam.s**n


def b_coef(n: int, lam: ParamSet) -> GaussianRational:
    if lam.is_wilson:
        return GaussianRational(-1)
    return GaussianRational(lam.s ** (-(n + 1)))


def norm_h_over_pi(n: int, lam: ParamSet) -> Fraction | None:
    """``h_n / pi`` when every Gamma argument is a positive integer (Wilson)."""
    if not lam.is_wilson:
        return None
    args = [n + lam.a[j] + lam.a[k] for j in range(4) for k in range(j + 1, 4)]
    args.append(2 * n + lam.b)
    if not all(v.is_real and v.re.denominator == 1 and v.re > 0 for v in args):
        return None
    out = Fraction(2 * math.factorial(n)) * pochhammer(n + lam.b - 1, n).real_value()
    for v in args[:-1]:
        out *= math.factorial(int(v.re) - 1)
    return out / math.factorial(int(args[-1].re) - 1)


def norm_h(n: int, lam: ParamSet) -> float:
    """Squared norm ``h_n`` of the classical eigenpolynomials."""
    exact = norm_h_over_pi(n, lam)
    if exact is not None:
        return float(exact) * math.pi
    a = [complex(v) for v in lam.a]
    if lam.is_wilson:
        b = sum(a)
        logh = math.log(2 * math.pi) + math.lgamma(n + 1)
        logh += special.log_pochhammer(n + b - 1, n)
        logh -= special.loggamma(2 * n + b)
        for j in range(4):
            for k in range(j + 1, 4):
                logh += special.loggamma(n + a[j] + a[k])
        return math.exp(logh.real)
    q = float(lam.q)
    b = a[0] * a[1] * a[2] * a[3]
    num = special.qpoch(b * q ** (n - 1), q, n) * special.qpoch_inf(b * q ** (2 * n), q)
    den = special.qpoch_inf(q ** (n + 1), q)
    for j in range(4):
        for k in range(j + 1, 4):
            den *= special.qpoch_inf(a[j] * a[k] * q**n, q)
    return (2 * math.pi * num / den).real


# potential and operators ------------------------------------------------------


@lru_cache(maxsize=1024)
def potential(lam: ParamSet) -> tuple[RatFunc, RatFunc]:
    """``(V, V*)`` as exact rational functions of ``x`` (Wilson) or ``z``."""
    if lam.is_wilson:
        num = Poly([1], "x")
        for aj in lam.a:
            num = num * Poly([aj, I], "x")
        den = Poly([0, 2 * I], "x") * Poly([1, 2 * I], "x")
        V = RatFunc(num, den)
    else:
        num = Poly([1], "z")
        for aj in lam.a:
            num = num * Poly([1, -aj], "z")
        den = Poly([1, 0, -1], "z") * Poly([1, 0, -lam.q], "z")
        V = RatFunc(num, den)
    return V, star(V, lam)


def apply_forward(lam: ParamSet, p: Poly) -> Poly:
    """Forward shift ``F(lam)``: ``i/phi * (p(eta(x - i g/2)) - p(eta(x + i g/2)))``."""
    diff = eta_rat(p, lam, -Fraction(1, 2)) - eta_rat(p, lam, Fraction(1, 2))
    return decompose_eta(diff * I / phi_aux(lam), lam.family)


def apply_backward(lam: ParamSet, p: Poly) -> Poly:
    """Backward shift ``B(lam)`` acting on a polynomial at ``lam + delta``."""
    V, Vs = potential(lam)
    phi = phi_aux(lam)
    h = Fraction(1, 2)
    up = V * shifted(phi, lam, -h) * eta_rat(p, lam, -h)
    down = Vs * shifted(phi, lam, h) * eta_rat(p, lam, h)
    return decompose_eta((up - down) * (-I), lam.family)


def apply_htilde(lam: ParamSet, p: Poly) -> RatFunc:
    """``V (p(eta(x-ig)) - p(eta)) + V* (p(eta(x+ig)) - p(eta))`` as a rational function."""
    V, Vs = potential(lam)
    p0 = eta_rat(p, lam, 0)
    return V * (eta_rat(p, lam, -1) - p0) + Vs * (eta_rat(p, lam, 1) - p0)


def check_difference_eq(n: int, lam: ParamSet) -> VerificationReport:
    t0 = time.perf_counter()
    P = classical_poly(n, lam)
    res = apply_htilde(lam, P) - eta_rat(P, lam, 0) * energy(n, lam)
    return exact_report("difference-eq", "difference-equation", _pjson(lam, n=n), [res], t0=t0)


def shape_invariance_residuals(pot, lam: ParamSet, e1) -> tuple[RatFunc, RatFunc]:
    """Residuals of the two shape-invariance relations for a potential family.

    ``pot(mu)`` returns ``(V, V*)`` at parameters ``mu``; ``e1`` is the first
    excitation energy at ``lam``.
    """
    h = Fraction(1, 2)
    kappa = lam.kappa
    V, Vs = pot(lam)
    V1, Vs1 = pot(lam.shift(1))
    lhs_a = shifted(V, lam, -h) * shifted(Vs, lam, -h)
    rhs_a = V1 * shifted(Vs1, lam, -1) * (kappa * kappa)
    lhs_b = shifted(V, lam, h) + shifted(Vs, lam, -h)
    rhs_b = (V1 + Vs1) * kappa - e1
    return lhs_a - rhs_a, lhs_b - rhs_b


def check_shape_invariance(lam: ParamSet, pot=None) -> VerificationReport:
    """Both shape-invariance relations for ``V(x; lam)`` (or a supplied ``pot``)."""
    t0 = time.perf_counter()
    ra, rb = shape_invariance_residuals(pot or potential, lam, energy(1, lam))
    return exact_report("shape-invariance", "shape-invariance-product+sum", _pjson(lam),
                        [ra, rb], t0=t0)


def _pjson(lam: ParamSet, **extra) -> dict:
    d = lam.to_json()
    d.update(extra)
    return d
