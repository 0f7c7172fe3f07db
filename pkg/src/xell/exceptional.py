"""Exceptional (X_l) deformations of the Wilson and Askey-Wilson systems.

The deformation uses the degree-``l`` polynomial

    xi_l(eta; lam) = P_l(eta; twist(lam + (l-1) delta))

and multiplies the potential by ratios of shifted ``xi_l``.  The
eigenpolynomials ``P_{l,n}`` have degree ``l+n`` and are built from the
closed-form coefficients in :func:`exceptional_coeffs`; the Rodrigues-type
chain in :func:`rodrigues_construct` rebuilds them from backward shifts only
and serves as an independent check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classical import b_coef, classical_poly, energy, f_coef, norm_h, potential
from .numfield import GaussianRational
from .params import DegenerateParameterError, ParamSet, eta_rat, phi_aux, shifted, star
from .polycore import Poly, RatFunc, decompose_eta
from .report import VerificationReport, exact_report
from .classical import shape_invariance_residuals, _pjson

I = GaussianRational(0, 1)
HALF = Fraction(1, 2)

__all__ = [
    "ExceptionalCoeffs",
    "twist",
    "xi_poly",
    "deformed_potential",
    "exceptional_coeffs",
    "exceptional_poly",
    "exceptional_energy",
    "exceptional_f",
    "exceptional_b",
    "exceptional_norm_ratio",
    "exceptional_norm_h",
    "apply_forward_ell",
    "apply_backward_ell",
    "apply_htilde_ell",
    "htilde_eigencheck",
    "rodrigues_construct",
    "check_rodrigues",
    "check_ladder_ell",
    "check_shape_invariance_ell",
    "hermiticity_l1",
    "hermiticity_margin_l1",
    "missing_degrees_check",
    "check_ell0_degeneration",
]


@dataclass(frozen=True)
class ExceptionalCoeffs:
    a1: GaussianRational
    a2: GaussianRational
    b1: GaussianRational

    def is_real(self) -> bool:
        return self.a1.is_real and self.a2.is_real and self.b1.is_real

    def to_json(self) -> dict:
        return {"a_1": self.a1.to_json(), "a_2": self.a2.to_json(), "b_1": self.b1.to_json()}


def twist(lam: ParamSet) -> ParamSet:
    return lam.twist()


@lru_cache(maxsize=4096)
def xi_poly(ell: int, lam: ParamSet) -> Poly:
    """Deforming polynomial of degree ``ell``; ``xi_0 = 1``."""
    if ell < 0:
        raise ValueError("xi is defined only for ell >= 0")
    if ell == 0:
        return Poly([1], "eta")
    return classical_poly(ell, lam.shift(ell - 1).twist())


# spectral data ----------------------------------------------------------------


def exceptional_energy(ell: int, n: int, lam: ParamSet) -> GaussianRational:
    return energy(n, lam.shift(ell))


def exceptional_f(ell: int, n: int, lam: ParamSet) -> GaussianRational:
    return f_coef(n, lam.shift(ell))


def exceptional_b(ell: int, n: int, lam: ParamSet) -> GaussianRational:
    return b_coef(n, lam.shift(ell))


def exceptional_norm_ratio(ell: int, n: int, lam: ParamSet) -> GaussianRational:
    """Exact factor ``h_{l,n}(lam) / h_n(lam + l delta)``."""
    if ell == 0:
        return GaussianRational(1)  # numerator and denominator coincide
    a1, a2, a3, a4 = lam.a
    if lam.is_wilson:
        num = (a1 + a2 + n + ell) * (a3 + a4 + n + 2 * ell - 1)
        den = (a1 + a2 + n) * (a3 + a4 + n + ell - 1)
    else:
        q = lam.q
        num = (1 - a1 * a2 * q ** (n + ell)) * (1 - a3 * a4 * q ** (n + 2 * ell - 1))
        den = (1 - a1 * a2 * q**n) * (1 - a3 * a4 * q ** (n + ell - 1)) * q**ell
    if not den:
        raise DegenerateParameterError("vanishing denominator in the norm ratio")
    return num / den


def exceptional_norm_h(ell: int, n: int, lam: ParamSet) -> float:
    return float(exceptional_norm_ratio(ell, n, lam).real_value()) * norm_h(n, lam.shift(ell))


# closed-form coefficients ------------------------------------------------------


def _nonzero(x, what: str):
    if not x:
        raise DegenerateParameterError(f"degenerate parameters: {what} vanishes")
    return x


def exceptional_coeffs(ell: int, n: int, lam: ParamSet) -> ExceptionalCoeffs:
    """The three real coefficients ``a_{l,n,1}``, ``a_{l,n,2}``, ``b_{l,n,1}``."""
    if ell < 0 or n < 0:
        raise ValueError("ell and n must be nonnegative")
    if lam.is_wilson:
        return _coeffs_wilson(ell, n, lam.a)
    return _coeffs_aw(ell, n, lam.a, lam.q, lam.s)


def _coeffs_wilson(ell, n, a):
    a1, a2, a3, a4 = a
    A = a1 + a2 - a3 - a4
    b = a1 + a2 + a3 + a4
    d_twist = _nonzero(A - 2 * (ell - 1), "a1+a2-a3-a4-2(l-1)")
    d_sum = _nonzero(b + 2 * (n + ell - 1), "a1+a2+a3+a4+2(n+l-1)")
    d_pair = _nonzero(a1 + a2 + n, "a1+a2+n")
    hn = Fraction(n, 2)
    quad = ((a1 + hn) * (a1 + hn) + (a2 + hn) * (a2 + hn)
            - (a3 + hn + ell - 1) * (a3 + hn + ell - 1)
            - (a4 + hn + ell - 1) * (a4 + hn + ell - 1))
    c1 = (A - ell + 1) * (ell * n) / d_twist / d_sum * quad
    prod_minus = GaussianRational(1)
    prod_plus = GaussianRational(1)
    for aj in (a1, a2):
        for ak in (a3, a4):
            prod_minus = prod_minus * (aj - ak - ell + 1)
            prod_plus = prod_plus * (aj + ak + n + ell - 1)
    c2 = prod_minus * (ell * (ell - 1) * n) * (a3 + a4 + 2 * (ell - 1)) / (d_pair * d_twist)
    cb = -prod_plus * (ell * n) * (a1 + a2 + n + ell - 1) * (A - ell + 1) / (d_pair * d_sum)
    return ExceptionalCoeffs(c1, c2, cb)


def _coeffs_aw(ell, n, a, q, s):
    a1, a2, a3, a4 = a
    b = a1 * a2 * a3 * a4
    r = a3 * a4 / (a1 * a2)  # a1^-1 a2^-1 a3 a4
    d_twist = _nonzero(1 - r * q ** (2 * (ell - 1)), "1 - a3 a4 q^{2(l-1)}/(a1 a2)")
    d_prod = _nonzero(1 - b * q ** (2 * (n + ell - 1)), "1 - a1a2a3a4 q^{2(n+l-1)}")
    d_pair = _nonzero(1 - a1 * a2 * q**n, "1 - a1 a2 q^n")
    # a3 a4 (1/a3 + 1/a4) = a3 + a4 keeps a3 = 0 or a4 = 0 finite
    bracket = (a3 * a4 * (q ** (n + ell - 1) * (a1 + a2) - q ** (n + 2 * (ell - 1)) * (a3 + a4)
                          + q ** (ell - 1) * (a1.inverse() + a2.inverse()))
               - (a3 + a4))
    c1 = (bracket * s ** (ell - 2) * (1 - q**ell) * (1 - q**n) * (1 - r * q ** (ell - 1))
          / (d_twist * d_prod))
    prod_ratio = GaussianRational(1)
    prod_plus = GaussianRational(1)
    for aj in (a1, a2):
        for ak in (a3, a4):
            prod_ratio = prod_ratio * (1 - ak / aj * q ** (ell - 1))
            prod_plus = prod_plus * (1 - aj * ak * q ** (n + ell - 1))
    qinv_l = Fraction(1) / q**ell - 1
    c2 = (-prod_ratio * qinv_l * (1 - q ** (ell - 1)) * (1 - q**n)
          * (1 - a3 * a4 * q ** (2 * (ell - 1))) / (d_pair * d_twist))
    cb = (qinv_l * (1 - q**n) * prod_plus * (1 - a1 * a2 * q ** (n + ell - 1))
          * (1 - r * q ** (ell - 1)) / (d_pair * d_prod))
    return ExceptionalCoeffs(c1, c2, cb)


@lru_cache(maxsize=4096)
def exceptional_poly(ell: int, n: int, lam: ParamSet) -> Poly:
    """``P_{l,n}(eta; lam)`` of degree ``l + n`` from the closed-form coefficients."""
    if ell == 0:
        return classical_poly(n, lam)
    c = exceptional_coeffs(ell, n, lam)
    mu = lam.shift(ell)
    lam_dd = lam.shift(1, 1)
    a_poly = xi_poly(ell, lam.shift(1)) + xi_poly(ell - 1, lam_dd) * c.a1
    if ell >= 2 and c.a2:
        a_poly = a_poly + xi_poly(ell - 2, lam.shift(2, 1)) * c.a2
    out = a_poly * classical_poly(n, mu)
    if n >= 1:
        out = out + xi_poly(ell - 1, lam_dd) * c.b1 * classical_poly(n - 1, mu)
    return out


# deformed potential and operators ---------------------------------------------


def _xi_at(ell, lam, t) -> RatFunc:
    return eta_rat(xi_poly(ell, lam), lam, t)


@lru_cache(maxsize=512)
def deformed_potential(ell: int, lam: ParamSet) -> tuple[RatFunc, RatFunc]:
    """``(V_l, V_l*)`` as exact rational functions."""
    V = potential(lam.shift(ell))[0]
    if ell == 0:
        return V, star(V, lam)
    lam1 = lam.shift(1)
    Vl = (V * _xi_at(ell, lam, HALF) / _xi_at(ell, lam, -HALF)
          * _xi_at(ell, lam1, -1) / _xi_at(ell, lam1, 0))
    return Vl, star(Vl, lam)


def apply_forward_ell(ell: int, lam: ParamSet, p: Poly) -> Poly:
    lam1 = lam.shift(1)
    diff = (_xi_at(ell, lam1, HALF) * eta_rat(p, lam, -HALF)
            - _xi_at(ell, lam1, -HALF) * eta_rat(p, lam, HALF))
    return decompose_eta(diff * I / (phi_aux(lam) * _xi_at(ell, lam, 0)), lam.family)


def apply_backward_ell(ell: int, lam: ParamSet, p: Poly) -> Poly:
    V, Vs = potential(lam.shift(ell))
    phi = phi_aux(lam)
    up = V * _xi_at(ell, lam, HALF) * shifted(phi, lam, -HALF) * eta_rat(p, lam, -HALF)
    down = Vs * _xi_at(ell, lam, -HALF) * shifted(phi, lam, HALF) * eta_rat(p, lam, HALF)
    return decompose_eta((up - down) * (-I) / _xi_at(ell, lam.shift(1), 0), lam.family)


def apply_htilde_ell(ell: int, lam: ParamSet, p: Poly) -> RatFunc:
    """The deformed operator ``B_l F_l`` written as one four-term expression."""
    V, Vs = potential(lam.shift(ell))
    lam1 = lam.shift(1)
    x_up, x_dn = _xi_at(ell, lam, HALF), _xi_at(ell, lam, -HALF)
    x1_0 = _xi_at(ell, lam1, 0)
    p0 = eta_rat(p, lam, 0)
    t1 = V * x_up / x_dn * (eta_rat(p, lam, -1) - _xi_at(ell, lam1, -1) / x1_0 * p0)
    t2 = Vs * x_dn / x_up * (eta_rat(p, lam, 1) - _xi_at(ell, lam1, 1) / x1_0 * p0)
    return t1 + t2


def htilde_eigencheck(ell: int, n: int, lam: ParamSet) -> VerificationReport:
    t0 = time.perf_counter()
    P = exceptional_poly(ell, n, lam)
    res = apply_htilde_ell(ell, lam, P) - eta_rat(P, lam, 0) * exceptional_energy(ell, n, lam)
    return exact_report("eigencheck", "deformed-eigen-identity", _pjson(lam, ell=ell, n=n),
                        [res], t0=t0)


def rodrigues_construct(ell: int, n: int, lam: ParamSet) -> Poly:
    """Rebuild ``P_{l,n}`` by backward shifts from ``P_{l,0}(lam + n delta)``.

    Only ``xi_l`` and the operators enter, so this is independent of the
    closed-form coefficients.
    """
    p = xi_poly(ell, lam.shift(n + 1))
    for k in range(n - 1, -1, -1):
        mu = lam.shift(k)
        p = apply_backward_ell(ell, mu, p) / exceptional_b(ell, n - 1 - k, mu)
    return p


def check_rodrigues(ell: int, n: int, lam: ParamSet) -> VerificationReport:
    t0 = time.perf_counter()
    diff = rodrigues_construct(ell, n, lam) - exceptional_poly(ell, n, lam)
    return exact_report("rodrigues", "rodrigues-chain", _pjson(lam, ell=ell, n=n), [diff], t0=t0)


def check_ladder_ell(ell: int, n: int, lam: ParamSet) -> VerificationReport:
    """``F_l P_{l,n} = f_{l,n} P_{l,n-1}(lam+delta)`` and ``B_l`` back again."""
    t0 = time.perf_counter()
    P = exceptional_poly(ell, n, lam)
    res = []
    fwd = apply_forward_ell(ell, lam, P)
    if n == 0:
        res.append(fwd)
    else:
        Pm = exceptional_poly(ell, n - 1, lam.shift(1))
        res.append(fwd - Pm * exceptional_f(ell, n, lam))
        res.append(apply_backward_ell(ell, lam, Pm) - P * exceptional_b(ell, n - 1, lam))
    return exact_report("forward-backward", "shift-operator-actions",
                        _pjson(lam, ell=ell, n=n), res, t0=t0)


def check_shape_invariance_ell(ell: int, lam: ParamSet) -> VerificationReport:
    t0 = time.perf_counter()
    ra, rb = shape_invariance_residuals(lambda mu: deformed_potential(ell, mu), lam,
                                        exceptional_energy(ell, 1, lam))
    return exact_report("shape-invariance", "deformed-shape-invariance",
                        _pjson(lam, ell=ell), [ra, rb], t0=t0)


# hermiticity --------------------------------------------------------------------


def hermiticity_margin_l1(lam: ParamSet) -> Fraction:
    """``RHS - LHS`` of the ell = 1 hermiticity inequality (positive means hermitian)."""
    a1, a2, a3, a4 = lam.a
    if lam.is_wilson:
        q4 = Fraction(1, 4)
        lhs = (a3 + a4) * (a1 * a2 + q4)
        rhs = (a1 + a2) * (a3 * a4 + q4)
        return (rhs - lhs).real_value()
    lhs = (a1 + a2) * (1 - a3 * a4) - (a3 + a4) * (1 - a1 * a2)
    rhs = (lam.s + 1 / lam.s) * (a1 * a2 - a3 * a4)
    return (lhs - rhs).real_value()


def hermiticity_l1(lam: ParamSet) -> bool:
    return hermiticity_margin_l1(lam) > 0


# missing degrees ---------------------------------------------------------------


def _rank(rows: list[list[GaussianRational]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inverse()
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def missing_degrees_check(ell: int, lam: ParamSet, extra: int = 3) -> VerificationReport:
    """No nonzero combination of ``P_{l,0..l+extra}`` has degree below ``l``.

    Equivalent to the coefficient block for degrees ``>= l`` having full
    column rank, which is decided by exact elimination.
    """
    t0 = time.perf_counter()
    N = ell + extra
    polys = [exceptional_poly(ell, n, lam) for n in range(N + 1)]
    top = max(p.degree for p in polys)
    cols = [[p.coeff(d) for d in range(ell, top + 1)] for p in polys]
    rows = [list(r) for r in zip(*cols)]  # degree-major matrix, one column per member
    rank = _rank(rows)
    ok = rank == len(polys)
    ms = (time.perf_counter() - t0) * 1e3
    return VerificationReport("missing-degrees", "no-low-degree-members",
                              _pjson(lam, ell=ell, N=N), ok,
                              residual=None if ok else f"rank {rank} < {len(polys)}",
                              detail={"rank": rank, "members": len(polys),
                                      "degrees": [p.degree for p in polys]},
                              runtime_ms=ms)


# ell = 0 ------------------------------------------------------------------------


def check_ell0_degeneration(lam: ParamSet, n_max: int = 8) -> VerificationReport:
    """The ell = 0 objects coincide with the classical ones exactly."""
    t0 = time.perf_counter()
    mismatches = []
    if xi_poly(0, lam) != Poly([1], "eta"):
        mismatches.append("xi_0")
    V0, V0s = deformed_potential(0, lam)
    V, Vs = potential(lam)
    if not ((V0 - V).is_zero() and (V0s - Vs).is_zero()):
        mismatches.append("potential")
    for n in range(n_max + 1):
        if exceptional_poly(0, n, lam) != classical_poly(n, lam):
            mismatches.append(f"P_{n}")
        if exceptional_energy(0, n, lam) != energy(n, lam):
            mismatches.append(f"E_{n}")
        if exceptional_f(0, n, lam) != f_coef(n, lam):
            mismatches.append(f"f_{n}")
        if exceptional_b(0, n, lam) != b_coef(n, lam):
            mismatches.append(f"b_{n}")
        if exceptional_norm_ratio(0, n, lam) != 1:
            mismatches.append(f"h_{n}")
    ms = (time.perf_counter() - t0) * 1e3
    return VerificationReport("degeneration", "ell-zero-is-classical",
                              _pjson(lam, n_max=n_max), not mismatches,
                              residual=mismatches or None, runtime_ms=ms)
