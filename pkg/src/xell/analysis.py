"""Floating-point checks: ground states, orthogonality, zero-free rectangles, limits.

Exact objects from :mod:`xell.classical` / :mod:`xell.exceptional` are turned
into float evaluators here.  Nothing in this module claims exactness except
:func:`count_real_zeros`, which is a Sturm count on exact coefficients.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from . import special
from .classical import ParamSet, norm_h
from .exceptional import (
    deformed_potential,
    exceptional_norm_h,
    exceptional_poly,
    xi_poly,
)
from .numfield import GaussianRational
from .params import ASKEY_WILSON, ParameterError, star
from .polycore import Poly, cauchy_bound, sturm_count
from .quadrature import QuadratureConfig, QuadratureError, tanh_sinh
from .report import VerificationReport

__all__ = [
    "SingularConfigurationError",
    "groundstate_eval",
    "psi_ell_eval",
    "xi_shifted_abs",
    "gram_matrix",
    "orthogonality_integral",
    "RectangleDomain",
    "rectangle_domain",
    "zero_free_rectangle",
    "rectangle_zero_counts",
    "count_real_zeros",
    "LimitTable",
    "aw_to_w_limit",
    "aw_params_for_limit",
    "ScanRow",
    "scan_point",
    "hermiticity_grid",
    "check_hermiticity",
    "check_zero_count",
    "check_orthogonality",
]


class SingularConfigurationError(ArithmeticError):
    """The deforming polynomial (nearly) vanishes on the integration path."""


# ground state and weight -------------------------------------------------------


def _check_domain(lam: ParamSet, x):
    lo, hi = lam.domain
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= lo) or np.any(xa >= hi):
        raise ValueError(f"x outside the open domain ({lo}, {hi})")
    return xa


def groundstate_eval(lam: ParamSet, x, mp: bool = False):
    """``phi_0(x; lam) > 0`` on the open domain (scalar or array ``x``).

    Wilson: modulus of a Gamma quotient through complex log-Gamma.
    Askey-Wilson: modulus of an infinite q-Pochhammer quotient, truncated with
    a tail bound; ``mp=True`` switches to mpmath products.
    """
    xa = _check_domain(lam, x)
    a = [complex(v) for v in lam.a]
    if lam.is_wilson:
        ix = 1j * xa
        lg = sum(special.loggamma(aj + ix) for aj in a) - special.loggamma(2 * ix)
        out = np.exp(np.real(lg))
    else:
        q = float(lam.q)
        z = np.exp(1j * xa)
        if mp:
            out = np.array([_aw_ground_mp(a, lam.q, zz) for zz in np.atleast_1d(z)],
                           dtype=float).reshape(np.shape(z))
        else:
            num = special.qpoch_inf(z * z, q)
            den = np.ones_like(z)
            for aj in a:
                den = den * special.qpoch_inf(aj * z, q)
            out = np.abs(num / den)
    return float(out) if np.ndim(out) == 0 else out


def _aw_ground_mp(a, q, z):
    num = special.qpoch_inf_mp(z * z, q)
    den = 1
    for aj in a:
        den = den * special.qpoch_inf_mp(aj * z, q)
    return float(abs(num / den))


def _eta_shifted(lam: ParamSet, x, t: float):
    """``eta(x + i t gamma)`` as complex floats."""
    if lam.is_wilson:
        return (x + 1j * t) ** 2
    gamma = math.log(float(lam.q))
    return np.cos(x + 1j * t * gamma)


def xi_shifted_abs(ell: int, lam: ParamSet, x):
    """``|xi_l(eta(x - i gamma/2); lam)|``.

    Exact for a rational ``x`` in the Wilson frame; float otherwise.
    """
    xi = xi_poly(ell, lam)
    if lam.is_wilson and isinstance(x, (int, Fraction)):
        eta = (GaussianRational(x) - GaussianRational(0, Fraction(1, 2))) ** 2
        return math.sqrt(float(xi(eta).abs2()))
    return np.abs(xi.evalf(_eta_shifted(lam, np.asarray(x, dtype=float), -0.5)))


def psi_ell_eval(ell: int, lam: ParamSet, x, mp: bool = False, floor: float = 1e-14):
    """``psi_l(x; lam) = phi_0(x; lam + l delta) / |xi_l(eta(x - i gamma/2); lam)|``."""
    den = xi_shifted_abs(ell, lam, x) if ell else 1.0
    if np.any(np.asarray(den) < floor):
        raise SingularConfigurationError("deforming polynomial vanishes on the real line")
    xf = float(x) if isinstance(x, (int, Fraction)) else x
    out = groundstate_eval(lam.shift(ell), xf, mp=mp) / den
    return float(out) if np.ndim(out) == 0 else out


# orthogonality ---------------------------------------------------------------------


def _wilson_upper(weight, cfg: QuadratureConfig) -> float:
    grid = np.linspace(cfg.wilson_eps, 8.0, 400)
    peak = float(np.max(weight(grid)))
    X = 8.0
    while float(np.max(weight(np.linspace(X, 2 * X, 64)))) > cfg.tail_rel * peak:
        X *= 2
        if X > 1e6:
            raise QuadratureError("weight does not decay")
    return 2 * X


@dataclass
class GramResult:
    gram: np.ndarray
    expected: np.ndarray
    error: float
    interval: tuple

    @property
    def diag_rel_error(self) -> float:
        d = np.diag(self.gram)
        return float(np.max(np.abs(d - self.expected) / np.abs(self.expected)))

    @property
    def offdiag_rel(self) -> float:
        d = np.sqrt(np.abs(np.outer(np.diag(self.gram), np.diag(self.gram))))
        off = np.abs(self.gram - np.diag(np.diag(self.gram))) / d
        return float(np.max(off))


def gram_matrix(ell: int, lam: ParamSet, N: int, cfg: QuadratureConfig = QuadratureConfig(),
                mp: bool = False) -> GramResult:
    """Quadrature Gram matrix of ``P_{l,0..N-1}`` against ``psi_l^2`` and the expected norms."""
    polys = [exceptional_poly(ell, n, lam) for n in range(N)]
    coeffs = [np.array([c.real for c in p.float_coeffs()]) for p in polys]

    def weight(x):
        return psi_ell_eval(ell, lam, x, mp=mp) ** 2

    def integrand(x):
        eta = x * x if lam.is_wilson else np.cos(x)
        vals = np.array([np.polynomial.polynomial.polyval(eta, c) for c in coeffs])
        w = weight(x)
        return vals[:, None, :] * vals[None, :, :] * w

    if lam.is_wilson:
        a, b = cfg.wilson_eps, _wilson_upper(weight, cfg)
    else:
        a, b = 0.0, math.pi
    expected = np.array([exceptional_norm_h(ell, n, lam) if ell else norm_h(n, lam)
                         for n in range(N)])

    def scale(est):
        return np.sqrt(np.abs(np.outer(np.diag(est), np.diag(est))))

    # interior nodes only: the open-interval weight is undefined at the ends
    G, err = tanh_sinh(lambda x: integrand(np.clip(x, np.nextafter(a, b), np.nextafter(b, a))),
                       a, b, cfg, scale=scale)
    return GramResult(G, expected, err, (a, b))


def orthogonality_integral(ell: int, n: int, m: int, lam: ParamSet,
                           cfg: QuadratureConfig = QuadratureConfig(),
                           certify: bool = True) -> float:
    """``int psi_l^2 P_{l,n} P_{l,m} dx`` over the domain."""
    if certify and ell and not zero_free_rectangle(ell, lam).zero_free:
        raise SingularConfigurationError("hermiticity not certified for these parameters")
    res = gram_matrix(ell, lam, max(n, m) + 1, cfg)
    return float(res.gram[n, m])


# zero-free rectangle ------------------------------------------------------------------


@dataclass(frozen=True)
class RectangleDomain:
    re_lo: float
    re_hi: float
    im_half: float


def rectangle_domain(lam: ParamSet, polys: Sequence[Poly] = ()) -> RectangleDomain:
    """Closed rectangle ``|Im x| <= |gamma|/2``, reflected to make it symmetric.

    ``xi(eta(x))`` is even in ``x`` (and 2pi-periodic for Askey-Wilson), so the
    half rectangle over ``[x1, x2]`` is zero-free iff this one is.  Wilson uses
    ``|Re x| <= sqrt(C) + 1`` with ``C`` the Cauchy bound in ``eta``;
    Askey-Wilson uses one full period offset so no zero sits on a vertical side.
    """
    if lam.is_wilson:
        C = max((float(cauchy_bound(p)) for p in polys if p.degree > 0), default=1.0)
        R = math.sqrt(C) + 1.0
        return RectangleDomain(-R, R, 0.5)
    off = 0.1234567
    return RectangleDomain(-math.pi + off, math.pi + off, -0.5 * math.log(float(lam.q)))


class _Inconclusive(Exception):
    pass


def _winding(fn, scale_fn, corners, depth: int = 24, near: float = 1e-12) -> int:
    """Winding number of ``fn`` around 0 along the closed polygon ``corners``."""
    total = 0.0
    for p0, p1 in zip(corners, corners[1:] + corners[:1]):
        f0, f1 = fn(p0), fn(p1)
        stack = [(p0, p1, f0, f1, 0)]
        while stack:
            a, b, fa, fb, d = stack.pop()
            for pt, fv in ((a, fa), (b, fb)):
                if abs(fv) <= near * scale_fn(pt):
                    raise _Inconclusive
            m = 0.5 * (a + b)
            fm = fn(m)
            if abs(fm) <= near * scale_fn(m):
                raise _Inconclusive
            d1 = cmath.phase(fm / fa)
            d2 = cmath.phase(fb / fm)
            if abs(d1) < math.pi / 2 and abs(d2) < math.pi / 2 and abs(d1 + d2) < math.pi / 2:
                total += d1 + d2
                continue
            if d >= depth:
                raise _Inconclusive
            # push right half first so the left half is processed next
            stack.append((m, b, fm, fb, d + 1))
            stack.append((a, m, fa, fm, d + 1))
    return int(round(total / (2 * math.pi)))


def _rect_count(p: Poly, lam: ParamSet, dom: RectangleDomain, grow: float) -> int:
    cs = p.float_coeffs()
    abs_cs = [abs(c) for c in cs]
    if lam.is_wilson:
        def eta(x):
            return x * x
    else:
        def eta(x):
            return cmath.cos(x)

    def fn(x):
        e = eta(x)
        acc = 0j
        for c in reversed(cs):
            acc = acc * e + c
        return acc

    def scale_fn(x):
        e = abs(eta(x))
        acc = 0.0
        for c in reversed(abs_cs):
            acc = acc * e + c
        return acc

    lo, hi, h = dom.re_lo - grow, dom.re_hi + grow, dom.im_half + grow
    corners = [complex(lo, -h), complex(hi, -h), complex(hi, h), complex(lo, h)]
    # subdivide long edges so the first bisection level is not too coarse
    pts = []
    for c0, c1 in zip(corners, corners[1:] + corners[:1]):
        k = 16
        pts.extend(c0 + (c1 - c0) * j / k for j in range(k))
    return _winding(fn, scale_fn, pts)


class RectangleResult(NamedTuple):
    zero_free: bool
    count: int


@dataclass
class RectangleDetail:
    zero_free: bool | None
    count: int | None
    counts: dict = field(default_factory=dict)
    inconclusive: bool = False
    domain: RectangleDomain | None = None


def rectangle_zero_counts(ell: int, lam: ParamSet, retries: int = 3) -> RectangleDetail:
    """Winding-number zero counts of ``xi_l(eta(x); lam)`` and ``xi_l(eta(x); lam+delta)``."""
    polys = {"lam": xi_poly(ell, lam), "lam+delta": xi_poly(ell, lam.shift(1))}
    dom = rectangle_domain(lam, list(polys.values()))
    counts = {}
    for key, p in polys.items():
        if p.degree <= 0:
            counts[key] = 0
            continue
        for attempt in range(retries + 1):
            try:
                counts[key] = _rect_count(p, lam, dom, grow=1e-7 * attempt)
                break
            except _Inconclusive:
                continue
        else:
            return RectangleDetail(None, None, counts, True, dom)
    total = sum(counts.values())
    return RectangleDetail(total == 0, total, counts, False, dom)


def zero_free_rectangle(ell: int, lam: ParamSet) -> RectangleResult:
    """``(zero_free, count)``; raises if the contour check stays inconclusive."""
    d = rectangle_zero_counts(ell, lam)
    if d.inconclusive:
        raise SingularConfigurationError("zero on or near the rectangle boundary")
    return RectangleResult(d.zero_free, d.count)


# real zeros ---------------------------------------------------------------------------


def count_real_zeros(ell: int, n: int, lam: ParamSet) -> int:
    """Exact Sturm count of zeros of ``P_{l,n}`` on the image of the domain in eta."""
    p = exceptional_poly(ell, n, lam)
    if not p.is_real():
        raise ValueError("P_{l,n} has non-real coefficients")
    if lam.is_wilson:
        return sturm_count(p, 0, None)
    return sturm_count(p, -1, 1)


# Askey-Wilson -> Wilson limit --------------------------------------------------------


def aw_params_for_limit(lam_w: ParamSet, L: float) -> ParamSet:
    """Askey-Wilson parameters ``a_j = q**a_j^W`` with ``q = exp(-pi/L)``.

    ``s = exp(-pi/(2L))`` is a binary64 number, hence an exact rational, and
    ``q = s*s`` exactly; every later operation is exact in that field.
    """
    s = Fraction(math.exp(-math.pi / (2 * L)))
    q = s * s
    out = []
    for j, aw in enumerate(lam_w.a):
        mate = next((k for k in range(j) if lam_w.a[k] == aw.conj() and not aw.is_real), None)
        if mate is not None:
            out.append(out[mate].conj())
            continue
        two_a = 2 * aw
        if two_a.is_real and two_a.re.denominator == 1:
            out.append(GaussianRational(s ** int(two_a.re)))
        else:
            val = cmath.exp(complex(two_a) * math.log(float(s)))
            out.append(GaussianRational.from_complex(val))
    lam = ParamSet(ASKEY_WILSON, tuple(out), q, s)
    lam.validate()
    return lam


@dataclass
class LimitTable:
    ell: int
    n: int
    L: list
    deviations: dict  # quantity -> list of max relative deviations, one per L
    passed: bool
    min_ratio: float

    def to_rows(self) -> list[dict]:
        rows = []
        for i, L in enumerate(self.L):
            row = {"L": L}
            row.update({k: v[i] for k, v in self.deviations.items()})
            rows.append(row)
        return rows


def _rel_dev(approx, exact) -> float:
    approx = np.asarray(approx)
    exact = np.asarray(exact)
    return float(np.max(np.abs(approx - exact)) / np.max(np.abs(exact)))


def aw_to_w_limit(ell: int, lam_w: ParamSet, L_list: Sequence[float], n: int = 0,
                  xw_grid: Sequence = None, xi_exponent_shift: int = 0,
                  min_ratio: float = 1.0) -> LimitTable:
    """Deviation of the rescaled Askey-Wilson objects from their Wilson limits.

    For each ``L`` (``q = exp(-pi/L)``, ``x = pi x^W / L``) compares
    ``(1-q)^(-3l) xi_l``, ``(1-q)^(-3(l+n)) P_{l,n}`` and ``(1-q)^(-2) V_l``
    with ``xi_l^W``, ``P_{l,n}^W`` and ``V_l^{W*}`` on a fixed ``x^W`` grid.
    Passes when every deviation sequence decreases by at least ``min_ratio``
    per step (``1.0`` means strictly decreasing).  A quantity that agrees
    exactly at every ``L`` counts as converged.
    """
    if not lam_w.is_wilson:
        raise ParameterError("limit target must be a Wilson parameter set")
    if list(L_list) != sorted(L_list):
        raise ValueError("L values must increase")
    if xw_grid is None:
        xw_grid = [Fraction(k, 4) for k in range(1, 13)]
    xw_grid = [Fraction(v) for v in xw_grid]

    xi_w = xi_poly(ell, lam_w)
    p_w = exceptional_poly(ell, n, lam_w)
    Vw, _ = deformed_potential(ell, lam_w)
    Vw_star = star(Vw, lam_w)
    ref = {
        "xi": [float(xi_w(x * x).re) for x in xw_grid],
        "P": [float(p_w(x * x).re) for x in xw_grid],
        "V": [complex(Vw_star(x)) for x in xw_grid],
    }
    devs = {k: [] for k in ref}
    for L in L_list:
        lam = aw_params_for_limit(lam_w, L)
        one_minus_q = 1 - lam.q
        xi_a = xi_poly(ell, lam)
        p_a = exceptional_poly(ell, n, lam)
        V_a, _ = deformed_potential(ell, lam)
        xi_scale = one_minus_q ** (-(3 * ell - xi_exponent_shift))
        p_scale = one_minus_q ** (-3 * (ell + n))
        vals = {"xi": [], "P": [], "V": []}
        for xw in xw_grid:
            x = math.pi * float(xw) / L
            # eta = 1 - 2 sin^2(x/2), exact in the rationals from here on
            sh = Fraction(math.sin(0.5 * x))
            eta = 1 - 2 * sh * sh
            vals["xi"].append(float((xi_a(eta) * xi_scale).re))
            vals["P"].append(float((p_a(eta) * p_scale).re))
            z = GaussianRational.from_complex(cmath.exp(1j * x))
            vals["V"].append(complex(V_a(z) / (one_minus_q * one_minus_q)))
        for k in devs:
            devs[k].append(_rel_dev(vals[k], ref[k]))
    ok = True
    worst = math.inf
    for seq in devs.values():
        if not any(seq):
            continue  # identical at every L (e.g. xi_0 = 1)
        for d0, d1 in zip(seq, seq[1:]):
            r = d0 / d1 if d1 > 0 else math.inf
            worst = min(worst, r)
            if not (d1 < d0 and r >= min_ratio):
                ok = False
    return LimitTable(ell, n, list(L_list), devs, ok, worst)


# hermiticity scans -------------------------------------------------------------------


@dataclass
class ScanRow:
    params: ParamSet
    margin: Fraction | None
    hermitian: bool | None
    zero_free: bool | None
    count: int | None
    near_boundary: bool

    @property
    def inconclusive(self) -> bool:
        return self.zero_free is None

    @property
    def agree(self) -> bool | None:
        if self.hermitian is None or self.zero_free is None:
            return None
        return self.hermitian == self.zero_free

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "hermiticity_l1": self.hermitian,
            "margin": None if self.margin is None else str(self.margin),
            "zero_free": self.zero_free,
            "count": self.count,
            "agree": self.agree,
            "near_boundary": self.near_boundary,
        }


def scan_point(ell: int, lam: ParamSet, boundary_tol: float = 1e-3) -> ScanRow:
    """Exact ell = 1 inequality (when ``ell == 1``) against the rectangle certificate."""
    from .exceptional import hermiticity_margin_l1

    margin = hermiticity_margin_l1(lam) if ell == 1 else None
    herm = None if margin is None else margin > 0
    near = margin is not None and abs(margin) < boundary_tol
    try:
        d = rectangle_zero_counts(ell, lam)
    except ArithmeticError:
        d = RectangleDetail(None, None, inconclusive=True)
    return ScanRow(lam, margin, herm, d.zero_free, d.count, near)


def hermiticity_grid(family: str, n_side: int = 20, q: Fraction = Fraction(1, 4),
                     s: Fraction = Fraction(1, 2)) -> list[ParamSet]:
    """An ``n_side x n_side`` grid with ``a1 = a2`` and ``a3 = a4`` inside the restricted range.

    Wilson: ``a3 = a4 = v`` in ``k/8`` and ``a1 = a2 = t v`` with ``t`` in ``(0, 1)``.
    Askey-Wilson: ``a1 = a2 = u`` in ``(0, 1)`` and ``a3 = a4 = t u`` with ``t`` in ``(-1, 1)``.
    """
    out = []
    for i in range(1, n_side + 1):
        for j in range(1, n_side + 1):
            if family == ASKEY_WILSON:
                u = Fraction(i, n_side + 1)
                v = u * Fraction(2 * j - n_side - 1, n_side + 1)
                out.append(ParamSet.askey_wilson((u, u, v, v), q, s))
            else:
                v = Fraction(i, 8)
                u = v * Fraction(j, n_side + 1)
                out.append(ParamSet.wilson(u, u, v, v))
    return out


# reports ------------------------------------------------------------------------------


def _pjson(lam: ParamSet, **extra) -> dict:
    d = lam.to_json()
    d.update(extra)
    return d


def check_hermiticity(ell: int, lam: ParamSet) -> VerificationReport:
    """The rectangle certificate is conclusive and, for ``ell == 1``, matches the inequality.

    A parameter set that is conclusively *not* hermitian still passes; whether
    the system is hermitian is reported in ``detail["zero_free"]``.
    """
    t0 = time.perf_counter()
    row = scan_point(ell, lam)
    detail = {"zero_free": row.zero_free, "count": row.count}
    if row.margin is not None:
        detail["hermiticity_l1"] = row.hermitian
        detail["margin"] = str(row.margin)
    if row.inconclusive:
        passed, why = False, "inconclusive"
    else:
        passed = row.agree is not False
        why = None if passed else "inequality and rectangle disagree"
    return VerificationReport("hermiticity", "zero-free-rectangle", _pjson(lam, ell=ell),
                              passed, residual=why,
                              detail=detail, runtime_ms=(time.perf_counter() - t0) * 1e3)


def check_zero_count(ell: int, n: int, lam: ParamSet) -> VerificationReport:
    t0 = time.perf_counter()
    count = count_real_zeros(ell, n, lam)
    return VerificationReport("zero-count", "n-real-zeros", _pjson(lam, ell=ell, n=n),
                              count == n, residual=None if count == n else count - n,
                              detail={"count": count},
                              runtime_ms=(time.perf_counter() - t0) * 1e3)


def check_orthogonality(ell: int, lam: ParamSet, N: int = 5, tol: float = 1e-8,
                        cfg: QuadratureConfig | None = None) -> VerificationReport:
    """Gram matrix of ``P_{l,0..N-1}`` against the closed-form norms, relative ``tol``."""
    t0 = time.perf_counter()
    cfg = cfg or QuadratureConfig(tol=min(1e-10, tol))
    params = _pjson(lam, ell=ell, N=N)
    try:
        res = gram_matrix(ell, lam, N, cfg)
    except (QuadratureError, SingularConfigurationError) as exc:
        detail = {"error": str(exc)}
        if isinstance(exc, QuadratureError) and exc.error is not None:
            detail["achieved"] = float(exc.error)
        return VerificationReport("orthogonality", "gram-matrix", params, False,
                                  residual=str(exc), detail=detail,
                                  runtime_ms=(time.perf_counter() - t0) * 1e3)
    diag, off = res.diag_rel_error, res.offdiag_rel
    worst = max(diag, off)
    return VerificationReport("orthogonality", "gram-matrix", params, worst <= tol,
                              residual=float(f"{worst:.3e}"),
                              detail={"diag_rel": float(f"{diag:.3e}"),
                                      "offdiag_rel": float(f"{off:.3e}"), "tol": tol},
                              runtime_ms=(time.perf_counter() - t0) * 1e3)
