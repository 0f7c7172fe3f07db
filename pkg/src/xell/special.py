"""Floating-point special functions: complex log-gamma and q-Pochhammer products."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import mpmath
import numpy as np
from scipy import special as sp


def loggamma(z):
    """Principal branch of ``log Gamma(z)`` for complex ``z`` (scalar or array)."""
    out = sp.loggamma(np.asarray(z, dtype=complex))
    return complex(out) if np.ndim(out) == 0 else out


def log_pochhammer(a, n: int) -> complex:
    """``log((a)_n)`` summed term by term (``a`` need not be positive)."""
    acc = 0j
    for k in range(n):
        acc += cmath.log(a + k)
    return acc


def qpoch(a, q: float, n: int):
    """Finite product ``prod_{k<n} (1 - a q^k)``."""
    out = 1.0 + 0j
    t = complex(a)
    for _ in range(n):
        out *= 1 - t
        t *= q
    return out


def qpoch_terms(a_abs: float, q: float, tol: float = 1e-17) -> int:
    """Number of factors of ``(a; q)_inf`` needed for a relative tail below ``tol``.

    After ``N`` factors, ``|log tail| <= 2 |a| q^N / (1 - q)`` once ``|a| q^N <= 1/2``.
    """
    if a_abs == 0:
        return 0
    N = 0
    t = a_abs
    while t > 0.5 or 2 * t / (1 - q) > tol:
        t *= q
        N += 1
        if N > 10_000_000:
            raise RuntimeError("q-Pochhammer truncation did not converge")
    return N


def qpoch_inf(a, q: float, tol: float = 1e-17):
    """``(a; q)_inf`` truncated with a guaranteed relative tail below ``tol``."""
    a = np.asarray(a, dtype=complex)
    N = qpoch_terms(float(np.max(np.abs(a))) if a.size else 0.0, q, tol)
    out = np.ones_like(a)
    t = a.copy()
    for _ in range(N):
        out = out * (1 - t)
        t = t * q
    return complex(out) if out.ndim == 0 else out


def qpoch_inf_mp(a, q, dps: int = 40):
    """Extended-precision ``(a; q)_inf`` via mpmath (for ``q`` close to 1)."""
    if isinstance(q, Fraction):
        q = mpmath.mpf(q.numerator) / q.denominator
    with mpmath.workdps(dps):
        return mpmath.qp(mpmath.mpmathify(a), mpmath.mpf(q))
