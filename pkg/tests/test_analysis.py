import math
from fractions import Fraction as F

import numpy as np
import pytest

from xell.analysis import (
    SingularConfigurationError,
    aw_params_for_limit,
    aw_to_w_limit,
    check_hermiticity,
    check_orthogonality,
    count_real_zeros,
    gram_matrix,
    groundstate_eval,
    hermiticity_grid,
    orthogonality_integral,
    psi_ell_eval,
    rectangle_domain,
    rectangle_zero_counts,
    scan_point,
    xi_shifted_abs,
    zero_free_rectangle,
)
from xell.exceptional import exceptional_norm_h, hermiticity_l1, xi_poly
from xell.library import AW_LIB, CLASSICAL, DEFORMED, WILSON_LIB
from xell.numfield import GaussianRational as G
from xell.params import ParamSet
from xell.polycore import compose_eta

W1111 = ParamSet.wilson(1, 1, 1, 1)
W1122 = WILSON_LIB[0]
AW_A = AW_LIB[0]
IDS = [str(s) for s in DEFORMED]


# ground state ---------------------------------------------------------------------


def test_groundstate_closed_form_oracle():
    x = np.linspace(0.05, 4.0, 20)
    oracle = (np.pi * x / np.sinh(np.pi * x)) ** 4 * (2 * x * np.sinh(2 * np.pi * x)) / np.pi
    got = groundstate_eval(W1111, x) ** 2
    assert np.allclose(got, oracle, rtol=1e-10, atol=0)


def test_groundstate_vanishes_at_origin():
    assert groundstate_eval(W1111, 1e-6) < 1e-5
    assert groundstate_eval(W1111, 1e-8) < groundstate_eval(W1111, 1e-6)


@pytest.mark.parametrize("lam", [l for l in CLASSICAL if not l.is_wilson])
def test_aw_groundstate_finite_positive(lam):
    v = groundstate_eval(lam, math.pi / 2)
    assert math.isfinite(v) and v > 0
    assert groundstate_eval(lam, math.pi / 2, mp=True) == pytest.approx(v, rel=1e-13)


def test_groundstate_domain_errors():
    with pytest.raises(ValueError):
        groundstate_eval(W1111, -1.0)
    with pytest.raises(ValueError):
        groundstate_eval(AW_A, 4.0)


def test_psi_examples():
    x = np.linspace(0.2, 3.0, 9)
    assert np.allclose(psi_ell_eval(0, W1111, x), groundstate_eval(W1111, x))
    assert xi_shifted_abs(1, W1122, F(1)) == pytest.approx(2 * abs(complex(F(11, 4), -1)), rel=1e-15)


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_psi_positive(lam):
    hi = 8.0 if lam.is_wilson else math.pi
    x = np.linspace(hi / 101, hi * 100 / 101, 100)
    for ell in (0, 1, 2):
        if ell == 1 and not hermiticity_l1(lam):
            continue
        assert np.all(psi_ell_eval(ell, lam, x) > 0)


def test_psi_singular_configuration():
    # xi_1 = -2 eta - 4 (u v = 1/4 boundary would put the zero on the line); use a floor
    with pytest.raises(SingularConfigurationError):
        psi_ell_eval(1, W1122, np.array([1.0]), floor=1e3)


# orthogonality -----------------------------------------------------------------------


def test_anchor_integral():
    assert orthogonality_integral(0, 0, 0, W1111) == pytest.approx(math.pi / 3, rel=1e-10)


def test_exceptional_norm_example():
    val = orthogonality_integral(1, 1, 1, W1122)
    assert val == pytest.approx(exceptional_norm_h(1, 1, W1122), rel=1e-8)
    assert abs(orthogonality_integral(1, 1, 3, W1122)) < 1e-8 * val


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_gram_matrices(lam):
    for ell in (0, 1, 2):
        if ell and not zero_free_rectangle(ell, lam).zero_free:
            continue
        res = gram_matrix(ell, lam, 5)
        assert res.diag_rel_error < 1e-8 and res.offdiag_rel < 1e-8


def test_gram_fails_without_hermiticity():
    # (3/4, 3/4, 1/4, 1/4) violates the ell = 1 inequality: the norms do not match
    assert not zero_free_rectangle(1, AW_A).zero_free
    assert not check_orthogonality(1, AW_A).passed
    with pytest.raises(SingularConfigurationError):
        orthogonality_integral(1, 0, 0, AW_A)


def test_gram_nondegenerate_up_to_eight():
    res = gram_matrix(1, W1122, 9)
    d = np.sqrt(np.diag(res.gram))
    corr = res.gram / np.outer(d, d)
    assert np.linalg.cond(corr) < 1.0 + 1e-6


# zero-free rectangle -------------------------------------------------------------------


def test_rectangle_examples():
    assert zero_free_rectangle(1, W1122) == (True, 0)
    assert xi_poly(1, W1122.shift(1)).coeffs[0] == F(-15, 2)


def _companion_count(p, lam):
    """Zeros of xi(eta(x)) in the rectangle from numpy eigenvalues of a companion matrix."""
    dom = rectangle_domain(lam, [p])
    f = compose_eta(p, lam.family)
    if lam.is_wilson:
        roots = np.roots([complex(c) for c in reversed(f.coeffs)])
        return sum(1 for r in roots
                   if dom.re_lo <= r.real <= dom.re_hi and abs(r.imag) <= dom.im_half)
    zr = np.roots([complex(c) for c in reversed(f.poly.coeffs)])
    xs = -1j * np.log(zr)  # principal branch: Re x in (-pi, pi]
    xs = np.where(xs.real < dom.re_lo, xs + 2 * math.pi, xs)
    return sum(1 for r in xs if abs(r.imag) <= dom.im_half)


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_rectangle_matches_companion_roots(lam):
    for ell in (1, 2, 3):
        d = rectangle_zero_counts(ell, lam)
        expected = (_companion_count(xi_poly(ell, lam), lam)
                    + _companion_count(xi_poly(ell, lam.shift(1)), lam))
        assert d.count == expected


def test_rectangle_counts_known_zeros():
    # a1 = a2 = u, a3 = a4 = v: the root of xi_1 is eta = -u v, inside iff u v < 1/4
    lam = ParamSet.wilson(F(1, 10), F(1, 10), 1, 1)
    d = rectangle_zero_counts(1, lam)
    assert d.counts["lam"] == 2 and not d.zero_free


def test_hermiticity_report():
    assert check_hermiticity(1, W1122).passed
    rep = check_hermiticity(1, AW_A)
    assert rep.passed and rep.detail["zero_free"] is False


@pytest.mark.parametrize("family", ["wilson", "aw"])
def test_ell1_inequality_agrees_with_rectangle(family):
    rows = [scan_point(1, lam) for lam in hermiticity_grid(family, n_side=8)]
    assert all(r.agree or r.near_boundary for r in rows)
    assert any(r.hermitian for r in rows) and any(not r.hermitian for r in rows)


# real zeros ----------------------------------------------------------------------------


def test_zero_count_examples():
    assert count_real_zeros(1, 0, W1122) == 0
    assert count_real_zeros(1, 1, W1122) == 1
    assert count_real_zeros(2, 3, AW_A) == 3


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_zero_count_equals_degree_index(lam):
    for ell in (1, 2, 3):
        if not zero_free_rectangle(ell, lam).zero_free:
            continue
        assert [count_real_zeros(ell, n, lam) for n in range(6)] == list(range(6))


# limit -------------------------------------------------------------------------------------


def test_limit_parameters_are_exact_powers():
    lam = aw_params_for_limit(W1122, 20)
    assert lam.s * lam.s == lam.q
    assert lam.a[0] == lam.s ** 2 and lam.a[2] == lam.s ** 4
    cplx = aw_params_for_limit(WILSON_LIB[2], 40)
    assert cplx.a[2] == cplx.a[3].conj()


def test_limit_classical():
    tb = aw_to_w_limit(0, W1122, [20, 40, 80, 160], n=1)
    assert tb.passed
    assert all(v == 0 for v in tb.deviations["xi"])


def test_limit_ell1():
    tb = aw_to_w_limit(1, W1122, [20, 40, 80, 160], n=1, min_ratio=1.5)
    assert tb.passed and tb.deviations["xi"][-1] < 0.02


def test_limit_wrong_exponent_diverges():
    tb = aw_to_w_limit(1, W1122, [20, 40, 80, 160], xi_exponent_shift=1)
    xi = tb.deviations["xi"]
    assert not tb.passed and xi[-1] > xi[0]


def test_limit_rejects_bad_input():
    with pytest.raises(ValueError):
        aw_to_w_limit(1, W1122, [40, 20])
    with pytest.raises(ValueError):
        aw_to_w_limit(1, AW_A, [20, 40])
