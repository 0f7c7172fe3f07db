from fractions import Fraction as F

import numpy as np
import pytest

from xell.classical import classical_poly, energy, potential
from xell.exceptional import (
    apply_backward_ell,
    apply_forward_ell,
    check_ell0_degeneration,
    check_ladder_ell,
    check_rodrigues,
    check_shape_invariance_ell,
    deformed_potential,
    exceptional_b,
    exceptional_coeffs,
    exceptional_energy,
    exceptional_f,
    exceptional_norm_ratio,
    exceptional_poly,
    hermiticity_l1,
    hermiticity_margin_l1,
    htilde_eigencheck,
    missing_degrees_check,
    rodrigues_construct,
    xi_poly,
)
from xell.classical import check_difference_eq
from xell.library import AW_LIB, CLASSICAL, DEFORMED, WILSON_LIB
from xell.numfield import GaussianRational as G
from xell.params import DegenerateParameterError, ParamSet
from xell.polycore import Poly

W1122 = WILSON_LIB[0]
AW_A = AW_LIB[0]  # (3/4, 3/4, 1/4, 1/4), q = 1/4
IDS = [str(s) for s in DEFORMED]


def test_xi_examples():
    assert xi_poly(0, W1122) == Poly([1])
    assert xi_poly(1, W1122) == Poly([-4, -2])
    assert xi_poly(1, W1122.shift(1)) == Poly([F(-15, 2), -2])


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_xi_degree_and_symmetry(lam):
    for ell in range(1, 4):
        xi = xi_poly(ell, lam)
        assert xi.degree == ell and xi.is_real()
        assert xi_poly(ell, lam.permuted((1, 0, 3, 2))) == xi


def test_coeff_examples():
    for lam in DEFORMED:
        c = exceptional_coeffs(1, 0, lam)
        assert (c.a1, c.a2, c.b1) == (0, 0, 0)
        for n in range(4):
            assert exceptional_coeffs(1, n, lam).a2 == 0
    assert exceptional_coeffs(1, 1, W1122).a1 == -1


def test_degenerate_denominator_is_an_error():
    with pytest.raises(DegenerateParameterError):
        exceptional_coeffs(1, 1, ParamSet.wilson(1, 1, 1, 1))
    with pytest.raises(DegenerateParameterError):
        exceptional_poly(1, 2, ParamSet.wilson(1, 1, 1, 1))


def test_poly_examples():
    for lam in DEFORMED:
        for ell in range(1, 4):
            assert exceptional_poly(ell, 0, lam) == xi_poly(ell, lam.shift(1))
    for lam in CLASSICAL:
        for n in range(5):
            assert exceptional_poly(0, n, lam) == classical_poly(n, lam)
    assert exceptional_energy(1, 1, W1122) == 8
    assert htilde_eigencheck(1, 1, W1122).passed


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_degree_reality_and_spectral_relations(lam):
    for ell in range(1, 4):
        for n in range(6):
            p = exceptional_poly(ell, n, lam)
            assert p.degree == ell + n and p.is_real()
            c = exceptional_coeffs(ell, n, lam)
            assert c.is_real
            assert exceptional_energy(ell, n, lam) == energy(n, lam.shift(ell))
            if n:
                assert (exceptional_f(ell, n, lam) * exceptional_b(ell, n - 1, lam)
                        == exceptional_energy(ell, n, lam))


def test_operator_examples():
    for lam in (W1122, AW_A):
        for ell in (1, 2):
            assert apply_forward_ell(ell, lam, exceptional_poly(ell, 0, lam)).is_zero()
    up = W1122.shift(1)
    assert exceptional_b(1, 0, W1122) == -1
    assert apply_backward_ell(1, W1122, exceptional_poly(1, 0, up)) == -exceptional_poly(1, 1, W1122)
    for n in range(4):
        P = exceptional_poly(1, n, W1122)
        bf = apply_backward_ell(1, W1122, apply_forward_ell(1, W1122, P))
        assert bf == P * exceptional_energy(1, n, W1122)


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_eigen_identity(lam):
    for ell in range(0, 4):
        for n in range(6):
            rep = htilde_eigencheck(ell, n, lam)
            assert rep.passed, (ell, n, rep.residual)
    assert htilde_eigencheck(0, 3, lam).passed == check_difference_eq(3, lam).passed


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_rodrigues_oracle(lam):
    for ell in range(1, 4):
        assert rodrigues_construct(ell, 0, lam) == exceptional_poly(ell, 0, lam)
        for n in range(6):
            assert check_rodrigues(ell, n, lam).passed, (ell, n)


def test_rodrigues_catches_corrupted_coefficient():
    lam = W1122
    good = exceptional_poly(2, 2, lam)
    bad = good + Poly([0, 1])
    assert rodrigues_construct(2, 2, lam) == good and rodrigues_construct(2, 2, lam) != bad


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_ladder(lam):
    for ell in (1, 2):
        for n in range(4):
            assert check_ladder_ell(ell, n, lam).passed


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_deformed_shape_invariance(lam):
    for ell in (1, 2):
        assert check_shape_invariance_ell(ell, lam).passed


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_deformed_potential(lam):
    V0, V0s = deformed_potential(0, lam)
    V, Vs = potential(lam)
    assert (V0 - V).is_zero() and (V0s - Vs).is_zero()
    xs = np.linspace(0.05, 3.0 if lam.is_wilson else 3.1, 100)
    pts = xs if lam.is_wilson else np.exp(1j * xs)
    for ell in (1, 2):
        Vl, Vls = deformed_potential(ell, lam)
        prod = Vl.evalf(pts) * Vls.evalf(pts)
        assert np.all(np.abs(prod.imag) <= 1e-9 * np.abs(prod))
        if hermiticity_l1(lam) or ell == 2:
            assert np.all(prod.real >= 0)


def test_hermiticity_examples():
    assert hermiticity_margin_l1(W1122) == F(17, 2) - 5
    assert hermiticity_l1(W1122)
    # large a3 = a4 keeps the inequality true: the right side grows like a3 a4
    assert hermiticity_l1(ParamSet.wilson(1, 1, 40, 40))
    for a4 in (1, 10, 100):
        assert not hermiticity_l1(ParamSet.wilson(F(1, 10), F(1, 10), 1, a4))
    assert hermiticity_margin_l1(AW_A) == F(19, 16) - F(20, 16)
    assert not hermiticity_l1(AW_A)


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_norm_ratio_positive(lam):
    for ell in (1, 2):
        for n in range(5):
            assert exceptional_norm_ratio(ell, n, lam).real_value() > 0


@pytest.mark.parametrize("lam", DEFORMED, ids=IDS)
def test_missing_degrees(lam):
    for ell in (1, 2, 3):
        rep = missing_degrees_check(ell, lam)
        assert rep.passed and rep.detail["rank"] == ell + 4


def test_missing_degrees_detects_low_degree_member():
    # append the constant 1 to an X_1 family: the check must flag rank deficiency
    from xell.exceptional import _rank
    lam = W1122
    polys = [exceptional_poly(1, n, lam) for n in range(4)] + [Poly([1])]
    rows = [[p.coeff(d) for p in polys] for d in range(1, 5)]
    assert _rank(rows) < len(polys)


@pytest.mark.parametrize("lam", CLASSICAL, ids=[str(s) for s in CLASSICAL])
def test_ell0_degeneration(lam):
    assert check_ell0_degeneration(lam).passed


def test_complex_pair_gives_real_coefficients():
    lam = ParamSet.wilson(1, 1, G(2, 1), G(2, -1))
    c = exceptional_coeffs(2, 3, lam)
    assert c.is_real
    assert all(isinstance(v, str) for v in c.to_json().values())
