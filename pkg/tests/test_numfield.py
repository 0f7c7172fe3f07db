import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from xell.numfield import (
    ONE,
    ZERO,
    GaussianRational as G,
    exact_sqrt,
    parse_gr,
    parse_rat,
    pochhammer,
    q_pochhammer,
)

from strategies import fractions, gaussians, nonzero_gaussians


# field axioms ----------------------------------------------------------------


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x and x * ONE == x
    assert x - x == ZERO


@given(nonzero_gaussians)
def test_inverse(x):
    assert x * x.inverse() == ONE
    assert x / x == ONE
    assert x ** -2 * x ** 2 == ONE


@given(gaussians)
def test_conjugation_and_modulus(w):
    assert w.conj().conj() == w
    assert w.abs2() == w.re ** 2 + w.im ** 2
    assert w.abs2() >= 0
    assert (w * w.conj()).is_real
    assert (w * w.conj()).re == w.abs2()


@given(gaussians, gaussians)
def test_conjugation_is_a_field_automorphism(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()


@given(gaussians)
def test_normal_form_is_canonical(w):
    # equal values hash equally and print identically
    same = G(w.re * 3, w.im * 3) / 3
    assert same == w and hash(same) == hash(w) and str(same) == str(w)


@given(gaussians)
def test_complex_roundtrip(w):
    c = complex(w)
    assert c.real == pytest.approx(float(w.re)) and c.imag == pytest.approx(float(w.im))
    assert G.from_complex(0.5 + 0.25j) == G(F(1, 2), F(1, 4))


def test_mixed_arithmetic_and_real_value():
    assert G(1, 2) + 1 == G(2, 2)
    assert F(1, 2) * G(2, 4) == G(1, 2)
    assert (G(3) / 4).real_value() == F(3, 4)
    with pytest.raises(ValueError):
        G(1, 1).real_value()
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_json_format():
    assert G(F(3, 2)).to_json() == "3/2"
    assert G(2).to_json() == "2/1"
    assert G(F(1, 4), F(-1, 4)).to_json() == "1/4-1/4*i"
    assert G(0, 1).to_json() == "0/1+1/1*i"


# parsing --------------------------------------------------------------------


@pytest.mark.parametrize("text, value", [
    ("3/2", G(F(3, 2))),
    ("-7", G(-7)),
    ("2+i", G(2, 1)),
    ("2-i", G(2, -1)),
    ("1/4-1/4*i", G(F(1, 4), F(-1, 4))),
    ("-i", G(0, -1)),
    ("2i", G(0, 2)),
    ("-3/2*i", G(0, F(-3, 2))),
    ("1+1/2i", G(1, F(1, 2))),
])
def test_parse_gr(text, value):
    assert parse_gr(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", "1/0", "abc", "1+2"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_gr(bad)


def test_parse_rat_refuses_decimals():
    assert parse_rat("-5/10") == F(-1, 2)
    with pytest.raises(ValueError):
        parse_rat("0.25")


@given(fractions)
def test_exact_sqrt(r):
    r2 = r * r
    assert exact_sqrt(r2) == abs(r)


def test_exact_sqrt_rejects_irrational():
    with pytest.raises(ValueError):
        exact_sqrt(F(1, 2))
    with pytest.raises(ValueError):
        exact_sqrt(F(-1, 4))


# Pochhammer symbols ------------------------------------------------------------


def test_pochhammer_examples():
    assert pochhammer(G(5, 3), 0) == ONE
    assert pochhammer(1, 3) == 6
    assert pochhammer(-2, 4) == 0
    assert pochhammer(1, 6) == math.factorial(6)


def test_q_pochhammer_examples():
    a, q = G(F(2, 3), 1), F(1, 3)
    assert q_pochhammer(a, q, 0) == ONE
    assert q_pochhammer(a, q, 1) == 1 - a
    assert q_pochhammer(F(1, 2), F(1, 4), 2) == F(7, 16)


@given(gaussians, st.integers(0, 20), st.integers(0, 20))
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)
    assert pochhammer(a, n).conj() == pochhammer(a.conj(), n)


@given(gaussians, fractions.filter(bool), st.integers(0, 8), st.integers(0, 8))
def test_q_pochhammer_splits(a, q, m, n):
    assert q_pochhammer(a, q, m + n) == q_pochhammer(a, q, m) * q_pochhammer(a * q ** m, q, n)
