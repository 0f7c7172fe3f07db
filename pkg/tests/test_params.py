from fractions import Fraction as F

import pytest

from xell.numfield import GaussianRational as G
from xell.params import ParameterError, ParamSet
from xell.exceptional import twist


def test_wilson_validation():
    ParamSet.wilson(1, 1, G(2, 1), G(2, -1))
    with pytest.raises(ParameterError):
        ParamSet.wilson(1, 1, G(2, 1), 2)  # not closed under conjugation
    with pytest.raises(ParameterError):
        ParamSet.wilson(-1, 1, 2, 2)
    with pytest.raises(ParameterError):
        ParamSet.wilson(1, 2, 3)


def test_askey_wilson_validation():
    lam = ParamSet.askey_wilson((F(1, 2),) * 4, F(1, 4))
    assert lam.s == F(1, 2) and lam.kappa == 4
    with pytest.raises(ParameterError):
        ParamSet.askey_wilson((F(1, 2),) * 4, F(1, 2))  # irrational root
    with pytest.raises(ParameterError):
        ParamSet.askey_wilson((1, F(1, 2), F(1, 2), F(1, 2)), F(1, 4))
    with pytest.raises(ParameterError):
        ParamSet.askey_wilson((F(1, 2),) * 4, F(1, 4), F(1, 3))


def test_derived_data():
    lam = ParamSet.wilson(1, F(3, 2), 2, F(5, 2))
    assert lam.b == 7 and lam.kappa == 1
    assert lam.shift(1).a == tuple(G(v) for v in (F(3, 2), 2, F(5, 2), 3))
    assert lam.shift(0, 1).a == tuple(G(v) for v in (F(1, 2), 1, F(5, 2), 3))
    assert lam.domain == (0, float("inf"))
    aw = ParamSet.askey_wilson((F(1, 2), F(3, 4), F(3, 8), F(3, 8)), F(1, 4))
    assert aw.shift(1).a[0] == F(1, 4)  # a -> a q^(1/2)
    assert aw.b == F(1, 2) * F(3, 4) * F(9, 64)


def test_twist_examples():
    lam = ParamSet(ParamSet.wilson(1, 2, 3, 4).family, (1, 2, 3, 4))
    assert twist(lam).a == tuple(G(v) for v in (-1, -2, 3, 4))
    aw = ParamSet.askey_wilson((F(1, 2), F(3, 4), F(1, 4), F(1, 8)), F(1, 4))
    assert twist(aw).a == tuple(G(v) for v in (2, F(4, 3), F(1, 4), F(1, 8)))
    assert twist(twist(aw)) == aw and twist(twist(lam)) == lam


def test_restricted_range():
    assert ParamSet.wilson(1, 1, 2, 2).in_restricted_range()
    assert not ParamSet.wilson(2, 1, 1, 2).in_restricted_range()
    aw = ParamSet.askey_wilson((F(3, 4), F(1, 2), G(F(1, 4), F(1, 4)), G(F(1, 4), F(-1, 4))),
                               F(1, 4))
    assert aw.in_restricted_range()


def test_json_and_str():
    lam = ParamSet.wilson(1, 1, G(2, 1), G(2, -1))
    assert lam.to_json() == {"family": "wilson", "a": ["1/1", "1/1", "2/1+1/1*i", "2/1-1/1*i"]}
    assert "Wilson" in str(lam)
