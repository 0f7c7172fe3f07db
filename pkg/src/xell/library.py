"""Reference parameter sets used by the tests, demos and acceptance runs."""

from fractions import Fraction as F

from .numfield import GaussianRational as G
from .params import ParamSet

Q = F(1, 4)

# sets inside the restricted ranges, used for the deformed systems
WILSON_LIB = (
    ParamSet.wilson(1, 1, 2, 2),
    ParamSet.wilson(1, F(3, 2), 2, F(5, 2)),
    ParamSet.wilson(1, 1, G(2, 1), G(2, -1)),
)
AW_LIB = (
    ParamSet.askey_wilson((F(3, 4), F(3, 4), F(1, 4), F(1, 4)), Q),
    ParamSet.askey_wilson((F(1, 2), F(3, 4), F(3, 8), F(3, 8)), Q),
    ParamSet.askey_wilson((F(3, 4), F(1, 2), G(F(1, 4), F(1, 4)), G(F(1, 4), F(-1, 4))), Q),
)

# extra classical sets so each family has six
WILSON_EXTRA = (
    ParamSet.wilson(1, 1, 1, 1),
    ParamSet.wilson(F(1, 2), F(1, 2), F(1, 2), F(1, 2)),
    ParamSet.wilson(F(1, 2), 1, F(3, 2), 2),
)
AW_EXTRA = (
    ParamSet.askey_wilson((F(1, 2),) * 4, Q),
    ParamSet.askey_wilson((F(1, 2), F(1, 2), F(1, 4), F(1, 4)), Q),
    ParamSet.askey_wilson((F(-1, 3), F(1, 2), F(1, 5), F(2, 3)), Q),
)

DEFORMED = WILSON_LIB + AW_LIB
CLASSICAL = WILSON_LIB + WILSON_EXTRA + AW_LIB + AW_EXTRA
