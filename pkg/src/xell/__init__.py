"""Exact Wilson / Askey-Wilson polynomials and their exceptional (X_l) deformations."""

from .numfield import GaussianRational, parse_gr, parse_rat, pochhammer, q_pochhammer
from .params import (
    ASKEY_WILSON,
    WILSON,
    DegenerateParameterError,
    ParameterError,
    ParamSet,
)
from .polycore import LaurentPoly, Poly, RatFunc, sturm_count
from .classical import (
    apply_backward,
    apply_forward,
    apply_htilde,
    check_difference_eq,
    check_shape_invariance,
    classical_poly,
    energy,
    norm_h,
    potential,
)
from .exceptional import (
    check_ell0_degeneration,
    check_ladder_ell,
    check_rodrigues,
    check_shape_invariance_ell,
    deformed_potential,
    exceptional_coeffs,
    exceptional_energy,
    exceptional_norm_h,
    exceptional_poly,
    hermiticity_l1,
    htilde_eigencheck,
    missing_degrees_check,
    rodrigues_construct,
    twist,
    xi_poly,
)
from .analysis import (
    aw_to_w_limit,
    count_real_zeros,
    gram_matrix,
    groundstate_eval,
    orthogonality_integral,
    psi_ell_eval,
    zero_free_rectangle,
)
from .quadrature import QuadratureConfig
from .report import VerificationReport

__version__ = "0.1.0"
