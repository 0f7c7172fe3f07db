"""
Building exceptional polynomials
================================

A short walk through the exact constructions.  Everything here is computed
in the Gaussian rationals, so the printed coefficients are exact.
"""

from fractions import Fraction

from xell import ParamSet, classical_poly, exceptional_energy, exceptional_poly, xi_poly

##############################################################################
# A Wilson parameter set.  Parameters are given as exact rationals.
lam = ParamSet.wilson(1, 1, 2, 2)
print(lam)

##############################################################################
# The classical polynomial of degree 2 in the sinusoidal coordinate eta = x^2.
print("P_2      =", classical_poly(2, lam))

##############################################################################
# The deforming polynomial xi_l has degree l.  The exceptional polynomial
# P_{l,n} has degree l + n, so no member has degree below l.
for ell in range(1, 4):
    print(f"xi_{ell}     =", xi_poly(ell, lam))
for n in range(3):
    p = exceptional_poly(1, n, lam)
    print(f"P_1,{n}    degree {p.degree}:", p)

##############################################################################
# The spectrum is unchanged by the deformation for this family.
print("E_1,n    =", [str(exceptional_energy(1, n, lam)) for n in range(5)])

##############################################################################
# The Askey-Wilson family lives on z = e^{ix}, with eta = cos x.
aw = ParamSet.askey_wilson((Fraction(1, 2), Fraction(3, 4), Fraction(3, 8), Fraction(3, 8)),
                           Fraction(1, 4))
print(aw)
print("AW P_1,1 =", exceptional_poly(1, 1, aw))
