"""
From Askey-Wilson to Wilson
===========================

With q = exp(-pi/L) and x = pi x^W / L, suitably rescaled Askey-Wilson
objects tend to their Wilson counterparts as L grows.  The table shows
the largest relative deviation on a fixed grid of x^W.
"""

from xell import ParamSet, aw_to_w_limit

lam_w = ParamSet.wilson(1, 1, 2, 2)
L_list = [20.0, 40.0, 80.0, 160.0, 320.0]

for ell, n in [(0, 1), (1, 1), (2, 2)]:
    table = aw_to_w_limit(ell, lam_w, L_list, n=n)
    print(f"l = {ell}, n = {n}")
    print(f"{'L':>6} {'xi':>10} {'P':>10} {'V':>10}")
    for row in table.to_rows():
        print(f"{row['L']:>6.0f} {row['xi']:>10.2e} {row['P']:>10.2e} {row['V']:>10.2e}")
    print(f"smallest ratio per doubling: {table.min_ratio:.2f}\n")

##############################################################################
# The deviation roughly halves per doubling, so the convergence is O(1/L).
# The first doubling is the slowest, most visibly for larger l + n.
