"""
Hermiticity of the deformed system
==================================

For l = 1 a closed inequality says when the deformed Hamiltonian is
hermitian.  Independently, the argument principle counts zeros of the
deforming polynomials in a strip around the real axis.  The two agree.

Writes a CSV that can be plotted as a map over the (a1, a3) plane.
"""

import csv
import sys

from xell.analysis import hermiticity_grid, scan_point
from xell.params import ASKEY_WILSON, WILSON

rows = []
for family in (WILSON, ASKEY_WILSON):
    for lam in hermiticity_grid(family, n_side=12):
        r = scan_point(1, lam)
        rows.append((family, float(lam.a[0].re), float(lam.a[2].re), r.hermitian,
                     r.zero_free, r.near_boundary))

disagree = [r for r in rows if r[3] != r[4] and not r[5]]
print(f"{len(rows)} points, {len(disagree)} disagreements away from the boundary")

writer = csv.writer(sys.stdout)
writer.writerow(["family", "a1", "a3", "inequality", "zero_free", "near_boundary"])
writer.writerows(rows[:10])
print("...")
