"""Classical Steklov spectrum of the unit disk.

The Dirichlet-to-Neumann operator on functions of the circle has
eigenvalues 0, 1, 1, 2, 2, 3, 3, ... (harmonic extensions r^k cos/sin).
We assemble the discrete operator on a sweep of meshes, watch the
second-order convergence, and extrapolate.
"""

import numpy as np

from formsteklov import mesh, steklov, verify

levels = [2, 3, 4, 5]
results = []
for level in levels:
    K = mesh.generate(mesh.disk(level))
    r = steklov.solve_primal(K, 0, k=7, level=level)
    results.append(r)
    print(f"level {level}: {np.round(r.eigenvalues, 5)}")

print("\nRichardson extrapolation per eigenvalue:")
for idx in range(1, 7):
    vals = [float(r.eigenvalues[idx]) for r in results]
    st = verify.richardson(levels, vals, f"eigenvalue {idx + 1}")
    print(f"  #{idx + 1}: order {st.order:.2f}, limit {st.extrapolated:.6f} "
          f"(exact {int((idx + 1) // 2)})")
