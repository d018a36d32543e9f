"""Duality between the normal-data and tangential-data operators.

The first eigenvalue of the dual problem at boundary degree p equals the
primal first eigenvalue at degree n - p.  The two discretizations are
independent (different unknowns, different boundary data), so the match
is an end-to-end consistency check of the whole stack; the gap shrinks
under refinement.
"""

from formsteklov import mesh, steklov

for spec, levels in ((mesh.disk(0), [2, 3, 4, 5]), (mesh.ball(0), [1, 2, 3])):
    n = spec.dim - 1
    print(f"\n{spec.label()}: primal degree {n} vs dual degree 0")
    for level in levels:
        K = mesh.generate(spec.with_level(level))
        nu_p = steklov.solve_primal(K, n, k=2, level=level).eigenvalues[0]
        nu_d = steklov.dual_spectrum(K, 0, k=2, level=level).eigenvalues[0]
        print(f"  level {level}: primal {nu_p:.6f}  dual {nu_d:.6f}  "
              f"gap {abs(nu_p - nu_d) / nu_p:.2%}")
