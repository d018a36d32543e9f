"""The biharmonic Steklov eigenvalue squeezed between two bounds.

On every domain the first biharmonic Steklov eigenvalue sits between the
top-degree Dirichlet-to-Neumann eigenvalue and the isoperimetric ratio;
on balls both ends collapse to the same number (2 in the plane, 3 in
space), pinning the eigenvalue exactly.  At a fixed resolution the
discrete values converge to the squeeze from above, so on balls all three
columns approach each other rather than being literally ordered.
"""

from formsteklov import geometry, mesh, scalar, steklov

for spec, level in ((mesh.disk(0), 4), (mesh.ball(0), 3),
                    (mesh.ellipse(1, 0.7, 0), 4)):
    K = mesh.generate(spec.with_level(level))
    n = spec.dim - 1
    mu = scalar.biharmonic_spectrum(K, 1)[0]
    nu = steklov.solve_primal(K, n, k=2).eigenvalues[0]
    iso = geometry.analytic_geometry(spec).iso_ratio
    print(f"{spec.label():16s} level {level}: "
          f"nu[1,{n}] = {nu:.4f}   mu1 = {mu:.4f}   "
          f"area/volume = {iso:.4f}")
