"""Kernel dimensions read off the topology.

Whitney complexes reproduce de Rham cohomology, so the number of exact
zero eigenvalues of the degree-p operator equals the p-th Betti number:
one flat loop for the annulus at degree one, one cavity for the spherical
shell at degree two, nothing on contractible domains.
"""

from formsteklov import mesh, steklov

cases = [
    (mesh.disk(3), 1),
    (mesh.annulus(0.5, 1, 2), 1),
    (mesh.ball(2), 1),
    (mesh.ball(2), 2),
    (mesh.shell(0.5, 1, 1), 2),
]
for spec, p in cases:
    K = mesh.generate(spec)
    b = mesh.betti(K)
    r = steklov.solve_primal(K, p, k=b[p] + 4)
    print(f"{spec.label():16s} degree {p}: kernel {r.kernel_dim} "
          f"(Betti {b[p]}), spectral gap ratio {r.gap_ratio:.2e}, "
          f"next eigenvalue {r.eigenvalues[r.kernel_dim]:.4f}")
