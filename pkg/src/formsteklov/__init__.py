"""Steklov (Dirichlet-to-Neumann) spectra of differential forms on
simplicial meshes of Euclidean benchmark domains, plus a verification
suite for the sharp eigenvalue bounds relating them to curvature,
isoperimetry, boundary Laplacians and the biharmonic Steklov problem.
"""

from . import analytic, feec, forms, geometry, hodge, mesh, scalar, steklov, verify
from .mesh import (DomainSpec, SimplicialComplex, annulus, ball, betti, box,
                   coboundary, disk, ellipse, ellipsoid, generate, read_mesh,
                   refine, shell, write_mesh)
from .steklov import SpectrumResult, dual_spectrum, solve_primal
from .verify import Lab, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "DomainSpec", "SimplicialComplex", "SpectrumResult", "Lab",
    "annulus", "ball", "betti", "box", "coboundary", "disk", "ellipse",
    "ellipsoid", "generate", "read_mesh", "refine", "shell", "write_mesh",
    "dual_spectrum", "solve_primal", "run_check", "run_suite",
    "analytic", "feec", "forms", "geometry", "hodge", "mesh", "scalar",
    "steklov", "verify",
]
