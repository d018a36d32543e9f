import numpy as np
import pytest

from formsteklov import mesh
from formsteklov.errors import (InvalidDomainError, MeshFormatError,
                                NonManifoldError, OrientationError)

ALL_SPECS = [
    mesh.disk(1), mesh.ellipse(1, 0.7, 1), mesh.annulus(0.5, 1, 1),
    mesh.ball(1), mesh.ellipsoid(1, 0.8, 0.7, 1), mesh.shell(0.5, 1, 1),
    mesh.box(1, 1, 1, 1),
]

EXPECTED_BETTI = {
    "disk": (1, 0, 0),
    "ellipse(1,0.7)": (1, 0, 0),
    "annulus(0.5,1)": (1, 1, 0),
    "ball": (1, 0, 0, 0),
    "ellipsoid(1,0.8,0.7)": (1, 0, 0, 0),
    "shell(0.5,1)": (1, 0, 1, 0),
    "box(1,1,1)": (1, 0, 0, 0),
}


def test_domain_spec_validation():
    with pytest.raises(InvalidDomainError):
        mesh.annulus(1.0, 0.5)
    with pytest.raises(InvalidDomainError):
        mesh.ellipse(0.7, 1.0)
    with pytest.raises(InvalidDomainError):
        mesh.box(1, -1, 1)
    with pytest.raises(InvalidDomainError):
        mesh.DomainSpec("disk", (), -1)
    with pytest.raises(InvalidDomainError):
        mesh.DomainSpec("torus", (), 0)


def test_disk_level0_counts():
    K = mesh.generate(mesh.disk(0))
    assert K.n_simplices(0) == 9
    assert K.n_simplices(2) == 8


def test_ball_level0_counts():
    K = mesh.generate(mesh.ball(0))
    assert K.n_simplices(0) == 7
    assert K.n_simplices(3) == 8
    # vertices are +-e_i and the origin
    norms = np.sort(np.linalg.norm(K.vertices, axis=1))
    assert norms[0] == 0.0
    assert np.allclose(norms[1:], 1.0)


def test_refinement_counts():
    K = mesh.generate(mesh.disk(0))
    K1 = mesh.refine(K, mesh.disk(0))
    assert K1.n_simplices(2) == 32
    assert len(K1.boundary_simplices[0]) == 16
    B = mesh.generate(mesh.ball(0))
    B1 = mesh.refine(B, mesh.ball(0))
    assert B1.n_simplices(3) == 64


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_refine_multiplies_top_count(spec):
    K = mesh.generate(spec)
    K2 = mesh.refine(K, spec)
    factor = 4 if K.dim == 2 else 8
    assert K2.n_simplices(K2.dim) == factor * K.n_simplices(K.dim)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_boundary_snapping(spec):
    K = mesh.refine(mesh.generate(spec), spec)
    bverts = K.vertices[K.boundary_simplices[0]]
    fam, p = spec.family, spec.params
    if fam in ("disk", "ball"):
        assert np.abs(np.linalg.norm(bverts, axis=1) - 1).max() < 1e-12
    elif fam in ("ellipse", "ellipsoid"):
        scaled = bverts / np.array(p)
        assert np.abs((scaled ** 2).sum(axis=1) - 1).max() < 1e-12
    elif fam in ("annulus", "shell"):
        r = np.linalg.norm(bverts, axis=1)
        near = np.minimum(np.abs(r - p[0]), np.abs(r - p[1]))
        assert near.max() < 1e-12


def test_ellipse_is_affine_image_of_disk():
    Kd = mesh.generate(mesh.disk(2))
    Ke = mesh.generate(mesh.ellipse(1, 0.7, 2))
    assert np.allclose(Kd.vertices * np.array([1.0, 0.7]), Ke.vertices)
    assert (Kd.tops == Ke.tops).all()


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_coboundary_composition_vanishes(spec):
    K = mesh.generate(spec)
    for p in range(K.dim - 1):
        D1 = mesh.coboundary(K, p)
        D2 = mesh.coboundary(K, p + 1)
        assert abs(D2 @ D1).max() == 0


def test_coboundary_single_triangle():
    K = mesh.SimplicialComplex(2, np.array([[0.0, 0], [1, 0], [0, 1]]),
                               np.array([[0, 1, 2]]))
    D0 = mesh.coboundary(K, 0).toarray()
    # edges in lexicographic order: (0,1), (0,2), (1,2)
    assert (D0 == np.array([[-1, 1, 0], [-1, 0, 1], [0, -1, 1]])).all()


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_betti_and_euler(spec):
    K = mesh.generate(spec)
    b = mesh.betti(K)
    assert b == EXPECTED_BETTI[spec.label()]
    chi = K.euler_characteristic()
    assert chi == sum((-1) ** k * bk for k, bk in enumerate(b))


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_boundary_component_count(spec):
    K = mesh.generate(spec)
    ncomp = len(K.boundary_complex().components())
    assert ncomp == (2 if spec.family in ("annulus", "shell") else 1)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_positive_volumes(spec):
    K = mesh.generate(spec)
    assert K.top_volumes().min() > 0


def test_generation_is_deterministic():
    a = mesh.generate(mesh.shell(0.5, 1, 1))
    b = mesh.generate(mesh.shell(0.5, 1, 1))
    assert (a.vertices == b.vertices).all()
    assert (a.tops == b.tops).all()


def test_mesh_io_roundtrip(tmp_path):
    K = mesh.generate(mesh.ball(1))
    p1 = tmp_path / "m1.smesh"
    p2 = tmp_path / "m2.smesh"
    mesh.write_mesh(p1, K)
    K2 = mesh.read_mesh(p1)
    for k in range(K.dim + 1):
        assert (K.simplices[k] == K2.simplices[k]).all()
    mesh.write_mesh(p2, K2)
    assert p1.read_bytes() == p2.read_bytes()


def test_mesh_io_bad_header(tmp_path):
    p = tmp_path / "bad.smesh"
    p.write_text("wrong 2 3 1\n0 0\n1 0\n0 1\n0 1 2\n")
    with pytest.raises(MeshFormatError):
        mesh.read_mesh(p)


def test_mesh_io_nonmanifold(tmp_path):
    # a face shared by three tetrahedra
    p = tmp_path / "nm.smesh"
    lines = ["smesh 3 6 3",
             "0 0 0", "1 0 0", "0 1 0", "0 0 1", "0 0 -1", "1 1 1"]
    lines += ["0 1 2 3", "0 2 1 4", "0 1 2 5"]
    p.write_text("\n".join(lines) + "\n")
    with pytest.raises(NonManifoldError):
        mesh.read_mesh(p)


def test_mesh_io_negative_volume(tmp_path):
    p = tmp_path / "neg.smesh"
    lines = ["smesh 3 4 1", "0 0 0", "1 0 0", "0 1 0", "0 0 1", "0 2 1 3"]
    p.write_text("\n".join(lines) + "\n")
    with pytest.raises(OrientationError):
        mesh.read_mesh(p)
