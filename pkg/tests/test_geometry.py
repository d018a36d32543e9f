import numpy as np
import pytest

from formsteklov import geometry, mesh


def test_measures_octahedron():
    K = mesh.generate(mesh.ball(0))
    vol, area = geometry.measures(K)
    assert np.isclose(vol, 4.0 / 3.0)
    assert np.isclose(area, 4.0 * np.sqrt(3.0))


@pytest.mark.parametrize("lvl", [0, 1, 2, 3])
def test_measures_disk_inscribed_polygon(lvl):
    K = mesh.generate(mesh.disk(lvl))
    vol, area = geometry.measures(K)
    m = 8 * 2 ** lvl
    assert np.isclose(vol, m / 2 * np.sin(2 * np.pi / m))
    assert np.isclose(area, 2 * m * np.sin(np.pi / m))


def test_measures_box():
    K = mesh.generate(mesh.box(1, 1, 1, 1))
    vol, area = geometry.measures(K)
    assert np.isclose(vol, 1.0)
    assert np.isclose(area, 6.0)


def test_measure_convergence_order_two():
    for spec, exact in ((mesh.disk(0), np.pi), (mesh.ball(0), 4 * np.pi / 3)):
        errs = []
        for lvl in range(1, 4):
            K = mesh.generate(spec.with_level(lvl))
            errs.append(abs(geometry.measures(K)[0] - exact))
        ratios = [errs[i] / errs[i + 1] for i in range(len(errs) - 1)]
        assert min(ratios) > 3.0   # error ratio about 1/4 per level


def test_ball_report():
    g = geometry.analytic_geometry(mesh.ball(0))
    assert g.sigma == (1.0, 2.0)
    assert g.H == 1.0
    assert np.isclose(g.iso_ratio, 3.0)
    assert g.convex
    d = geometry.analytic_geometry(mesh.disk(0))
    assert np.isclose(d.iso_ratio, 2.0)


def test_ellipse_sigma_is_min_curvature():
    g = geometry.analytic_geometry(mesh.ellipse(1, 0.7, 0))
    assert np.isclose(g.sigma[0], 0.7)
    # perimeter against the arithmetic-geometric-mean algorithm
    a, b = 1.0, 0.7
    # Gauss: P = 2 pi * AGM-based series via the complete elliptic integral
    from scipy.special import ellipe
    e2 = 1 - (b / a) ** 2
    per = 4 * a * ellipe(e2)
    assert np.isclose(g.vol_sigma, per, rtol=1e-8)


def test_annulus_inner_curvature_negative():
    g = geometry.analytic_geometry(mesh.annulus(0.5, 1, 0))
    assert np.isclose(g.sigma[0], -2.0)
    assert not g.convex
    assert np.isclose(g.iso_ratio, 4.0)


def test_ellipsoid_sigma_sampling():
    # degenerate to the sphere: p-curvatures are exactly (1, 2)
    g = geometry.analytic_geometry(mesh.ellipsoid(1, 1, 1, 0))
    assert abs(g.sigma[0] - 1.0) < 1e-6
    assert abs(g.sigma[1] - 2.0) < 1e-6
    # triaxial: minimum curvature c/a^2 at the flattest pole
    g = geometry.analytic_geometry(mesh.ellipsoid(1, 0.8, 0.7, 0))
    assert abs(g.sigma[0] - 0.7) < 1e-6
    assert abs(g.sigma[1] - (0.7 + 0.7 / 0.64)) < 1e-6
    # sphere area sanity through the quadrature path
    gs = geometry.analytic_geometry(mesh.ellipsoid(1, 1, 1, 0))
    assert np.isclose(gs.vol_sigma, 4 * np.pi, rtol=1e-7)


def test_sigma_superadditivity():
    # sigma_{p+1} >= sigma_p + sigma_1 for every benchmark family
    for spec in (mesh.ball(0), mesh.ellipsoid(1, 0.8, 0.7, 0),
                 mesh.shell(0.5, 1, 0), mesh.box(1, 1, 1, 0)):
        g = geometry.analytic_geometry(spec)
        assert g.sigma[1] >= g.sigma[0] + g.sigma[0] - 1e-9


def test_hypothesis_gate():
    ann = geometry.analytic_geometry(mesh.annulus(0.5, 1, 0))
    ball = geometry.analytic_geometry(mesh.ball(0))
    assert geometry.hypothesis_gate(ball, "CHK-LOW-B", degree=2).satisfied
    r = geometry.hypothesis_gate(ann, "CHK-LOW-A", degree=1)
    assert not r.satisfied and "sigma_1" in r.reason
    r = geometry.hypothesis_gate(ann, "CHK-ISO-PAIR", degree=0,
                                 betti=(1, 1, 0))
    assert not r.satisfied
    assert geometry.hypothesis_gate(ball, "CHK-ISO-PAIR", degree=2,
                                    betti=(1, 0, 0, 0)).satisfied
    assert geometry.hypothesis_gate(ann, "CHK-CONS").satisfied
    with pytest.raises(Exception):
        geometry.hypothesis_gate(ball, "CHK-NOPE")
