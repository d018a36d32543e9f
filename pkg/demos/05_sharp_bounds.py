"""The verification registry on one convex and one non-convex domain.

Each row states a bound: the margin is oriented so nonnegative means the
bound holds, EQUALITY-DETECTED marks margins within tolerance of zero
(sharp cases: the ball meets the curvature and isoperimetric bounds
exactly), and hypothesis violations are SKIPPED rather than evaluated.
"""

from formsteklov import mesh, verify

lab = verify.Lab()
for spec in (mesh.disk(0), mesh.annulus(0.5, 1, 0)):
    print(f"\n=== {spec.label()} ===")
    rep = verify.run_suite([spec], lab=lab,
                           ids=["CHK-LOW-B", "CHK-EQ1", "CHK-CONS",
                                "CHK-ISO-N", "CHK-ESC", "CHK-BIH", "CHK-KER"])
    for r in rep.runs:
        print(f"{r.verdict:18s} {r.check_id:10s} {r.case:24s} "
              f"lhs={r.lhs:10.5f} rhs={r.rhs:10.5f} margin={r.margin:+.2e}")
