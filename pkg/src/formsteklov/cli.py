"""Command-line surface: mesh generation, spectrum computation with level
sweeps, and the verification suite with report/plot-data emission.

Exit codes: 0 success (including WARN verdicts), 2 invalid domain
parameters, 3 solver failure, 4 verification FAIL.
"""

import argparse
import csv
import json
import os
import sys

from . import mesh, steklov, verify
from .errors import FormSteklovError, InvalidDomainError


def _domain_from_args(args) -> mesh.DomainSpec:
    fam = args.domain
    level = args.level if hasattr(args, "level") and args.level is not None else 0
    if fam == "disk":
        return mesh.disk(level)
    if fam == "ball":
        return mesh.ball(level)
    if fam == "ellipse":
        return mesh.ellipse(args.a, args.b, level)
    if fam == "ellipsoid":
        return mesh.ellipsoid(args.a, args.b, args.c, level)
    if fam == "annulus":
        return mesh.annulus(args.rin, args.rout, level)
    if fam == "shell":
        return mesh.shell(args.rin, args.rout, level)
    if fam == "box":
        return mesh.box(args.lx, args.ly, args.lz, level)
    raise InvalidDomainError(fam)


def _add_domain_flags(p):
    p.add_argument("--domain", required=True, choices=mesh.FAMILIES)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=0.7)
    p.add_argument("--c", type=float, default=0.7)
    p.add_argument("--rin", type=float, default=0.5)
    p.add_argument("--rout", type=float, default=1.0)
    p.add_argument("--lx", type=float, default=1.0)
    p.add_argument("--ly", type=float, default=1.0)
    p.add_argument("--lz", type=float, default=1.0)


def _resolved_config(args) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items())
           if k not in ("func",) and v is not None}
    cfg["deterministic"] = bool(getattr(args, "deterministic", False))
    cfg["jobs"] = _jobs(args)
    return cfg


def _jobs(args) -> int:
    if getattr(args, "deterministic", False):
        return 1
    if getattr(args, "jobs", None):
        return args.jobs
    env = os.environ.get("FORMSTEKLOV_JOBS")
    return int(env) if env else 1


def cmd_gen(args) -> int:
    spec = _domain_from_args(args)
    K = mesh.generate(spec)
    mesh.write_mesh(args.out, K)
    print(f"wrote {args.out}: dim {K.dim}, {K.n_simplices(0)} vertices, "
          f"{K.n_simplices(K.dim)} top simplices")
    return 0


def cmd_spectrum(args) -> int:
    out = {"config": _resolved_config(args)}
    k = args.count
    solver = steklov.dual_spectrum if args.dual else steklov.solve_primal
    if args.mesh:
        K = mesh.read_mesh(args.mesh)
        res = solver(K, args.degree, k)
        out["spectrum"] = res.to_json()
    else:
        spec = _domain_from_args(args)
        if args.levels:
            levels = args.levels
        elif args.level is not None:
            levels = [args.level]
        else:
            levels = verify.default_levels(spec)
        results = []
        for level in levels:
            K = mesh.generate(spec.with_level(level))
            results.append(solver(K, args.degree, k, level=level))
        out["spectra"] = [r.to_json() for r in results]
        studies = []
        for idx in range(k):
            vals = [float(r.eigenvalues[idx]) for r in results]
            try:
                studies.append(
                    verify.richardson(levels, vals, f"eigenvalue[{idx}]").to_json())
            except ValueError:
                pass
        out["convergence"] = studies
    text = json.dumps(out, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    else:
        print(text)
    return 0


def _write_csv_tables(report, prefix):
    """Extrapolated-eigenvalue table per (domain, degree) plus level-vs-value
    plot data for every convergence study in the report."""
    rows = []
    seen = set()
    for r in report.runs:
        for s in r.studies:
            if s.quantity in seen:
                continue
            seen.add(s.quantity)
            rows.append(s)
    with open(prefix + "_extrapolated.csv", "w", newline="",
              encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["quantity", "order", "extrapolated", "error_bar", "flagged"])
        for s in sorted(rows, key=lambda s: s.quantity):
            w.writerow([s.quantity,
                        "" if s.order is None else f"{s.order:.6g}",
                        f"{s.extrapolated:.12g}", f"{s.error_bar:.6g}",
                        int(s.flagged)])
    with open(prefix + "_levels.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["quantity", "level", "value"])
        for s in sorted(rows, key=lambda s: s.quantity):
            for level, v in zip(s.levels, s.values):
                w.writerow([s.quantity, level, f"{v:.12g}"])
    return [s for s in rows]


def _write_svg(studies, path, width=640, height=400):
    """Minimal static SVG line chart: level vs value, one polyline per
    tracked quantity (no external plotting stack)."""
    studies = [s for s in studies if len(s.values) >= 2][:12]
    if not studies:
        return
    xs = sorted({l for s in studies for l in s.levels})
    vs = [v for s in studies for v in s.values]
    lo, hi = min(vs), max(vs)
    if hi - lo < 1e-12:
        hi = lo + 1.0
    pad = 48
    def px(l):
        return pad + (width - 2 * pad) * (l - xs[0]) / max(xs[-1] - xs[0], 1)
    def py(v):
        return height - pad - (height - 2 * pad) * (v - lo) / (hi - lo)
    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
              "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
              "#aec7e8", "#98df8a"]
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" font-family="monospace" font-size="10">',
             f'<rect x="{pad}" y="{pad}" width="{width-2*pad}" '
             f'height="{height-2*pad}" fill="none" stroke="#333"/>']
    for x in xs:
        parts.append(f'<text x="{px(x):.1f}" y="{height-pad+14}" '
                     f'text-anchor="middle">{x}</text>')
    parts.append(f'<text x="{pad-6:.1f}" y="{py(lo):.1f}" '
                 f'text-anchor="end">{lo:.3g}</text>')
    parts.append(f'<text x="{pad-6:.1f}" y="{py(hi)+8:.1f}" '
                 f'text-anchor="end">{hi:.3g}</text>')
    for i, s in enumerate(studies):
        pts = " ".join(f"{px(l):.1f},{py(v):.1f}"
                       for l, v in zip(s.levels, s.values))
        c = colors[i % len(colors)]
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{c}" '
                     'stroke-width="1.5"/>')
        parts.append(f'<text x="{width-pad+4}" y="{pad+12*i+10}" fill="{c}" '
                     f'text-anchor="start" font-size="8">{s.quantity[:28]}</text>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(parts) + "\n")


def cmd_verify(args) -> int:
    spec = _domain_from_args(args)
    if args.levels and len(args.levels) > 1:
        levels = args.levels
    elif (args.levels and len(args.levels) == 1) or args.max_level is not None:
        top = args.levels[0] if args.levels else args.max_level
        levels = list(range(max(0, top - 3), top + 1))
    else:
        levels = verify.default_levels(spec)
    ids = args.checks.split(",") if args.checks else None
    lab = verify.Lab()
    report = verify.run_suite([spec], levels=levels, ids=ids, lab=lab,
                              jobs=_jobs(args))
    payload = {"config": _resolved_config(args), **report.to_json()}
    prefix = args.report or "verify_report"
    with open(prefix + ".json", "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    studies = _write_csv_tables(report, prefix)
    _write_svg(studies, prefix + "_levels.svg")
    counts = report.verdict_counts()
    for r in report.runs:
        print(f"{r.verdict:18s} {r.check_id:12s} {r.case:30s} "
              f"margin={r.margin:+.3e} tol={r.tolerance:.2e}")
    print(f"summary: {counts}")
    return 4 if report.has_fail() else 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="formsteklov",
        description="Steklov spectra of differential forms on benchmark "
                    "domains and verification of their sharp bounds")
    ap.add_argument("--jobs", type=int, default=None,
                    help="parallel check evaluation (default: "
                         "FORMSTEKLOV_JOBS or serial)")
    ap.add_argument("--deterministic", action="store_true",
                    help="force serial, bit-reproducible execution")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a mesh file")
    _add_domain_flags(g)
    g.add_argument("--level", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("spectrum", help="compute a Steklov spectrum")
    _add_domain_flags(s)
    s.add_argument("--mesh", help="mesh file instead of a level sweep")
    s.add_argument("--level", type=int, default=None)
    s.add_argument("--levels", type=int, nargs="+", default=None)
    s.add_argument("--degree", type=int, default=0)
    s.add_argument("--dual", action="store_true")
    s.add_argument("--count", type=int, default=6)
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("verify", help="run verification checks")
    _add_domain_flags(v)
    v.add_argument("--levels", type=int, nargs="+", default=None)
    v.add_argument("--max-level", type=int, default=None,
                   help="use the four levels ending here")
    v.add_argument("--checks", default=None,
                   help="comma-separated check ids (default: all)")
    v.add_argument("--report", default=None, help="output file prefix")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InvalidDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FormSteklovError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
