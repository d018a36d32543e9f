"""Closed-form differential p-forms with polynomial coefficients.

A field is stored by its components on the ascending coordinate basis
dx_{i1} ^ ... ^ dx_{ip}; each component is a vectorized callable of the
point array.  These provide the test fields (constant-coefficient forms and
differentials of harmonic polynomials) for the boundary/volume norm ratios.
"""

import itertools

import numpy as np


class FormField:
    """A p-form on R^dim given by component functions.

    Parameters
    ----------
    dim : ambient dimension (2 or 3)
    degree : form degree p
    components : dict mapping ascending index tuples to callables
        ``f(points) -> values`` with ``points`` of shape (n, dim).
    name : display label
    """

    def __init__(self, dim, degree, components, name=""):
        self.dim = dim
        self.degree = degree
        self.components = {tuple(k): v for k, v in components.items()}
        self.name = name
        for k in self.components:
            if len(k) != degree or list(k) != sorted(k):
                raise ValueError(f"bad index tuple {k}")

    def component(self, idx, points):
        f = self.components.get(tuple(idx))
        if f is None:
            return np.zeros(len(points))
        return np.asarray(f(points), dtype=float) + np.zeros(len(points))

    def norm_sq(self, points):
        """Pointwise squared norm (orthonormal coordinate basis)."""
        out = np.zeros(len(points))
        for idx in itertools.combinations(range(self.dim), self.degree):
            out += self.component(idx, points) ** 2
        return out

    def contract_sq(self, points, vectors):
        """Pointwise squared norm of the contraction i_V of the field.

        ``vectors`` has shape (n, dim).  The contraction of a p-form with a
        vector is a (p-1)-form; its squared norm needs the signed sum over
        insertions before squaring.
        """
        p = self.degree
        if p == 0:
            return np.zeros(len(points))
        out = np.zeros(len(points))
        for J in itertools.combinations(range(self.dim), p - 1):
            val = np.zeros(len(points))
            for k in range(self.dim):
                if k in J:
                    continue
                full = tuple(sorted(J + (k,)))
                sign = (-1) ** full.index(k)
                val += sign * vectors[:, k] * self.component(full, points)
            out += val ** 2
        return out


def parallel_form(dim, indices, name=None):
    """Constant-coefficient unit form dx_{i1} ^ ... ^ dx_{ip}."""
    idx = tuple(indices)
    label = name or ("dx" + "".join(str(i + 1) for i in idx))
    return FormField(dim, len(idx), {idx: lambda pts: np.ones(len(pts))}, name=label)


def gradient_field(dim, partials, name=""):
    """The 1-form df from its partial derivatives."""
    comps = {(i,): (lambda f: (lambda pts: f(pts)))(g) for i, g in enumerate(partials)}
    return FormField(dim, 1, comps, name=name)


def harmonic_polynomials(dim):
    """Non-constant harmonic polynomials with analytic gradients.

    Returns a list of (name, f, [partials]) with f and each partial a
    vectorized callable; planar families are the real/imaginary parts of
    (x+iy)^m, spatial ones are real solid harmonics.
    """
    if dim == 2:
        out = []
        specs = [
            ("Re z^1", lambda x, y: x, [lambda x, y: 1 + 0 * x, lambda x, y: 0 * x]),
            ("Im z^1", lambda x, y: y, [lambda x, y: 0 * x, lambda x, y: 1 + 0 * x]),
            ("Re z^2", lambda x, y: x ** 2 - y ** 2,
             [lambda x, y: 2 * x, lambda x, y: -2 * y]),
            ("Im z^2", lambda x, y: 2 * x * y,
             [lambda x, y: 2 * y, lambda x, y: 2 * x]),
            ("Re z^3", lambda x, y: x ** 3 - 3 * x * y ** 2,
             [lambda x, y: 3 * x ** 2 - 3 * y ** 2, lambda x, y: -6 * x * y]),
            ("Im z^3", lambda x, y: 3 * x ** 2 * y - y ** 3,
             [lambda x, y: 6 * x * y, lambda x, y: 3 * x ** 2 - 3 * y ** 2]),
            ("Re z^4", lambda x, y: x ** 4 - 6 * x ** 2 * y ** 2 + y ** 4,
             [lambda x, y: 4 * x ** 3 - 12 * x * y ** 2,
              lambda x, y: -12 * x ** 2 * y + 4 * y ** 3]),
            ("Im z^4", lambda x, y: 4 * x ** 3 * y - 4 * x * y ** 3,
             [lambda x, y: 12 * x ** 2 * y - 4 * y ** 3,
              lambda x, y: 4 * x ** 3 - 12 * x * y ** 2]),
        ]
        for name, f, grads in specs:
            out.append((
                name,
                (lambda f=f: lambda pts: f(pts[:, 0], pts[:, 1]))(),
                [(lambda g=g: lambda pts: g(pts[:, 0], pts[:, 1]))() for g in grads],
            ))
        return out

    specs3 = [
        ("x", lambda x, y, z: x, [lambda x, y, z: 1 + 0 * x, lambda x, y, z: 0 * x,
                                  lambda x, y, z: 0 * x]),
        ("y", lambda x, y, z: y, [lambda x, y, z: 0 * x, lambda x, y, z: 1 + 0 * x,
                                  lambda x, y, z: 0 * x]),
        ("z", lambda x, y, z: z, [lambda x, y, z: 0 * x, lambda x, y, z: 0 * x,
                                  lambda x, y, z: 1 + 0 * x]),
        ("xy", lambda x, y, z: x * y,
         [lambda x, y, z: y, lambda x, y, z: x, lambda x, y, z: 0 * x]),
        ("yz", lambda x, y, z: y * z,
         [lambda x, y, z: 0 * x, lambda x, y, z: z, lambda x, y, z: y]),
        ("xz", lambda x, y, z: x * z,
         [lambda x, y, z: z, lambda x, y, z: 0 * x, lambda x, y, z: x]),
        ("x2-y2", lambda x, y, z: x ** 2 - y ** 2,
         [lambda x, y, z: 2 * x, lambda x, y, z: -2 * y, lambda x, y, z: 0 * x]),
        ("2z2-x2-y2", lambda x, y, z: 2 * z ** 2 - x ** 2 - y ** 2,
         [lambda x, y, z: -2 * x, lambda x, y, z: -2 * y, lambda x, y, z: 4 * z]),
        ("xyz", lambda x, y, z: x * y * z,
         [lambda x, y, z: y * z, lambda x, y, z: x * z, lambda x, y, z: x * y]),
        ("x(x2-3y2)", lambda x, y, z: x * (x ** 2 - 3 * y ** 2),
         [lambda x, y, z: 3 * x ** 2 - 3 * y ** 2, lambda x, y, z: -6 * x * y,
          lambda x, y, z: 0 * x]),
        ("z(x2-y2)", lambda x, y, z: z * (x ** 2 - y ** 2),
         [lambda x, y, z: 2 * x * z, lambda x, y, z: -2 * y * z,
          lambda x, y, z: x ** 2 - y ** 2]),
        ("x(4z2-x2-y2)", lambda x, y, z: x * (4 * z ** 2 - x ** 2 - y ** 2),
         [lambda x, y, z: 4 * z ** 2 - 3 * x ** 2 - y ** 2, lambda x, y, z: -2 * x * y,
          lambda x, y, z: 8 * x * z]),
        ("z(2z2-3x2-3y2)", lambda x, y, z: z * (2 * z ** 2 - 3 * x ** 2 - 3 * y ** 2),
         [lambda x, y, z: -6 * x * z, lambda x, y, z: -6 * y * z,
          lambda x, y, z: 6 * z ** 2 - 3 * x ** 2 - 3 * y ** 2]),
    ]
    out = []
    for name, f, grads in specs3:
        out.append((
            name,
            (lambda f=f: lambda pts: f(pts[:, 0], pts[:, 1], pts[:, 2]))(),
            [(lambda g=g: lambda pts: g(pts[:, 0], pts[:, 1], pts[:, 2]))()
             for g in grads],
        ))
    return out
