"""Simplicial meshes of the benchmark domain families.

Deterministic structured generators (no external meshers), uniform
refinement with boundary snapping, oriented boundary extraction, signed
incidence (coboundary) matrices, mod-2 Betti numbers, and a plain-text
file format.

Conventions
-----------
* Simplices of dimension k < dim are stored with ascending vertex indices.
* Top simplices are stored so that their signed volume is positive (the
  generators swap the last two vertices where needed).
* Boundary (dim-1)-simplices carry the orientation induced by the outward
  side of their unique parent top simplex; the boundary complex stores its
  top simplices in that induced order.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSimplexError,
    InvalidDomainError,
    MeshFormatError,
    NonManifoldError,
    OrientationError,
)

_FAMILIES_2D = ("disk", "ellipse", "annulus")
_FAMILIES_3D = ("ball", "ellipsoid", "shell", "box")
FAMILIES = _FAMILIES_2D + _FAMILIES_3D


@dataclass(frozen=True)
class DomainSpec:
    """A benchmark domain family with metric parameters and refinement level."""

    family: str
    params: tuple = ()
    level: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidDomainError(f"unknown family {self.family!r}")
        if self.level < 0:
            raise InvalidDomainError("level must be >= 0")
        p = tuple(float(x) for x in self.params)
        object.__setattr__(self, "params", p)
        expected = {"disk": 0, "ball": 0, "ellipse": 2, "annulus": 2,
                    "ellipsoid": 3, "shell": 2, "box": 3}[self.family]
        if len(p) != expected:
            raise InvalidDomainError(
                f"{self.family} takes {expected} parameters, got {len(p)}")
        if any(x <= 0 for x in p):
            raise InvalidDomainError("all metric parameters must be positive")
        if self.family in ("annulus", "shell") and p[0] >= p[1]:
            raise InvalidDomainError("need r_in < r_out")
        if self.family == "ellipse" and p[0] < p[1]:
            raise InvalidDomainError("ellipse needs a >= b")
        if self.family == "ellipsoid" and not (p[0] >= p[1] >= p[2]):
            raise InvalidDomainError("ellipsoid needs a >= b >= c")

    @property
    def dim(self) -> int:
        return 2 if self.family in _FAMILIES_2D else 3

    def with_level(self, level: int) -> "DomainSpec":
        return DomainSpec(self.family, self.params, level)

    def label(self) -> str:
        if self.params:
            inner = ",".join(f"{x:g}" for x in self.params)
            return f"{self.family}({inner})"
        return self.family


def disk(level=0):
    return DomainSpec("disk", (), level)


def ellipse(a, b, level=0):
    return DomainSpec("ellipse", (a, b), level)


def annulus(r_in, r_out, level=0):
    return DomainSpec("annulus", (r_in, r_out), level)


def ball(level=0):
    return DomainSpec("ball", (), level)


def ellipsoid(a, b, c, level=0):
    return DomainSpec("ellipsoid", (a, b, c), level)


def shell(r_in, r_out, level=0):
    return DomainSpec("shell", (r_in, r_out), level)


def box(lx, ly, lz, level=0):
    return DomainSpec("box", (lx, ly, lz), level)


# ---------------------------------------------------------------------------
# small combinatorial helpers


def _sort_parity(rows: np.ndarray):
    """Sorted copy of each row and the permutation parity (+1/-1) of the sort."""
    rows = np.asarray(rows)
    w = rows.shape[1]
    inv = np.zeros(len(rows), dtype=np.int64)
    for i in range(w):
        for j in range(i + 1, w):
            inv += rows[:, i] > rows[:, j]
    sign = np.where(inv % 2 == 0, 1, -1).astype(np.int64)
    return np.sort(rows, axis=1), sign


def _signed_volumes(vertices: np.ndarray, tops: np.ndarray) -> np.ndarray:
    """Signed volumes of full-dimensional simplices."""
    d = tops.shape[1] - 1
    v = vertices[tops]
    edges = v[:, 1:, :] - v[:, :1, :]
    return np.linalg.det(edges) / math.factorial(d)


def simplex_measures(vertices: np.ndarray, simp: np.ndarray) -> np.ndarray:
    """Unsigned k-volumes of (possibly embedded) simplices."""
    k = simp.shape[1] - 1
    if k == 0:
        return np.ones(len(simp))
    v = vertices[simp]
    e = v[:, 1:, :] - v[:, :1, :]
    gram = np.einsum("nij,nkj->nik", e, e)
    det = np.linalg.det(gram)
    return np.sqrt(np.maximum(det, 0.0)) / math.factorial(k)


class SimplicialComplex:
    """An oriented simplicial complex with all face tables derived.

    Parameters
    ----------
    dim : int
        Manifold dimension of the top simplices.
    vertices : (nv, m) float array
        Vertex coordinates, m >= dim.
    tops : (nt, dim+1) int array
        Top simplices in stored (orientation-carrying) vertex order.
    check_orientation : bool
        Require positive signed volume of every top simplex (only possible
        when m == dim).
    """

    def __init__(self, dim, vertices, tops, check_orientation=True):
        self.dim = int(dim)
        self.vertices = np.ascontiguousarray(vertices, dtype=float)
        tops = np.ascontiguousarray(tops, dtype=np.int64)
        if tops.shape[1] != self.dim + 1:
            raise MeshFormatError("top simplex width does not match dimension")
        self.ambient = self.vertices.shape[1]
        if check_orientation and self.ambient == self.dim:
            vols = _signed_volumes(self.vertices, tops)
            if np.any(np.abs(vols) < 1e-14):
                raise DegenerateSimplexError(
                    f"zero-volume simplex at index {int(np.argmin(np.abs(vols)))}")
            if np.any(vols <= 0):
                raise OrientationError(
                    f"non-positive simplex volume at index {int(np.argmin(vols))}")

        # face tables, local-to-global maps and relative signs per level
        self.simplices: list = [None] * (self.dim + 1)
        self.faces_of_top: list = [None] * (self.dim + 1)
        self.face_signs_of_top: list = [None] * (self.dim + 1)
        self.simplices[self.dim] = tops
        nloc = self.dim + 1
        for k in range(self.dim):
            subsets = list(itertools.combinations(range(nloc), k + 1))
            cols = [tops[:, s] for s in subsets]
            raw = np.concatenate(cols, axis=0)
            srt, sgn = _sort_parity(raw)
            uniq, inverse = np.unique(srt, axis=0, return_inverse=True)
            self.simplices[k] = uniq
            nt = len(tops)
            self.faces_of_top[k] = inverse.reshape(len(subsets), nt).T.copy()
            self.face_signs_of_top[k] = sgn.reshape(len(subsets), nt).T.copy()
        self.faces_of_top[self.dim] = np.arange(len(tops))[:, None]
        self.face_signs_of_top[self.dim] = np.ones((len(tops), 1), dtype=np.int64)

        self._extract_boundary()
        self._bc = None

    # -- basic queries ------------------------------------------------------

    def n_simplices(self, k: int) -> int:
        return len(self.simplices[k])

    @property
    def tops(self) -> np.ndarray:
        return self.simplices[self.dim]

    def top_volumes(self) -> np.ndarray:
        if self.ambient == self.dim:
            return _signed_volumes(self.vertices, self.tops)
        return simplex_measures(self.vertices, self.tops)

    def euler_characteristic(self) -> int:
        return int(sum((-1) ** k * self.n_simplices(k) for k in range(self.dim + 1)))

    # -- boundary -----------------------------------------------------------

    def _extract_boundary(self):
        d = self.dim
        if d == 0:
            self.boundary_faces = np.zeros(0, dtype=np.int64)
            self.boundary_signs = np.zeros(0, dtype=np.int64)
            self.boundary_simplices = [np.zeros(0, dtype=np.int64)]
            return
        fot = self.faces_of_top[d - 1]          # (nt, d+1) global indices
        counts = np.bincount(fot.ravel(), minlength=self.n_simplices(d - 1))
        if np.any(counts > 2) or np.any(counts == 0):
            bad = int(np.argmax(counts))
            raise NonManifoldError(
                f"(dim-1)-simplex {bad} belongs to {int(counts[bad])} top simplices")
        self.boundary_faces = np.flatnonzero(counts == 1)

        # induced orientation: omitting local position j of a positive top
        # contributes (-1)^j, composed with the parity of the stored subsequence
        nloc = d + 1
        subsets = list(itertools.combinations(range(nloc), d))
        omitted = [next(iter(set(range(nloc)) - set(s))) for s in subsets]
        sign_of_face = np.zeros(self.n_simplices(d - 1), dtype=np.int64)
        for c, s in enumerate(subsets):
            js = omitted[c]
            sgn = (-1) ** js * self.face_signs_of_top[d - 1][:, c]
            idx = fot[:, c]
            on_b = counts[idx] == 1
            sign_of_face[idx[on_b]] = sgn[on_b]
        self.boundary_signs = sign_of_face[self.boundary_faces]

        # all lower simplices lying on the boundary
        bset = [None] * d
        bset[d - 1] = self.boundary_faces
        bfaces = self.simplices[d - 1][self.boundary_faces]
        for k in range(d - 1):
            sub = list(itertools.combinations(range(d), k + 1))
            rows = np.concatenate([bfaces[:, s] for s in sub], axis=0)
            rows = np.unique(rows, axis=0)
            bset[k] = _row_lookup(self.simplices[k], rows)
        self.boundary_simplices = bset

        # boundary of the boundary must be closed
        if d >= 2 and len(self.boundary_faces):
            srt, _ = _sort_parity(
                np.concatenate([bfaces[:, s]
                                for s in itertools.combinations(range(d), d - 1)], axis=0))
            _, cnt = np.unique(srt, axis=0, return_counts=True)
            if np.any(cnt != 2):
                raise NonManifoldError("boundary complex is not closed")

    def boundary_complex(self) -> "BoundaryComplex":
        """The induced complex of the boundary, with parent maps."""
        if self._bc is None:
            self._bc = BoundaryComplex._build(self)
        return self._bc


def _row_lookup(table: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Indices of each query row inside a table of unique ascending rows."""
    if len(queries) == 0:
        return np.zeros(0, dtype=np.int64)
    pos = {tuple(r): i for i, r in enumerate(table.tolist())}
    return np.array([pos[tuple(r)] for r in queries.tolist()], dtype=np.int64)


class BoundaryComplex(SimplicialComplex):
    """The boundary of a volume complex as a complex of its own.

    Tops realize the induced (outward) orientation.  ``parent_index[k]`` and
    ``parent_sign[k]`` map each boundary k-simplex to the matching k-simplex
    of the parent complex and give the relative orientation of the stored
    vertex orders.
    """

    @classmethod
    def _build(cls, K: SimplicialComplex):
        d = K.dim
        bfaces = K.simplices[d - 1][K.boundary_faces]
        used = np.unique(bfaces)
        new_of_old = -np.ones(K.n_simplices(0), dtype=np.int64)
        new_of_old[used] = np.arange(len(used))
        tops = new_of_old[bfaces]
        flip = K.boundary_signs == -1
        if np.any(flip):
            tops[flip] = np.concatenate(
                [tops[flip, :-2], tops[flip, -1:], tops[flip, -2:-1]], axis=1)
        sc = cls(d - 1, K.vertices[used], tops, check_orientation=False)
        sc.vertex_parent = used
        parent_index = [None] * d
        parent_sign = [None] * d
        for k in range(d - 1):
            rows_old = used[sc.simplices[k]]
            parent_index[k] = _row_lookup(K.simplices[k], rows_old)
            parent_sign[k] = np.ones(len(rows_old), dtype=np.int64)
        # top level: stored tuples realize the induced orientation, the parent
        # stores the ascending tuple
        srt, sgn = _sort_parity(used[sc.simplices[d - 1]])
        parent_index[d - 1] = _row_lookup(K.simplices[d - 1], srt)
        parent_sign[d - 1] = sgn
        sc.parent_index = parent_index
        sc.parent_sign = parent_sign
        return sc

    def components(self):
        """Connected components as lists of top-simplex indices."""
        nf = self.n_simplices(self.dim)
        adj = [[] for _ in range(self.n_simplices(0))]
        for i, row in enumerate(self.tops.tolist()):
            for v in row:
                adj[v].append(i)
        seen = np.zeros(nf, dtype=bool)
        comps = []
        for start in range(nf):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                f = stack.pop()
                comp.append(f)
                for v in self.tops[f]:
                    for g in adj[v]:
                        if not seen[g]:
                            seen[g] = True
                            stack.append(g)
            comps.append(sorted(comp))
        return comps


# ---------------------------------------------------------------------------
# coboundary and Betti numbers


def coboundary(K: SimplicialComplex, p: int):
    """Signed incidence matrix mapping p-cochains to (p+1)-cochains.

    Entries are -1/0/+1; the sign of face sigma in simplex tau is
    (-1)^(position of the omitted vertex) composed with the parity of the
    stored vertex order.  Returns a scipy CSR matrix with integer entries.
    """
    from scipy import sparse

    if not 0 <= p < K.dim:
        raise ValueError(f"coboundary degree {p} out of range for dim {K.dim}")
    parents = K.simplices[p + 1]
    n_par, n_fac = len(parents), K.n_simplices(p)
    w = p + 2
    rows, cols, vals = [], [], []
    for j in range(w):
        sub = parents[:, [i for i in range(w) if i != j]]
        srt, sgn = _sort_parity(sub)
        rows.append(np.arange(n_par))
        cols.append(_row_lookup(K.simplices[p], srt))
        vals.append((-1) ** j * sgn)
    D = sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n_par, n_fac), dtype=np.int64)
    return D.tocsr()


def _gf2_rank(dense_bits: np.ndarray) -> int:
    """Rank over GF(2) of a boolean matrix via packed-word elimination."""
    m, n = dense_bits.shape
    if m == 0 or n == 0:
        return 0
    words = (n + 63) // 64
    packed = np.zeros((m, words), dtype=np.uint64)
    r, c = np.nonzero(dense_bits)
    np.bitwise_xor.at(packed, (r, c // 64), np.uint64(1) << (c % 64).astype(np.uint64))
    rank = 0
    row_used = np.zeros(m, dtype=bool)
    for col in range(n):
        wrd, bit = col // 64, np.uint64(1) << np.uint64(col % 64)
        hits = np.flatnonzero(((packed[:, wrd] & bit) != 0) & ~row_used)
        if len(hits) == 0:
            continue
        piv = hits[0]
        row_used[piv] = True
        rank += 1
        others = hits[1:]
        if len(others):
            packed[others] ^= packed[piv]
    return rank


def betti(K: SimplicialComplex):
    """Betti numbers over GF(2) (equal to the real ones for the benchmark
    domains, which are orientable and torsion-free)."""
    ranks = []
    for p in range(K.dim):
        D = coboundary(K, p)
        ranks.append(_gf2_rank(np.asarray(D.todense() % 2, dtype=bool)))
    out = []
    for p in range(K.dim + 1):
        n_p = K.n_simplices(p)
        r_up = ranks[p] if p < K.dim else 0
        r_dn = ranks[p - 1] if p > 0 else 0
        out.append(n_p - r_up - r_dn)
    return tuple(int(b) for b in out)


# ---------------------------------------------------------------------------
# generators


def _orient_tops(vertices, tops):
    tops = np.array(tops, dtype=np.int64)
    vols = _signed_volumes(np.asarray(vertices, float), tops)
    neg = vols < 0
    if np.any(neg):
        tops[neg] = np.concatenate(
            [tops[neg, :-2], tops[neg, -1:], tops[neg, -2:-1]], axis=1)
    return tops


def _base_disk():
    ang = 2 * np.pi * np.arange(8) / 8
    verts = np.vstack([[0.0, 0.0], np.column_stack([np.cos(ang), np.sin(ang)])])
    tops = [(0, 1 + k, 1 + (k + 1) % 8) for k in range(8)]
    return verts, _orient_tops(verts, tops)


def _layered_annulus(r_in, r_out, level):
    # direct layered construction per level: refining a layered mesh twice
    # would re-refine the tangential slivers at the concave inner circle
    m = 8 * 2 ** level
    layers = 2 ** level
    ang = 2 * np.pi * np.arange(m) / m
    u = np.column_stack([np.cos(ang), np.sin(ang)])
    radii = np.linspace(r_in, r_out, layers + 1)
    verts = np.vstack([r * u for r in radii])
    tops = []
    for l in range(layers):
        lo, hi = l * m, (l + 1) * m
        for k in range(m):
            k1 = (k + 1) % m
            tops.append((lo + k, hi + k, hi + k1))
            tops.append((lo + k, hi + k1, lo + k1))
    return verts, _orient_tops(verts, tops)


def _base_ball():
    verts = np.array([
        [0.0, 0.0, 0.0],
        [1, 0, 0], [-1, 0, 0],
        [0, 1, 0], [0, -1, 0],
        [0, 0, 1], [0, 0, -1],
    ], dtype=float)
    tops = []
    for i in (1, 2):
        for j in (3, 4):
            for k in (5, 6):
                tops.append((0, i, j, k))
    return verts, _orient_tops(verts, tops)


def _prism_split(bottom, top):
    """Split a triangular prism into three tets with index-consistent
    diagonals (quad (i, j) gets the diagonal through min(i, j))."""
    order = np.argsort(bottom)
    b = [bottom[i] for i in order]
    t = [top[i] for i in order]
    return [(b[0], b[1], b[2], t[2]), (b[0], b[1], t[2], t[1]), (b[0], t[1], t[2], t[0])]


def _layered_shell(r_in, r_out, level):
    # direct layered construction per level (see _layered_annulus); the
    # angular triangulation is the boundary sphere of the refined octahedron
    sphere = generate(ball(1 + level)).boundary_complex()
    dirs = sphere.vertices / np.linalg.norm(sphere.vertices, axis=1, keepdims=True)
    tris = sphere.tops
    ns = len(dirs)
    n_layers = 2 * 2 ** level
    radii = np.linspace(r_in, r_out, n_layers + 1)
    verts = np.vstack([r * dirs for r in radii])
    tops = []
    for layer in range(n_layers):
        lo, hi = layer * ns, (layer + 1) * ns
        for tri in tris.tolist():
            tops.extend(_prism_split([lo + v for v in tri], [hi + v for v in tri]))
    return verts, _orient_tops(verts, tops)


def _base_box(lx, ly, lz):
    corners = np.array(list(itertools.product((0, 1), repeat=3)), dtype=float)
    verts = corners * np.array([lx, ly, lz])

    def cidx(b):
        return b[0] * 4 + b[1] * 2 + b[2]

    tops = []
    for perm in itertools.permutations(range(3)):
        b = [0, 0, 0]
        path = [cidx(b)]
        for ax in perm:
            b[ax] = 1
            path.append(cidx(b))
        tops.append(tuple(path))
    return verts, _orient_tops(verts, tops)


def _snap_boundary(spec: DomainSpec, pts: np.ndarray) -> np.ndarray:
    """Project points onto the analytic boundary surface of the family."""
    fam, p = spec.family, spec.params
    if fam == "box":
        return pts
    if fam in ("disk", "ball"):
        return pts / np.linalg.norm(pts, axis=1, keepdims=True)
    if fam in ("ellipse", "ellipsoid"):
        scale = np.array(p)
        y = pts / scale
        y /= np.linalg.norm(y, axis=1, keepdims=True)
        return y * scale
    # annulus / shell: project to the nearer of the two radii
    r_in, r_out = p
    r = np.linalg.norm(pts, axis=1, keepdims=True)
    target = np.where(np.abs(r - r_in) <= np.abs(r - r_out), r_in, r_out)
    return pts * (target / r)


_TRI_CHILDREN = ((0, 3, 5), (3, 1, 4), (5, 4, 2), (3, 4, 5))
# local vertex layout for a refined triangle: 0,1,2 corners; 3=m01, 4=m12, 5=m02
_TET_CHILDREN = (
    (0, 4, 5, 6), (4, 1, 7, 8), (5, 7, 2, 9), (6, 8, 9, 3),
    (4, 5, 6, 8), (4, 5, 8, 7), (5, 6, 8, 9), (5, 7, 9, 8),
)
# corners 0..3; midpoints 4=m01, 5=m02, 6=m03, 7=m12, 8=m13, 9=m23


def refine(K: SimplicialComplex, spec: DomainSpec) -> SimplicialComplex:
    """Uniform subdivision (4 children per triangle, 8 per tetrahedron) with
    new boundary vertices snapped onto the analytic boundary."""
    d = K.dim
    edges = K.simplices[1]
    nv = K.n_simplices(0)
    mids = 0.5 * (K.vertices[edges[:, 0]] + K.vertices[edges[:, 1]])
    on_b = np.zeros(len(edges), dtype=bool)
    on_b[K.boundary_simplices[1]] = True
    if np.any(on_b):
        mids[on_b] = _snap_boundary(spec, mids[on_b])
    verts = np.vstack([K.vertices, mids])

    tops = K.tops
    eot = K.faces_of_top[1]  # (nt, n_local_edges) in combination order
    if d == 2:
        # local edges of (a,b,c) in combination order: (a,b), (a,c), (b,c)
        locv = np.column_stack([tops, nv + eot[:, [0, 2, 1]]])
        pattern = _TRI_CHILDREN
    else:
        # local edges of (a,b,c,d): (a,b),(a,c),(a,d),(b,c),(b,d),(c,d)
        locv = np.column_stack([tops, nv + eot])
        pattern = _TET_CHILDREN
    children = np.concatenate([locv[:, list(ch)] for ch in pattern], axis=0)
    return SimplicialComplex(d, verts, children)


def generate(spec: DomainSpec) -> SimplicialComplex:
    """Mesh of the requested domain at its refinement level."""
    fam, p = spec.family, spec.params
    if fam == "annulus":
        verts, tops = _layered_annulus(*p, spec.level)
        return SimplicialComplex(2, verts, tops)
    if fam == "shell":
        verts, tops = _layered_shell(*p, spec.level)
        return SimplicialComplex(3, verts, tops)
    if fam == "disk":
        verts, tops = _base_disk()
    elif fam == "ellipse":
        verts, tops = _base_disk()
        verts = verts * np.array(p)
        tops = _orient_tops(verts, tops)
    elif fam == "ball":
        verts, tops = _base_ball()
    elif fam == "ellipsoid":
        verts, tops = _base_ball()
        verts = verts * np.array(p)
        tops = _orient_tops(verts, tops)
    elif fam == "box":
        verts, tops = _base_box(*p)
    else:  # pragma: no cover
        raise InvalidDomainError(fam)
    K = SimplicialComplex(spec.dim, verts, tops)
    for _ in range(spec.level):
        K = refine(K, spec)
    return K


# ---------------------------------------------------------------------------
# file I/O


def write_mesh(path, K: SimplicialComplex) -> None:
    """Write the complex in the plain-text format (see ``read_mesh``)."""
    lines = [f"smesh {K.dim} {K.n_simplices(0)} {K.n_simplices(K.dim)}"]
    for v in K.vertices:
        lines.append(" ".join(f"{x:.17g}" for x in v))
    for t in K.tops:
        lines.append(" ".join(str(int(i)) for i in t))
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")


def read_mesh(path) -> SimplicialComplex:
    """Read a mesh file: ``smesh <dim> <nv> <nt>``, then nv coordinate lines
    and nt 0-based top simplex lines (positive orientation required).

    Lower simplices and boundary flags are derived, never stored.
    """
    with open(path, "r", encoding="utf-8") as f:
        txt = f.read().split("\n")
    head = txt[0].split()
    if len(head) != 4 or head[0] != "smesh":
        raise MeshFormatError(f"bad header: {txt[0]!r}")
    try:
        dim, nv, nt = (int(x) for x in head[1:])
    except ValueError as exc:
        raise MeshFormatError(f"bad header: {txt[0]!r}") from exc
    if dim not in (2, 3):
        raise MeshFormatError(f"unsupported dimension {dim}")
    if len(txt) < 1 + nv + nt:
        raise MeshFormatError("file truncated")
    try:
        verts = np.array([[float(x) for x in txt[1 + i].split()] for i in range(nv)])
        tops = np.array([[int(x) for x in txt[1 + nv + i].split()] for i in range(nt)],
                        dtype=np.int64)
    except ValueError as exc:
        raise MeshFormatError(f"unparsable body: {exc}") from exc
    if verts.shape != (nv, dim) or tops.shape != (nt, dim + 1):
        raise MeshFormatError("vertex or simplex line has wrong arity")
    if tops.min() < 0 or tops.max() >= nv:
        raise MeshFormatError("vertex index out of range")
    return SimplicialComplex(dim, verts, tops)
