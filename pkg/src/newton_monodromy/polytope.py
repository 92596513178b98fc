"""Pointed cones, lattice polytopes, face lattices, and lattice charts.

Everything is exact.  A polytope is given by integer points in some
ambient Z^n; it carries a chart onto Z^r (r = its intrinsic dimension)
through which all lattice-point work happens, so lower-dimensional
faces are first-class objects and counts are always taken in the
correct lattice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import intlinalg as ila
from .errors import InternalConsistencyError

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a hard dependency
    _np = None


def cone_rays(constraints, dim: int) -> tuple[tuple[int, ...], ...]:
    """Extreme rays of the pointed cone {x in R^dim : a.x >= 0 for all a}.

    Double description with exact integer arithmetic.  Adjacency of rays
    is decided algebraically: two rays are adjacent iff their common
    tight constraints have rank dim - 2.  The constraint rows must span
    R^dim (i.e. the cone is pointed); all-zero rows are ignored.
    """
    rows = [tuple(int(x) for x in a) for a in constraints if any(a)]
    base_idx = ila.independent_rows(rows)
    if len(base_idx) < dim:
        raise ValueError("cone is not pointed (constraints do not span)")
    base = [rows[i] for i in base_idx]
    det_val, cols = ila.scaled_inverse_columns(base)
    sgn = 1 if det_val > 0 else -1
    rays = [ila.primitive(tuple(sgn * x for x in c)) for c in cols]

    processed = list(base)
    zero_sets = [
        frozenset(i for i, a in enumerate(processed) if ila.dot(a, r) == 0)
        for r in rays
    ]
    base_set = set(base_idx)
    for ridx, a in enumerate(rows):
        if ridx in base_set:
            continue
        vals = [ila.dot(a, r) for r in rays]
        aidx = len(processed)
        keep_rays = []
        keep_zero = []
        new_rays = []
        plus = [i for i, v in enumerate(vals) if v > 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        for i, v in enumerate(vals):
            if v >= 0:
                keep_rays.append(rays[i])
                keep_zero.append(zero_sets[i] | {aidx} if v == 0 else zero_sets[i])
        for p in plus:
            for m in minus:
                common = zero_sets[p] & zero_sets[m]
                if len(common) < dim - 2:
                    continue
                if ila.frac_rank([processed[i] for i in common]) != dim - 2:
                    continue
                w = tuple(
                    vals[p] * xm - vals[m] * xp
                    for xp, xm in zip(rays[p], rays[m])
                )
                new_rays.append(ila.primitive(w))
        processed.append(a)
        rays = keep_rays
        zero_sets = keep_zero
        seen = set(rays)
        for w in new_rays:
            if w in seen:
                continue
            seen.add(w)
            rays.append(w)
            zero_sets.append(
                frozenset(i for i, c in enumerate(processed) if ila.dot(c, w) == 0)
            )
    return tuple(sorted(set(rays)))


@dataclass(frozen=True)
class Chart:
    """Affine chart identifying a saturated affine sublattice of Z^n with Z^r.

    from_chart(y) = origin + sum_j y[j] * basis[j]; to_chart inverts it
    and insists the preimage is an actual lattice point of the sublattice.
    """

    origin: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    def from_chart(self, y) -> tuple[int, ...]:
        v = list(self.origin)
        for c, b in zip(y, self.basis, strict=True):
            if c:
                for i, x in enumerate(b):
                    v[i] += c * x
        return tuple(v)

    def to_chart(self, v) -> tuple[int, ...]:
        if not self.basis:
            if tuple(v) != self.origin:
                raise InternalConsistencyError(
                    f"point {v} is not the chart origin {self.origin}"
                )
            return ()
        target = ila.vec_sub(v, self.origin)
        cols = [[b[i] for b in self.basis] for i in range(len(self.origin))]
        sol = ila.solve_rational(cols, target)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise InternalConsistencyError(
                f"point {v} is not in the chart lattice"
            )
        return tuple(int(x) for x in sol)


class Polytope:
    """Lattice polytope conv(points) with exact face and lattice data.

    Construct through make_polytope so equal point sets share one
    instance (face lattices and Ehrhart data are cached per instance).
    """

    def __init__(self, points: tuple[tuple[int, ...], ...]):
        if not points:
            raise ValueError("a polytope needs at least one point")
        self.points = points
        self.ambient_dim = len(points[0])
        p0 = points[0]
        diffs = [ila.vec_sub(p, p0) for p in points[1:]]
        basis = ila.saturation_basis(diffs, self.ambient_dim)
        self.dim = len(basis)
        self.chart = Chart(p0, basis)
        self.cpoints = tuple(self.chart.to_chart(p) for p in points)
        self._key = points

    def __repr__(self):
        return f"Polytope(dim={self.dim}, points={list(self.points)})"

    @property
    def key(self):
        return self._key

    @cached_property
    def cfacets(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Facets of the chart image as pairs (u, b) with u.y + b >= 0.

        u is primitive; equality holds exactly on the facet.  Empty for
        a point.  The dilate k*P satisfies u.y + k*b >= 0.
        """
        if self.dim == 0:
            return ()
        d = self.dim
        constraints = [y + (1,) for y in self.cpoints]
        rays = cone_rays(constraints, d + 1)
        facets = []
        for r in rays:
            u, b = r[:-1], r[-1]
            if any(u):
                facets.append((u, b))
        if len(facets) < d + 1:
            raise InternalConsistencyError("too few facets for a full-dim polytope")
        return tuple(sorted(facets))

    @cached_property
    def vertex_ids(self) -> tuple[int, ...]:
        """Indices into self.points of the vertices of the hull."""
        if self.dim == 0:
            return (0,)
        out = []
        for i, y in enumerate(self.cpoints):
            tight = [u for (u, b) in self.cfacets if ila.dot(u, y) + b == 0]
            if ila.frac_rank(tight) == self.dim:
                out.append(i)
        return tuple(out)

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.points[i] for i in self.vertex_ids)

    @cached_property
    def facet_vertex_sets(self) -> tuple[frozenset[int], ...]:
        """Vertex-id set of each facet, aligned with cfacets."""
        vids = self.vertex_ids
        return tuple(
            frozenset(i for i in vids if ila.dot(u, self.cpoints[i]) + b == 0)
            for (u, b) in self.cfacets
        )

    @cached_property
    def face_lattice(self) -> dict[frozenset[int], int]:
        """All nonempty faces, as {vertex-id set: dimension}.

        Includes the polytope itself (top face) and every vertex.  Faces
        are intersections of facet vertex sets; two distinct faces have
        distinct vertex sets, so the representation is faithful.
        """
        if self.dim == 0:
            return {frozenset({0}): 0}
        vids = self.vertex_ids
        facet_sets = list(self.facet_vertex_sets)
        faces = {frozenset(vids)}
        frontier = set(facet_sets)
        while frontier:
            faces |= frontier
            nxt = set()
            for f in frontier:
                for g in facet_sets:
                    h = f & g
                    if h and h not in faces:
                        nxt.add(h)
            frontier = nxt
        out = {}
        for f in faces:
            pts = [self.cpoints[i] for i in sorted(f)]
            diffs = [ila.vec_sub(p, pts[0]) for p in pts[1:]]
            out[f] = ila.frac_rank(diffs) if diffs else 0
        return out

    def faces_of_dim(self, d: int) -> list[frozenset[int]]:
        out = [f for f, fd in self.face_lattice.items() if fd == d]
        out.sort(key=lambda f: tuple(sorted(f)))
        return out

    def face_points(self, face: frozenset[int]) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.points[i] for i in face))

    def face_polytope(self, face: frozenset[int]) -> "Polytope":
        return make_polytope(self.face_points(face))

    @cached_property
    def edge_steps(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
        """For each 1-face: (ambient endpoint, primitive ambient step, length).

        The edge's lattice points are endpoint + j*step for j = 0..length.
        """
        out = []
        for f in self.faces_of_dim(1):
            a, b = sorted(self.points[i] for i in f)
            diff = ila.vec_sub(b, a)
            g = ila.vec_gcd(diff)
            out.append((a, ila.primitive(diff), g))
        return tuple(out)

    def bounding_box(self, k: int) -> tuple[tuple[int, int], ...]:
        """Per-coordinate (lo, hi) of the k-th chart dilate."""
        box = []
        for j in range(self.dim):
            vals = [y[j] for y in self.cpoints]
            box.append((k * min(vals), k * max(vals)))
        return tuple(box)

    def lattice_scan(self, k: int, relint: bool):
        """Chart lattice points of the k-th dilate (interior only if relint).

        Returns ("np", int64 array of shape (N, dim)) when the chunked
        numpy box scan applies, else ("py", list of int tuples).  The
        numpy path is skipped when a dot product could overflow int64.
        """
        if self.dim == 0:
            return "py", [()]
        box = self.bounding_box(k)
        facets = self.cfacets
        total = 1
        for lo, hi in box:
            total *= hi - lo + 1
        if _np is not None and total > 512:
            pts = self._numpy_scan(k, box, facets, relint)
            if pts is not None:
                return "np", pts
        lo_off = 1 if relint else 0
        out = []
        ranges = [range(lo, hi + 1) for lo, hi in box]
        for y in itertools.product(*ranges):
            ok = True
            for u, b in facets:
                if ila.dot(u, y) + k * b < lo_off:
                    ok = False
                    break
            if ok:
                out.append(y)
        return "py", out

    def chart_lattice_points(self, k: int, relint: bool):
        """Like lattice_scan, but always a list of int tuples."""
        kind, data = self.lattice_scan(k, relint)
        if kind == "np":
            return [tuple(int(x) for x in row) for row in data]
        return data

    def _numpy_scan(self, k, box, facets, relint):
        # Guard: every dot product must stay far below 2^63.
        maxabs = max(max(abs(lo), abs(hi)) for lo, hi in box)
        worst = max(
            sum(abs(x) for x in u) * maxabs + abs(k * b) for u, b in facets
        )
        if worst >= 2 ** 62:
            return None
        first_lo, first_hi = box[0]
        rest = [_np.arange(lo, hi + 1, dtype=_np.int64) for lo, hi in box[1:]]
        lo_off = 1 if relint else 0
        pieces = []
        chunk = max(1, 2_000_000 // max(1, int(_np.prod([r.size for r in rest]))))
        a = first_lo
        while a <= first_hi:
            b_hi = min(a + chunk - 1, first_hi)
            axes = [_np.arange(a, b_hi + 1, dtype=_np.int64)] + rest
            grids = _np.meshgrid(*axes, indexing="ij")
            Y = _np.stack([g.reshape(-1) for g in grids], axis=1)
            mask = _np.ones(Y.shape[0], dtype=bool)
            for u, c in facets:
                vals = Y @ _np.asarray(u, dtype=_np.int64) + k * c
                mask &= vals >= lo_off
            if mask.any():
                pieces.append(Y[mask])
            a = b_hi + 1
        if not pieces:
            return _np.empty((0, self.dim), dtype=_np.int64)
        return _np.concatenate(pieces, axis=0)

    @cached_property
    def vertex_cone_unimodular(self) -> bool:
        """True when every vertex's tangent cone is generated by a lattice basis.

        Checked in the intrinsic lattice: at each vertex there must be
        exactly dim incident edges whose primitive directions have
        determinant +-1.
        """
        d = self.dim
        if d <= 1:
            return True
        edges = self.faces_of_dim(1)
        for vid in self.vertex_ids:
            dirs = []
            for f in edges:
                if vid in f:
                    other = next(i for i in f if i != vid)
                    dirs.append(
                        ila.primitive(
                            ila.vec_sub(self.cpoints[other], self.cpoints[vid])
                        )
                    )
            if len(dirs) != d or abs(ila.det(dirs)) != 1:
                return False
        return True

    @cached_property
    def primeness(self) -> str:
        """'prime', 'pseudo_prime', or 'neither'.

        prime: every vertex cone is unimodular (simple and smooth).
        pseudo_prime: every 1-face lies on exactly dim - 1 two-faces.
        Dimension <= 1 is always prime; every polygon is pseudo-prime.
        """
        d = self.dim
        if d <= 1 or self.vertex_cone_unimodular:
            return "prime"
        two_faces = self.faces_of_dim(2)
        for e in self.faces_of_dim(1):
            cnt = sum(1 for t in two_faces if e <= t)
            if cnt != d - 1:
                return "neither"
        return "pseudo_prime"


_POLYTOPES: dict[tuple, Polytope] = {}


def make_polytope(points) -> Polytope:
    """Interning constructor: one Polytope instance per distinct point set."""
    key = tuple(sorted({tuple(int(x) for x in p) for p in points}))
    poly = _POLYTOPES.get(key)
    if poly is None:
        poly = Polytope(key)
        _POLYTOPES[key] = poly
    return poly


def clear_polytope_cache():
    _POLYTOPES.clear()
