"""Normal fans and their simplicial refinements.

A cone is a frozenset of primitive generator tuples in the polytope's
chart lattice.  Within one fan this representation is faithful, and
face relations reduce to set inclusion of generator sets: a subset of a
cone's rays spans a face of it iff that subset is itself a cone of the
fan.  The zero cone is the empty frozenset.
"""

from __future__ import annotations

from . import intlinalg as ila


def cone_dim(cone) -> int:
    return ila.frac_rank(list(cone))


def is_simplicial(cone) -> bool:
    return len(cone) == cone_dim(cone)


def normal_fan(poly) -> set[frozenset]:
    """Every cone of the inner normal fan, including the zero cone.

    The cone of a face F collects the primitive normals of the facets
    containing F; each normal u attains its minimum over the polytope
    exactly on its facet, so min_face inverts the construction.
    """
    if poly.dim == 0:
        raise ValueError("normal fan needs a positive-dimensional polytope")
    normals = [ila.primitive(u) for (u, b) in poly.cfacets]
    fsets = poly.facet_vertex_sets
    cones = set()
    for face in poly.face_lattice:
        cones.add(
            frozenset(normals[i] for i, fs in enumerate(fsets) if face <= fs)
        )
    return cones


def min_face(poly, vector) -> frozenset[int]:
    """Vertex-id set of the face where vector.y is minimal over the chart."""
    vids = poly.vertex_ids
    vals = {i: ila.dot(vector, poly.cpoints[i]) for i in vids}
    mn = min(vals.values())
    return frozenset(i for i in vids if vals[i] == mn)


def simplicial_refinement(cones: set[frozenset]) -> set[frozenset]:
    """Stellar subdivisions until every cone is simplicial.

    Each round picks a non-simplicial cone of minimal dimension (ties
    broken by sorted generator tuple, so the result is deterministic)
    and subdivides at the primitive ray through the sum of its
    generators.  All proper faces of the picked cone are simplicial by
    minimality, which is what makes the purely combinatorial subdivision
    below correct.
    """
    cones = set(cones)
    while True:
        bad = [c for c in cones if not is_simplicial(c)]
        if not bad:
            return cones
        sigma0 = min(bad, key=lambda c: (cone_dim(c), sorted(c)))
        gens = sorted(sigma0)
        ray = ila.primitive(tuple(sum(col) for col in zip(*gens)))
        out = {c for c in cones if not sigma0 <= c}
        for c in cones:
            if sigma0 <= c:
                for t in cones:
                    if t <= c and not sigma0 <= t:
                        out.add(t | {ray})
        cones = out


def euler_count_ok(cones, dim: int) -> bool:
    """Completeness sanity check: the alternating cone count of a
    complete fan in R^dim matches the Euler characteristic of a
    (dim-1)-sphere."""
    total = 0
    for c in cones:
        if c:
            total += (-1) ** (cone_dim(c) - 1)
    return total == 1 + (-1) ** (dim - 1)


def subset_closed(cones) -> bool:
    """For a simplicial fan: every generator subset of a cone is a cone."""
    cones = set(cones)
    for c in cones:
        gens = sorted(c)
        for i in range(len(gens)):
            sub = frozenset(gens[:i] + gens[i + 1 :])
            if sub not in cones:
                return False
    return True
