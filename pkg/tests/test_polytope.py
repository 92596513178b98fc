"""Exact polytope geometry: hulls, face lattices, charts, primeness."""

import pytest

from newton_monodromy.polytope import (
    Polytope,
    clear_polytope_cache,
    cone_rays,
    make_polytope,
)


def test_cone_rays_quadrant():
    rays = set(cone_rays([(1, 0), (0, 1)], 2))
    assert rays == {(1, 0), (0, 1)}


def test_cone_rays_halfplane_cut():
    # {x >= 0, y >= 0, x - y >= 0} is the cone between (1,0) and (1,1)
    rays = set(cone_rays([(1, 0), (0, 1), (1, -1)], 2))
    assert rays == {(1, 0), (1, 1)}


def test_cone_rays_rejects_unpointed():
    with pytest.raises(ValueError):
        cone_rays([(1, 0, 0), (0, 1, 0)], 3)


def test_cone_rays_octant_redundant_constraint():
    rays = set(cone_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], 3))
    assert rays == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_point_polytope():
    p = make_polytope([(3, 5)])
    assert p.dim == 0
    assert p.vertices == ((3, 5),)
    assert p.face_lattice == {frozenset({0}): 0}


def test_segment_chart_and_length():
    p = make_polytope([(0, 0), (2, 2)])
    assert p.dim == 1
    # the chart basis is a saturated lattice basis, so (1,1) is one step
    assert p.cpoints == ((0,), (2,))
    assert p.chart_lattice_points(1, relint=False) == [(0,), (1,), (2,)]
    assert p.chart_lattice_points(1, relint=True) == [(1,)]


def test_square_with_redundant_point():
    p = make_polytope([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    assert p.dim == 2
    assert set(p.vertices) == {(0, 0), (2, 0), (0, 2), (2, 2)}
    lat = p.face_lattice
    dims = sorted(lat.values())
    assert dims == [0, 0, 0, 0, 1, 1, 1, 1, 2]
    assert len(p.chart_lattice_points(1, relint=False)) == 9
    assert len(p.chart_lattice_points(1, relint=True)) == 1
    assert len(p.chart_lattice_points(2, relint=True)) == 9


def test_cube_face_lattice_counts():
    pts = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    p = make_polytope(pts)
    lat = p.face_lattice
    by_dim = {}
    for _, d in lat.items():
        by_dim[d] = by_dim.get(d, 0) + 1
    assert by_dim == {0: 8, 1: 12, 2: 6, 3: 1}


def test_face_polytope_inherits_ambient_points():
    p = make_polytope([(0, 0), (2, 0), (0, 3)])
    edges = p.faces_of_dim(1)
    assert len(edges) == 3
    hyp = [f for f in edges if p.face_points(f) == ((0, 3), (2, 0))]
    assert len(hyp) == 1
    q = p.face_polytope(hyp[0])
    assert q.dim == 1 and q.ambient_dim == 2


def test_edge_steps_lattice_lengths():
    p = make_polytope([(0, 0), (2, 0), (0, 3)])
    lengths = sorted(g for (_, _, g) in p.edge_steps)
    assert lengths == [1, 2, 3]
    for a, step, g in p.edge_steps:
        assert all(x % 1 == 0 for x in step)


def test_lattice_scan_paths_agree():
    """The numpy bulk scan and the python fallback count the same sets."""
    p = make_polytope([(0, 0, 0), (3, 0, 0), (0, 4, 0), (0, 0, 5)])
    kind, data = p.lattice_scan(2, relint=False)
    pts = [tuple(int(x) for x in row) for row in data] if kind == "np" else data
    assert len(pts) == len(p.chart_lattice_points(2, relint=False))
    inner = p.chart_lattice_points(1, relint=True)
    assert set(inner) == {(1, 1, 1), (1, 1, 2)}


@pytest.mark.parametrize(
    "points,expected",
    [
        ([(0, 0), (1, 0), (0, 1), (1, 1)], "prime"),
        ([(0, 0), (2, 0), (0, 3)], "pseudo_prime"),
        ([(4, 0, 0), (0, 6, 0), (0, 0, 12)], "pseudo_prime"),
        # (2,2) lies inside conv{0,(5,0),(0,5)}, so the hull is the
        # unimodular corner triangle, unlike the Newton boundary cone
        ([(0, 0), (5, 0), (2, 2), (0, 5)], "prime"),
        ([(0, 0), (5, 0), (2, 2)], "pseudo_prime"),
        ([(0, 0, 0), (3, 0, 0), (0, 3, 0), (0, 0, 3)], "prime"),
        ([(7,)], "prime"),
        ([(0, 0), (4, 2)], "prime"),
    ],
)
def test_primeness(points, expected):
    assert make_polytope(points).primeness == expected


def test_primeness_neither_in_dim_4():
    # the 4-dimensional cross-polytope has edges on four 2-faces, not three
    pts = []
    for i in range(4):
        for s in (1, -1):
            pts.append(tuple(s if j == i else 0 for j in range(4)))
    assert make_polytope(pts).primeness == "neither"


def test_interning_and_cache_clear():
    a = make_polytope([(0, 0), (1, 0), (0, 1)])
    b = make_polytope([(0, 1), (1, 0), (0, 0)])
    assert a is b
    clear_polytope_cache()
    c = make_polytope([(0, 0), (1, 0), (0, 1)])
    assert c is not a
    assert isinstance(c, Polytope)
