"""Newton polyhedra: compact faces, facets, characters, twists."""

from fractions import Fraction

import pytest

from newton_monodromy.ehrhart import Character
from newton_monodromy.errors import InputError, NotConvenientError
from newton_monodromy.newton import SupportSet, newton_polyhedron

F = Fraction


def _np(points, variables=None):
    pts = tuple(tuple(p) for p in points)
    if variables is None:
        variables = tuple("xyzw"[: len(pts[0])])
    return newton_polyhedron(SupportSet(variables, pts))


def test_cusp_faces():
    np_ = _np([(2, 0), (0, 3)])
    assert np_.n == 2
    assert [f.dim for f in np_.faces] == [0, 0, 1]
    assert [f.points for f in np_.faces] == [
        (((0, 3)),),
        (((2, 0)),),
        ((0, 3), (2, 0)),
    ]
    v3, v2, edge = np_.faces
    assert (v3.distance, v3.char) == (3, Character(3, (0, 1)))
    assert (v2.distance, v2.char) == (2, Character(2, (1, 0)))
    assert (edge.distance, edge.char) == (6, Character(6, (3, 2)))
    assert [f.twist for f in np_.faces] == [0, 0, 0]
    assert [f.interior_touching for f in np_.faces] == [False, False, True]
    assert v2.axes == frozenset({0})
    assert edge.axes == frozenset({0, 1})
    assert [f.index for f in np_.faces] == [0, 1, 2]


def test_cusp_facets():
    np_ = _np([(2, 0), (0, 3)])
    assert [f.normal for f in np_.facets] == [(0, 1), (1, 0), (3, 2)]
    assert [f.offset for f in np_.facets] == [0, 0, 6]
    assert [f.compact for f in np_.facets] == [False, False, True]
    # the compact facet carries both support points
    assert np_.facets[2].tight == frozenset({0, 1})


def test_face_character_is_trivial_on_the_face():
    np_ = _np([(5, 0), (2, 2), (0, 5)])
    for f in np_.faces:
        for p in f.points:
            assert f.char.value(p) == F(0)
        assert f.char.modulus == f.distance


def test_two_edge_boundary():
    np_ = _np([(5, 0), (2, 2), (0, 5)])
    assert [f.dim for f in np_.faces] == [0, 0, 0, 1, 1]
    inner = np_.faces[1]
    assert inner.points == ((2, 2),)
    assert inner.distance == 2
    assert inner.twist == 1
    assert inner.interior_touching is True
    lo, hi = np_.faces[3], np_.faces[4]
    assert lo.points == ((0, 5), (2, 2))
    assert (lo.distance, lo.char) == (10, Character(10, (3, 2)))
    assert hi.points == ((2, 2), (5, 0))
    assert (hi.distance, hi.char) == (10, Character(10, (2, 3)))
    assert lo.twist == hi.twist == 0


def test_quasi_homogeneous_flag():
    assert _np([(2, 0), (0, 3)]).is_quasi_homogeneous
    assert _np([(3, 0), (0, 3)]).is_quasi_homogeneous
    assert _np([(4, 0), (2, 2), (0, 4)]).is_quasi_homogeneous
    assert not _np([(5, 0), (2, 2), (0, 5)]).is_quasi_homogeneous


def test_brieskorn_pham_surface_faces():
    np_ = _np([(3, 0, 0), (0, 4, 0), (0, 0, 5)])
    assert len(np_.faces) == 7
    (top,) = np_.faces_of_dim(2)
    assert (top.distance, top.char) == (60, Character(60, (20, 15, 12)))
    assert top.twist == 0 and top.interior_touching
    for e in np_.faces_of_dim(1):
        assert e.twist == 0 and not e.interior_touching
        assert len(e.axes) == 2


def test_origin_in_support_rejected():
    with pytest.raises(InputError, match="origin is in the support"):
        _np([(0, 0), (2, 0), (0, 3)])


def test_not_convenient():
    with pytest.raises(
        NotConvenientError,
        match=r"support is not convenient: no monomial on the y axis",
    ):
        _np([(2, 0), (1, 1)])
    # a mixed monomial does not cover either axis
    with pytest.raises(NotConvenientError) as ei:
        _np([(0, 3), (1, 1)])
    assert ei.value.axis_name == "x"


def test_not_singular_at_origin_rejected():
    with pytest.raises(InputError, match="lone monomial y"):
        _np([(2, 0), (0, 1)])
    with pytest.raises(InputError, match="lone monomial x"):
        _np([(1, 0), (0, 4), (2, 2)])


def test_malformed_support_rejected():
    with pytest.raises(InputError, match="negative exponent"):
        SupportSet(("x", "y"), ((2, -1), (0, 3)))
    with pytest.raises(InputError, match="arity"):
        SupportSet(("x", "y"), ((2, 0), (0, 3, 1)))
    with pytest.raises(InputError, match="at least two variables"):
        SupportSet(("x",), ((2,),))
    with pytest.raises(InputError, match="empty support"):
        SupportSet(("x", "y"), ())
    with pytest.raises(InputError, match="duplicate support point"):
        SupportSet(("x", "y"), ((2, 0), (2, 0)))


def test_face_order_is_by_dim_then_points():
    np_ = _np([(4, 0), (2, 2), (0, 4)])
    keyed = [(f.dim, f.points) for f in np_.faces]
    assert keyed == sorted(keyed)
