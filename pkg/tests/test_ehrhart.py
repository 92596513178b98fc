"""Equivariant Ehrhart data: characters, interior counts, numerators."""

from fractions import Fraction

import pytest

from newton_monodromy.ehrhart import (
    Character,
    conj,
    normalized_volume,
    p_alpha,
    phi_tilde,
    relint_counts,
    skeleton_counts,
)
from newton_monodromy.errors import InternalConsistencyError
from newton_monodromy.polytope import make_polytope

F = Fraction


def test_character_normalization():
    assert Character(6, (4, 2)) == Character(3, (2, 1))
    assert Character(6, (9, 2)) == Character(6, (3, 2))
    assert Character(1, (5, 7)) == Character.trivial(2)
    assert Character(4, (2, 2)) == Character(2, (1, 1))


def test_character_is_idempotent_under_renormalization():
    c = Character(6, (4, 2))
    assert Character(c.modulus, c.coeffs) == c


def test_character_values():
    c = Character(6, (3, 2))
    assert c.value((1, 0)) == F(1, 2)
    assert c.value((0, 1)) == F(1, 3)
    assert c.value((1, 1)) == F(5, 6)
    assert c.value((2, 0)) == F(0)
    assert c.value((2, 3)) == F(0)
    assert Character.trivial(3).value((7, 8, 9)) == F(0)
    assert c.is_trivial is False
    assert Character.trivial(2).is_trivial is True


def test_character_value_periodicity():
    c = Character(6, (3, 2))
    for v in [(0, 0), (1, 2), (5, 1)]:
        shifted = (v[0] + 6, v[1])
        assert c.value(v) == c.value(shifted)


def test_conj():
    assert conj(F(0)) == F(0)
    assert conj(F(1, 6)) == F(5, 6)
    assert conj(F(5, 6)) == F(1, 6)
    assert conj(F(1, 2)) == F(1, 2)
    assert conj(conj(F(3, 7))) == F(3, 7)


def test_relint_counts_segment():
    seg = make_polytope([(0, 0), (2, 0)])
    c = Character(2, (1, 0))
    assert relint_counts(seg, c, 0) == {}
    assert relint_counts(seg, c, 1) == {F(1, 2): 1}
    assert relint_counts(seg, c, 2) == {F(0): 1, F(1, 2): 2}


def test_relint_counts_vertex():
    v = make_polytope([(1, 1)])
    c = Character(6, (3, 2))
    # a point is its own relative interior at every positive dilate
    assert relint_counts(v, c, 1) == {F(5, 6): 1}
    assert relint_counts(v, c, 2) == {F(4, 6): 1}
    assert relint_counts(v, c, 0) == {}


def test_p_alpha_unit_segment():
    seg = make_polytope([(0, 0), (1, 0)])
    assert p_alpha(seg, Character.trivial(2)) == {F(0): (0, 0, 1)}


def test_p_alpha_cusp_triangle():
    """Numerator tuples of the d=6 cone over the cusp edge."""
    cusp = make_polytope([(0, 0), (2, 0), (0, 3)])
    got = p_alpha(cusp, Character(6, (3, 2)))
    assert got[F(0)] == (0, 0, 0, 1)
    assert got[F(1, 6)] == (0, 0, 1, 0)
    assert got[F(5, 6)] == (0, 1, 0, 0)
    assert got[F(1, 2)] == (0, 0, 1, 0)
    assert got[F(1, 3)] == (0, 0, 1, 0)
    assert got[F(2, 3)] == (0, 0, 1, 0)
    assert sum(sum(t) for t in got.values()) == 6


def test_p_alpha_requires_vertex_trivial_character():
    seg = make_polytope([(0, 0), (1, 0)])
    with pytest.raises(InternalConsistencyError):
        p_alpha(seg, Character(2, (1, 0)))


def test_phi_tilde_cusp():
    cusp = make_polytope([(0, 0), (2, 0), (0, 3)])
    got = phi_tilde(cusp, Character(6, (3, 2)))
    assert got == {F(1, 6): 1, F(1, 3): 1, F(1, 2): 1, F(2, 3): 1, F(5, 6): 1}


def test_skeleton_counts_cusp():
    cusp = make_polytope([(0, 0), (2, 0), (0, 3)])
    got = skeleton_counts(cusp, Character(6, (3, 2)))
    assert got == {F(0): 3, F(1, 3): 1, F(1, 2): 1, F(2, 3): 1}


def test_normalized_volume():
    assert normalized_volume(make_polytope([(0, 0), (2, 0), (0, 3)])) == 6
    assert normalized_volume(make_polytope([(0, 0), (1, 0), (0, 1)])) == 1
    assert normalized_volume(make_polytope([(0, 0), (2, 0), (0, 2), (2, 2)])) == 8
    assert normalized_volume(make_polytope([(0, 0), (3, 0)])) == 3
    assert normalized_volume(make_polytope([(5, 7)])) == 1


def test_ehrhart_shift_identity_on_cusp_edge():
    """The cone over a face repeats the face's trivial-bucket numerator
    one degree higher."""
    edge = make_polytope([(2, 0), (0, 3)])
    delta = make_polytope([(0, 0), (2, 0), (0, 3)])
    top = p_alpha(edge, Character.trivial(2))[F(0)]
    cone = p_alpha(delta, Character(6, (3, 2)))[F(0)]
    assert cone[1:] == top[: len(cone) - 1]
    assert cone[0] == 0
