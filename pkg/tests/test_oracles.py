"""Independent oracles and the validation battery."""

from fractions import Fraction

import pytest

from newton_monodromy import oracles
from newton_monodromy.monodromy import jordan_blocks
from newton_monodromy.newton import SupportSet, newton_polyhedron
from newton_monodromy.oracles import (
    brieskorn_pham_exponents,
    brieskorn_pham_spectrum,
    kouchnirenko_cost,
    kouchnirenko_mu,
    validate,
)

F = Fraction

CHECK_NAMES = [
    "face-data",
    "hodge-tables-build",
    "boundary-and-row-sums",
    "conjugation-symmetry",
    "ehrhart-shift-identity",
    "pyramid-identity",
    "global-unipotent-identity",
    "fan-refinement",
    "jordan-blocks-consistent",
    "two-route-unipotent",
    "unit-class-normalization",
    "steenbrink-saito-symmetry",
    "block-counts-sane",
    "pseudo-prime-row-sums",
    "prime-face-closed-formula",
    "fastpath-top",
    "fastpath-unipotent",
    "quasi-homogeneous-semisimple",
    "kouchnirenko-mu",
    "brieskorn-pham-spectrum",
]


def _np(points):
    pts = tuple(sorted(tuple(p) for p in points))
    return newton_polyhedron(SupportSet(tuple("xyzw"[: len(pts[0])]), pts))


def test_kouchnirenko_values():
    assert kouchnirenko_mu([(2, 0), (0, 3)]) == 2
    assert kouchnirenko_mu([(3, 0), (0, 3)]) == 4
    assert kouchnirenko_mu([(5, 0), (2, 2), (0, 5)]) == 11
    assert kouchnirenko_mu([(4, 0), (2, 2), (0, 4)]) == 9
    assert kouchnirenko_mu([(4, 0, 0), (0, 4, 0), (0, 0, 4), (2, 2, 2)]) == 27
    assert kouchnirenko_mu([(3, 0, 0), (0, 4, 0), (0, 0, 5)]) == 24
    assert kouchnirenko_mu([(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)]) == 1


def test_kouchnirenko_rejects_bad_support():
    with pytest.raises(ValueError, match="empty"):
        kouchnirenko_mu([])
    with pytest.raises(ValueError, match="origin"):
        kouchnirenko_mu([(0, 0), (2, 0), (0, 3)])
    with pytest.raises(ValueError, match="convenient"):
        kouchnirenko_mu([(2, 0), (1, 1)])


def test_kouchnirenko_cost_scales_with_input():
    small = kouchnirenko_cost([(2, 0), (0, 3)], 2)
    big = kouchnirenko_cost([(4, 0, 0), (0, 4, 0), (0, 0, 4), (2, 2, 2)], 3)
    assert isinstance(small, int) and small > 0
    assert big > small


def test_brieskorn_pham_spectrum_small_cases():
    assert brieskorn_pham_spectrum((2, 3)) == {F(1, 6): 1, F(5, 6): 1}
    assert brieskorn_pham_spectrum((2, 2)) == {F(0): 1}
    assert brieskorn_pham_spectrum((3, 3)) == {F(0): 2, F(1, 3): 1, F(2, 3): 1}
    with pytest.raises(ValueError, match=">= 2"):
        brieskorn_pham_spectrum((1, 3))


def test_brieskorn_pham_spectrum_total_is_product():
    for a in range(2, 6):
        for b in range(2, 6):
            assert sum(brieskorn_pham_spectrum((a, b)).values()) == (a - 1) * (b - 1)


def test_brieskorn_pham_spectrum_matches_engine():
    assert brieskorn_pham_spectrum((2, 3)) == jordan_blocks(_np([(2, 0), (0, 3)])).multiplicities
    assert brieskorn_pham_spectrum((3, 3)) == jordan_blocks(_np([(3, 0), (0, 3)])).multiplicities


def test_brieskorn_pham_exponents():
    assert brieskorn_pham_exponents(_np([(2, 0), (0, 3)])) == [2, 3]
    assert brieskorn_pham_exponents(_np([(5, 0), (2, 2), (0, 5)])) is None
    assert brieskorn_pham_exponents(
        _np([(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)])
    ) == [2, 2, 2, 2]


def test_validate_cusp_all_green():
    report = validate(_np([(2, 0), (0, 3)]))
    assert report.ok
    assert [c.name for c in report.checks] == CHECK_NAMES
    assert all(c.status in ("pass", "skip") for c in report.checks)
    by_name = {c.name: c for c in report.checks}
    assert by_name["kouchnirenko-mu"].detail == "mu = 2"
    assert by_name["brieskorn-pham-spectrum"].status == "pass"
    assert by_name["pseudo-prime-row-sums"].status == "pass"
    assert "jordan-blocks-consistent: pass (mu = 2)" in report.summary()


def test_validate_two_edge_polygon():
    report = validate(_np([(5, 0), (2, 2), (0, 5)]))
    assert report.ok
    by_name = {c.name: c for c in report.checks}
    assert by_name["prime-face-closed-formula"].status == "pass"
    assert by_name["quasi-homogeneous-semisimple"].status == "skip"
    assert by_name["brieskorn-pham-spectrum"].status == "skip"


def test_validate_heavy_limit_skips_volume_oracle():
    report = validate(_np([(2, 0), (0, 3)]), heavy_limit=0)
    by_name = {c.name: c for c in report.checks}
    assert by_name["kouchnirenko-mu"].status == "skip"
    assert "over limit" in by_name["kouchnirenko-mu"].detail
    assert report.ok


def test_validate_catches_injected_corruption(monkeypatch):
    """A table corrupted behind the validator's back must be flagged.

    The injected entries keep every row sum intact, so the first check
    to notice is the conjugation symmetry."""
    real = oracles.hodge_table

    def corrupted(poly, char):
        table = dict(real(poly, char))
        if poly.dim == 2:
            table[(0, 0, F(1, 7))] = table.get((0, 0, F(1, 7)), 0) + 1
            table[(0, 1, F(1, 7))] = table.get((0, 1, F(1, 7)), 0) - 1
        return table

    monkeypatch.setattr(oracles, "hodge_table", corrupted)
    report = validate(_np([(2, 0), (0, 3)]))
    assert not report.ok
    by_name = {c.name: c for c in report.checks}
    assert by_name["boundary-and-row-sums"].status == "pass"
    assert by_name["conjugation-symmetry"].status == "fail"
    assert "conjugation" in by_name["conjugation-symmetry"].detail


def test_validation_report_summary_format():
    report = validate(_np([(2, 0), (0, 3)]))
    lines = report.summary().splitlines()
    assert len(lines) == len(CHECK_NAMES)
    for line, name in zip(lines, CHECK_NAMES):
        assert line.startswith(f"{name}: ")
