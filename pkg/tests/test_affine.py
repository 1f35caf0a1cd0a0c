"""Barycenter, centroid, and diameter basics."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from barypoly.affine import (
    AffinePoint,
    GeometryError,
    PointFamily,
    WeightVector,
    barycenter,
    centroid,
    diameter,
    distance,
)

TRIANGLE = PointFamily.from_coords([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])


def test_midpoint():
    fam = PointFamily.from_coords([(0.0,), (1.0,)])
    assert barycenter(fam, (1.0, 1.0)).coords == (0.5,)


def test_triangle_centroid_by_symmetry():
    assert barycenter(TRIANGLE, (1.0, 1.0, 1.0)).coords == pytest.approx((1 / 3, 1 / 3))


def test_weighted_barycenter_exact_rational():
    # exact oracle: weights (1/2, 3/8, 1/3) normalise by 29/24
    ws = (Fraction(1, 2), Fraction(3, 8), Fraction(1, 3))
    total = sum(ws)
    expect_x = float(ws[1] / total)  # only the second point has x = 1
    expect_y = float(ws[2] / total)  # only the third point has y = 1
    assert (expect_x, expect_y) == (float(Fraction(9, 29)), float(Fraction(8, 29)))
    got = barycenter(TRIANGLE, (0.5, 0.375, 1 / 3))
    assert got.coords == pytest.approx((9 / 29, 8 / 29), abs=1e-15)


def test_centroid_examples():
    assert centroid(PointFamily.from_coords([(0.0,), (1.0,)])).coords == (0.5,)
    square = PointFamily.from_coords([(0, 0), (2, 0), (0, 2), (2, 2)])
    assert centroid(square).coords == pytest.approx((1.0, 1.0))
    assert centroid(TRIANGLE).coords == pytest.approx((1 / 3, 1 / 3))


def test_diameter_examples():
    assert diameter(PointFamily.from_coords([(0.0,), (1.0,)])) == 1.0
    assert diameter(PointFamily.from_coords([(0, 0), (3, 4)])) == 5.0
    degenerate = PointFamily.from_coords([(1, 1), (1, 1)], require_distinct=False)
    assert diameter(degenerate) == 0.0


def test_point_validation():
    with pytest.raises(GeometryError):
        AffinePoint(())
    with pytest.raises(GeometryError):
        AffinePoint((1.0, math.nan))
    with pytest.raises(GeometryError):
        AffinePoint((math.inf,))


def test_family_validation():
    with pytest.raises(GeometryError):
        PointFamily.from_coords([(0.0, 0.0)])
    with pytest.raises(GeometryError):
        PointFamily.from_coords([(0.0, 0.0), (1.0,)])
    with pytest.raises(GeometryError):
        PointFamily.from_coords([(0.0, 0.0), (0.0, 0.0)])
    # just over the distinctness tolerance is fine
    PointFamily.from_coords([(0.0, 0.0), (1e-11, 0.0)])


def test_weight_validation():
    with pytest.raises(GeometryError):
        WeightVector((1.0, 0.0))
    with pytest.raises(GeometryError):
        WeightVector((1.0, -2.0))
    with pytest.raises(GeometryError):
        barycenter(TRIANGLE, (1.0, 1.0))


def test_distance_dimension_mismatch():
    with pytest.raises(GeometryError):
        distance(AffinePoint((0.0,)), AffinePoint((0.0, 0.0)))


coords_st = st.floats(-10.0, 10.0, allow_nan=False)
weights_st = st.floats(0.01, 100.0, allow_nan=False)


def _family(rows):
    return PointFamily.from_coords(rows, require_distinct=False)


@given(
    st.lists(st.tuples(coords_st, coords_st), min_size=2, max_size=6),
    st.data(),
    st.floats(1e-3, 1e3),
)
def test_barycenter_scale_invariance(rows, data, scale):
    fam = _family(rows)
    ws = data.draw(st.lists(weights_st, min_size=fam.size, max_size=fam.size))
    a = barycenter(fam, ws)
    b = barycenter(fam, [w * scale for w in ws])
    for x, y in zip(a.coords, b.coords):
        assert abs(x - y) <= 1e-12


@given(
    st.lists(st.tuples(coords_st, coords_st, coords_st), min_size=2, max_size=6),
    st.data(),
)
def test_barycenter_in_convex_hull(rows, data):
    fam = _family(rows)
    ws = data.draw(st.lists(weights_st, min_size=fam.size, max_size=fam.size))
    center = barycenter(fam, ws)
    for j, c in enumerate(center.coords):
        column = [pt.coords[j] for pt in fam.points]
        assert min(column) - 1e-12 <= c <= max(column) + 1e-12


@given(st.lists(st.tuples(coords_st, coords_st), min_size=2, max_size=6))
def test_centroid_is_uniform_barycenter(rows):
    fam = _family(rows)
    assert centroid(fam).coords == barycenter(fam, (1.0,) * fam.size).coords
