"""Brute-force hull machinery: facets, volumes, lattice enumeration."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from sumsethull.geometry import PointSet, conv_contains, vertex_set
from sumsethull.hull import (
    cross_normal,
    hull_facets,
    hull_volume,
    int_det,
    lattice_points,
    simplex_volume,
)

from conftest import point_sets, proper_point_sets


def fraction_det(mat):
    """Independent determinant oracle: Gaussian elimination over Fractions."""
    n = len(mat)
    m = [[Fraction(v) for v in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    assert det.denominator == 1
    return det.numerator


class TestIntDet:
    def test_identity(self):
        assert int_det([[1, 0], [0, 1]]) == 1

    def test_singular(self):
        assert int_det([[1, 2], [2, 4]]) == 0

    @given(
        st.integers(1, 4).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            )
        )
    )
    @settings(max_examples=80)
    def test_matches_fraction_elimination(self, mat):
        assert int_det([row[:] for row in mat]) == fraction_det(mat)


class TestCrossNormal:
    def test_orthogonal_to_spanned_differences(self):
        pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0)]
        n = cross_normal(pts)
        assert n is not None
        for p in pts[1:]:
            assert sum(a * (b - c) for a, b, c in zip(n, p, pts[0])) == 0

    def test_degenerate_returns_none(self):
        assert cross_normal([(0, 0), (0, 0)]) is None


class TestHullFacets:
    def test_triangle_has_three_edges(self):
        facets = hull_facets([(0, 0), (2, 0), (0, 2)])
        assert len(facets) == 3

    def test_square_has_four_edges_despite_diagonals(self):
        facets = hull_facets([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert len(facets) == 4

    def test_interior_point_on_no_facet(self):
        facets = hull_facets([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
        assert len(facets) == 4
        for f in facets:
            assert 4 not in f.support

    @given(proper_point_sets(coord=3))
    @settings(max_examples=30, deadline=None)
    def test_all_points_on_nonpositive_side(self, P):
        for f in hull_facets(list(P.points)):
            assert gcd(*[abs(v) for v in f.normal]) in (0, 1) or len(f.normal) == 1
            for p in P.points:
                assert sum(a * b for a, b in zip(f.normal, p)) <= f.offset


class TestVolumes:
    def test_unit_square(self):
        assert hull_volume([(0, 0), (1, 0), (0, 1), (1, 1)]) == 1

    def test_side_two_square_with_center(self):
        assert hull_volume([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)]) == 4

    def test_standard_simplex_3d(self):
        pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
        assert simplex_volume(pts) == Fraction(1, 6)
        assert hull_volume(pts) == Fraction(1, 6)

    def test_segment_length(self):
        assert hull_volume([(2,), (7,), (4,)]) == 5

    @given(proper_point_sets(dim=2, coord=4))
    @settings(max_examples=40, deadline=None)
    def test_picks_theorem_agreement(self, P):
        """Independent 2-d oracle: area = interior + boundary/2 - 1."""
        area = hull_volume(list(P.points))
        grid = lattice_points(P)
        V = vertex_set(P)
        boundary = 0
        facets = hull_facets(list(P.points))
        for q in grid:
            on_edge = any(
                sum(a * b for a, b in zip(f.normal, q)) == f.offset for f in facets
            )
            boundary += on_edge
        interior = len(grid) - boundary
        assert area == interior + Fraction(boundary, 2) - 1
        assert len(V) <= boundary


class TestLatticePoints:
    def test_side_two_square(self):
        P = PointSet.from_points([(0, 0), (2, 0), (0, 2), (2, 2)])
        assert len(lattice_points(P)) == 9

    def test_triangle_count(self):
        P = PointSet.from_points([(0, 0), (3, 0), (0, 3)])
        assert len(lattice_points(P)) == 10

    def test_segment(self):
        P = PointSet.from_points([(-2,), (2,)])
        assert lattice_points(P) == [(-2,), (-1,), (0,), (1,), (2,)]

    def test_improper_rejected(self):
        with pytest.raises(ValueError):
            lattice_points(PointSet.from_points([(0, 0), (1, 1)]))

    @given(proper_point_sets(coord=3))
    @settings(max_examples=25, deadline=None)
    def test_matches_exact_membership(self, P):
        """Facet sign filtering agrees with the rational feasibility test."""
        grid = set(lattice_points(P))
        lo = [min(p[c] for p in P.points) for c in range(P.dim)]
        hi = [max(p[c] for p in P.points) for c in range(P.dim)]

        def cells(prefix):
            if len(prefix) == P.dim:
                yield tuple(prefix)
                return
            c = len(prefix)
            for v in range(lo[c], hi[c] + 1):
                yield from cells(prefix + [v])

        for q in cells([]):
            assert (q in grid) == conv_contains(P, q)

    @given(point_sets(min_size=2, max_size=6, coord=3))
    @settings(max_examples=30, deadline=None)
    def test_input_points_always_enumerated(self, P):
        from sumsethull.geometry import affine_rank

        if affine_rank(P.points) != P.dim:
            return
        grid = lattice_points(P)
        assert set(P.points) <= set(grid)
        assert grid == sorted(grid)
