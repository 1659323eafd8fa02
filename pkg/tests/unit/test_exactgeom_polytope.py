"""
Tests for src/exactgeom/polytope.py
"""

from fractions import Fraction

import pytest

from src.exactgeom import (
    Fan,
    convex_hull,
    inner_normal_fan,
    minkowski_sum,
    minkowski_sum_all,
)
from src.exceptions import DimensionMismatchException, GeometryException

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


class TestConvexHull:
    """Test exact convex hulls"""

    def test_square_with_interior_points(self):
        p = convex_hull(SQUARE + [(Fraction(1, 2), Fraction(1, 3))])
        assert p.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
        assert len(p.facets) == 4
        assert p.equations == ()
        assert p.dim == 2
        assert p.is_consistent()

    def test_facet_offsets(self):
        """Facets read <normal, x> >= offset with primitive normals"""
        p = convex_hull([(0, 0), (2, 0), (0, 2), (2, 2)])
        facets = {(f.normal, f.offset) for f in p.facets}
        assert facets == {((1, 0), 0), ((0, 1), 0), ((-1, 0), -2), ((0, -1), -2)}

    def test_contains(self):
        p = convex_hull(SQUARE)
        assert p.contains((Fraction(1, 2), 1))
        assert not p.contains((2, 0))

    def test_lower_dimensional(self):
        """A segment in the plane carries one equation"""
        p = convex_hull([(0, 0), (1, 1), (Fraction(1, 2), Fraction(1, 2))])
        assert p.vertices == ((0, 0), (1, 1))
        assert len(p.equations) == 1
        assert p.dim == 1

    def test_single_point(self):
        p = convex_hull([(3, -1)])
        assert p.vertices == ((3, -1),)
        assert p.dim == 0

    def test_empty(self):
        with pytest.raises(GeometryException):
            convex_hull([])

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionMismatchException):
            convex_hull([(0, 0), (1, 0, 0)])


class TestMinkowskiSum:
    """Test Minkowski sums"""

    def test_two_segments_make_a_square(self):
        total = minkowski_sum(convex_hull([(0, 0), (1, 0)]), convex_hull([(0, 0), (0, 1)]))
        assert total.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_three_segments_make_a_hexagon(self):
        segments = [
            convex_hull([(0, 0), (1, 0)]),
            convex_hull([(0, 0), (0, 1)]),
            convex_hull([(0, 0), (1, 1)]),
        ]
        hexagon = minkowski_sum_all(segments)
        assert len(hexagon.vertices) == 6
        assert len(hexagon.facets) == 6
        assert hexagon.is_consistent()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchException):
            minkowski_sum(convex_hull([(0, 0)]), convex_hull([(0, 0, 0)]))

    def test_empty_family(self):
        with pytest.raises(GeometryException):
            minkowski_sum_all([])


class TestInnerNormalFan:
    """Test normal fans of polytopes"""

    def test_square(self, quadrant_fan):
        """The unit square's normal fan is the quadrant fan"""
        fan = inner_normal_fan(convex_hull(SQUARE))
        assert fan.complete is True
        assert fan.same_cones(quadrant_fan)

    def test_point(self):
        """A point has the whole space as its normal fan"""
        assert inner_normal_fan(convex_hull([(1, 2)])) == Fan.whole_space(2)

    def test_segment_has_lineality(self):
        """A horizontal segment in the plane has two half-plane cones"""
        fan = inner_normal_fan(convex_hull([(0, 0), (1, 0)]))
        assert not fan.is_pointed
        assert {c.halfspaces for c in fan.maximal_cones} == {((1, 0),), ((-1, 0),)}
