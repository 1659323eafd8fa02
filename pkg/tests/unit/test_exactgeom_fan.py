"""
Tests for src/exactgeom/fan.py
"""

import pytest

from src.exactgeom import Cone, Fan, convex_hull, euler_characteristic_ok, inner_normal_fan
from src.exceptions import FanStructureException, NonPointedFanException

OCTAHEDRON = [
    (1, 0, 0),
    (-1, 0, 0),
    (0, 1, 0),
    (0, -1, 0),
    (0, 0, 1),
    (0, 0, -1),
]
CUBE = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]


class TestFanStatistics:
    """Test face enumeration and counts"""

    def test_quadrant_fan(self, quadrant_fan):
        assert quadrant_fan.rays == ((-1, 0), (0, -1), (0, 1), (1, 0))
        assert quadrant_fan.f_vector() == (4, 4)
        assert quadrant_fan.facet_census() == {2: 4}
        assert quadrant_fan.nonsimplicial_cones() == []

    def test_cube_normal_fan(self):
        """The normal fan of a cube is the coordinate octant fan"""
        fan = inner_normal_fan(convex_hull(CUBE))
        assert fan.f_vector() == (6, 12, 8)
        assert fan.facet_census() == {3: 8}

    def test_octahedron_normal_fan(self):
        """The normal fan of an octahedron has six four-ray cones"""
        fan = inner_normal_fan(convex_hull(OCTAHEDRON))
        assert fan.f_vector() == (8, 12, 6)
        assert fan.facet_census() == {4: 6}
        assert len(fan.nonsimplicial_cones()) == 6
        assert all(len(rs) == 4 for rs in fan.nonsimplicial_cones())

    def test_duplicate_cones_collapse(self):
        cone = Cone.from_inequalities([(1, 0), (0, 1)], 2)
        fan = Fan(ambient_dim=2, maximal_cones=(cone, cone))
        assert len(fan.maximal_cones) == 1

    def test_order_independent(self, quadrant_fan):
        shuffled = Fan(
            ambient_dim=2,
            maximal_cones=tuple(reversed(quadrant_fan.maximal_cones)),
            complete=True,
        )
        assert shuffled == quadrant_fan
        assert shuffled.same_cones(quadrant_fan)

    def test_non_pointed_fan(self):
        with pytest.raises(NonPointedFanException):
            Fan.whole_space(2).f_vector()

    def test_cone_containing(self, quadrant_fan):
        cone = quadrant_fan.cone_containing((-3, 2))
        assert cone is not None
        assert cone.halfspaces == ((-1, 0), (0, 1))


class TestCompleteness:
    """Test the completeness certificate"""

    def test_quadrants_complete(self, quadrant_fan):
        assert quadrant_fan.verify_complete(samples=50, seed=3)

    def test_missing_cone(self, quadrant_fan):
        partial = Fan(ambient_dim=2, maximal_cones=quadrant_fan.maximal_cones[:3])
        with pytest.raises(FanStructureException) as exc_info:
            partial.verify_complete(samples=0)

        assert "not shared by exactly two" in str(exc_info.value)

    def test_overlapping_cones(self, quadrant_fan):
        """An extra cone overlapping two quadrants breaks the facet pairing"""
        extra = Cone.from_inequalities([(0, 1)], 2)
        bad = Fan(
            ambient_dim=2,
            maximal_cones=quadrant_fan.maximal_cones + (extra,),
        )
        with pytest.raises(FanStructureException):
            bad.verify_complete(samples=20)

    def test_trivial_fan(self):
        assert Fan.whole_space(0).verify_complete()


class TestSerialization:
    """Test the document round trip used by fan files"""

    def test_document(self, quadrant_fan):
        doc = quadrant_fan.to_document()
        assert doc.ambient_dim == 2
        assert doc.rays == [[-1, 0], [0, -1], [0, 1], [1, 0]]
        assert doc.cones_by_dim[1] == [[0], [1], [2], [3]]
        assert len(doc.cones_by_dim[2]) == 4

    def test_from_document(self, quadrant_fan):
        fan = Fan.from_document(quadrant_fan.to_document())
        assert fan.same_cones(quadrant_fan)
        assert fan.complete is True

    def test_from_incomplete_document(self, quadrant_fan):
        doc = quadrant_fan.to_document()
        doc.cones_by_dim[2] = doc.cones_by_dim[2][:2]
        with pytest.raises(FanStructureException):
            Fan.from_document(doc)
        assert Fan.from_document(doc, certify=False).complete is False

    def test_trivial_document(self):
        doc = Fan.whole_space(0).to_document()
        assert doc.ambient_dim == 0
        assert Fan.from_document(doc).is_trivial


class TestEulerCharacteristic:
    @pytest.mark.parametrize(
        "f_vector,dim,ok",
        [
            ((4, 4), 2, True),
            ((8, 12, 6), 3, True),
            ((2,), 1, True),
            ((8, 12, 7), 3, False),
        ],
    )
    def test_alternating_sum(self, f_vector, dim, ok):
        assert euler_characteristic_ok(f_vector, dim) is ok
