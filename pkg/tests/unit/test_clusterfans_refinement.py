"""
Tests for src/clusterfans/refinement.py
"""

import pytest

from src.clusterfans import (
    SplitEntry,
    SplitReport,
    cluster_ray_count_ok,
    cluster_variable_count,
    refine_by,
    refine_gr36,
    split_report,
)
from src.exactgeom import Cone, Fan, common_refinement
from src.exceptions import RefinementException, WebDiagramException

A, B, C, D, E, F, G, H, I = ((i,) for i in range(1, 10))


@pytest.fixture
def diagonal_refinement(quadrant_fan) -> Fan:
    diagonal = Fan(
        ambient_dim=2,
        maximal_cones=(
            Cone.from_inequalities([(-1, 1)], 2),
            Cone.from_inequalities([(1, -1)], 2),
        ),
        complete=True,
    )
    return common_refinement(quadrant_fan, diagonal)


class TestSplitEntry:
    """Test the chain criterion on synthetic ray sets"""

    def test_nine_ray_chain(self):
        entry = SplitEntry(
            parent=(A, B, C, D, E, F, G, H, I),
            children=(
                (A, B, C, D, E, F),
                (A, B, C, E, F, G),
                (A, B, C, F, G, H),
                (A, B, C, G, H, I),
            ),
            dim=6,
        )
        assert entry.expected_children == 4
        assert entry.core == (A, B, C)
        assert entry.is_chain()

    def test_bipyramid_split(self):
        """Five rays in dimension four split into two simplices over a triangle"""
        entry = SplitEntry(
            parent=(A, B, C, D, E),
            children=((A, B, C, D), (A, B, C, E)),
            dim=4,
        )
        assert entry.expected_children == 2
        assert entry.is_chain()

    def test_not_a_path(self):
        """Three children pairwise sharing a facet form a triangle, not a chain"""
        entry = SplitEntry(
            parent=(A, B, C, D, E),
            children=((A, B, C), (A, B, D), (A, B, E)),
            dim=3,
        )
        assert not entry.is_chain()

    def test_single_child(self):
        assert SplitEntry(parent=(A, B), children=((A, B),), dim=2).is_chain()
        assert not SplitEntry(parent=(A, B, C), children=((A, B),), dim=2).is_chain()


class TestSplitReport:
    """Test assigning refined cones to coarse cones"""

    def test_identity(self, quadrant_fan):
        report = split_report(quadrant_fan, quadrant_fan)
        assert report.child_counts() == {2: [1, 1, 1, 1]}
        assert report.split_pattern() == {2: 1}
        assert report.counts_ok
        assert report.chains_ok

    def test_diagonal(self, quadrant_fan, diagonal_refinement):
        """The first and third quadrants split in two around the diagonal"""
        report = split_report(quadrant_fan, diagonal_refinement)
        assert report.child_counts() == {2: [1, 1, 2, 2]}
        assert report.split_pattern() == {}
        assert not report.counts_ok
        assert report.chains_ok
        split = [e for e in report.entries if len(e.children) == 2]
        assert {e.core for e in split} == {((1, 1),), ((-1, -1),)}

    def test_not_a_refinement(self, quadrant_fan, diagonal_refinement):
        with pytest.raises(RefinementException):
            split_report(diagonal_refinement, quadrant_fan)

    def test_dimension_mismatch(self, quadrant_fan):
        with pytest.raises(RefinementException):
            split_report(quadrant_fan, Fan.whole_space(3))

    def test_report_properties(self):
        report = SplitReport(
            entries=(
                SplitEntry(parent=(A, B, C, D, E), children=((A, B, C, D), (A, B, C, E)), dim=4),
                SplitEntry(parent=(A, B, C, D), children=((A, B, C, D),), dim=4),
            )
        )
        assert report.child_counts() == {4: [1], 5: [2]}
        assert report.split_pattern() == {4: 1, 5: 2}
        assert report.counts_ok


class TestClusterCounts:
    @pytest.mark.parametrize(
        "k,n,count",
        [
            (2, 5, 5),
            (2, 6, 9),
            (4, 6, 9),
            (3, 6, 16),
            (3, 7, 42),
            (4, 7, 42),
            (3, 8, 128),
            (5, 8, 128),
            (1, 5, 0),
            (4, 5, 0),
        ],
    )
    def test_finite_type(self, k, n, count):
        assert cluster_variable_count(k, n) == count

    @pytest.mark.parametrize("k,n", [(3, 9), (4, 8)])
    def test_infinite_type(self, k, n):
        with pytest.raises(WebDiagramException):
            cluster_variable_count(k, n)

    def test_f_2_5_rays(self, fan_2_5):
        assert cluster_ray_count_ok(fan_2_5, 2, 5)


class TestRefinement:
    def test_no_variables_keeps_base(self, fan_2_5):
        assert refine_by(fan_2_5, []) is fan_2_5

    @pytest.mark.slow
    def test_refine_gr36(self, fan_3_6):
        """The type D4 fan: two extra cones, 16 rays, bipyramids split in two"""
        refined = refine_gr36(fan_3_6)
        assert refined.f_vector() == (16, 66, 100, 50)
        assert refined.facet_census() == {4: 50}
        assert cluster_ray_count_ok(refined, 3, 6)
        report = split_report(fan_3_6, refined)
        assert report.split_pattern() == {4: 1, 5: 2}
        assert report.counts_ok
        assert report.chains_ok
