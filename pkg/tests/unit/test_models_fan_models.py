"""
Tests for src/models/fan_models.py
"""

import pytest
from pydantic import ValidationError

from src.models.fan_models import (
    CheckItem,
    CheckReport,
    CoordinateMap,
    FanDocument,
    FanSummary,
    GoldenTable,
)


class TestFanDocument:
    """Test the on-disk fan model"""

    def test_valid_document(self):
        """Rays and cone indices are accepted and counted"""
        doc = FanDocument(
            ambient_dim=2,
            rays=[[-1, 0], [0, 1], [1, 0]],
            cones_by_dim={1: [[0], [1], [2]], 2: [[0, 1], [1, 2]]},
        )
        assert doc.f_vector() == [3, 2]

    def test_string_dimension_keys(self):
        """JSON object keys are coerced to ints"""
        doc = FanDocument.model_validate_json(
            '{"ambient_dim": 1, "rays": [[1], [-1]], "cones_by_dim": {"1": [[0], [1]]}}'
        )
        assert doc.cones_by_dim == {1: [[0], [1]]}

    def test_ray_dimension_mismatch(self):
        """Rays must live in the ambient space"""
        with pytest.raises(ValidationError) as exc_info:
            FanDocument(ambient_dim=2, rays=[[1, 0, 0]])

        assert "does not have dimension 2" in str(exc_info.value)

    def test_unknown_ray_index(self):
        """Cones may only reference existing rays"""
        with pytest.raises(ValidationError):
            FanDocument(ambient_dim=1, rays=[[1]], cones_by_dim={1: [[3]]})

    def test_cone_dimension_out_of_range(self):
        """Cone dimensions run from 1 to the ambient dimension"""
        with pytest.raises(ValidationError):
            FanDocument(ambient_dim=1, rays=[[1]], cones_by_dim={2: [[0]]})

    def test_trivial_document(self):
        """The point fan has no rays and an empty f-vector"""
        doc = FanDocument(ambient_dim=0)
        assert doc.rays == []
        assert doc.f_vector() == []

    def test_negative_dimension(self):
        """Negative ambient dimension is rejected"""
        with pytest.raises(ValidationError):
            FanDocument(ambient_dim=-1)


class TestCoordinateMap:
    """Test the signed permutation model"""

    def test_valid_map(self):
        m = CoordinateMap(perm=[2, 0, 1], signs=[1, -1, 1])
        assert m.perm == [2, 0, 1]

    def test_not_a_permutation(self):
        with pytest.raises(ValidationError) as exc_info:
            CoordinateMap(perm=[0, 0, 1], signs=[1, 1, 1])

        assert "Not a permutation" in str(exc_info.value)

    @pytest.mark.parametrize("signs", [[1, 1], [1, 2, 1], [0, 1, 1]])
    def test_bad_signs(self, signs):
        """One sign of +1 or -1 per coordinate"""
        with pytest.raises(ValidationError):
            CoordinateMap(perm=[0, 1, 2], signs=signs)


class TestGoldenTable:
    """Test the golden table model"""

    def test_duplicate_rays_rejected(self):
        with pytest.raises(ValidationError) as exc_info:
            GoldenTable(
                name="dup",
                k=3,
                n=6,
                rays=[[1, 0], [1, 0]],
                f_vector=[2],
                facet_census={1: 2},
            )

        assert "Duplicate rays" in str(exc_info.value)

    def test_optional_fields_default(self):
        table = GoldenTable(
            name="t", k=2, n=4, rays=[[1], [-1]], f_vector=[2], facet_census={1: 2}
        )
        assert table.nonsimplicial_cones == []
        assert table.coordinate_map is None
        assert table.inequalities is None


class TestCheckReport:
    """Test report aggregation"""

    def test_empty_report_passes(self):
        assert CheckReport(subject="nothing").passed is True

    def test_one_failure_fails_report(self):
        report = CheckReport(subject="s")
        report.add(CheckItem(name="a", passed=True))
        report.add(CheckItem(name="b", passed=False, expected=1, actual=2))

        assert report.passed is False
        assert [item.name for item in report.items] == ["a", "b"]


class TestFanSummary:
    def test_trivial_summary_json(self):
        """The trivial summary serializes with empty statistics"""
        summary = FanSummary(ambient_dim=0, trivial=True)
        assert summary.model_dump_json() == (
            '{"ambient_dim":0,"trivial":true,"rays":0,"maximal_cones":0,'
            '"f_vector":[],"facet_census":{}}'
        )
