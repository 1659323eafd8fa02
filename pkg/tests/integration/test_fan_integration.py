"""
Full computations of F_{3,6} and F_{3,7} against the golden tables and the
cluster refinements
"""

import pytest

from src.clusterfans import split_report
from src.services.fan_service import FanService
from src.services.verification_service import VerificationService
from src.tropfan import build_F

pytestmark = pytest.mark.slow


class TestF36:
    """Test F_{3,6} end to end"""

    def test_golden_table(self, test_settings, fan_3_6):
        report = VerificationService(test_settings).check_tables(3, 6, fan=fan_3_6)
        assert report.passed, [i.name for i in report.items if not i.passed]

    def test_every_table_category_passes(self, test_settings, fan_3_6):
        report = VerificationService(test_settings).check_tables(3, 6, fan=fan_3_6)

        names = [i.name for i in report.items]
        assert names == [
            "rays",
            "f_vector",
            "euler_characteristic",
            "facet_census",
            "nonsimplicial_cones",
        ]
        assert all(i.passed for i in report.items)

    def test_unpinned_table_found_by_search(self, test_settings, fan_3_6, tmp_path):
        table = VerificationService(test_settings).load_table(3, 6)
        table.coordinate_map = None
        (tmp_path / "table_f36.json").write_text(table.model_dump_json(), encoding="utf-8")
        settings = test_settings.model_copy(update={"fixtures_dir": tmp_path})

        report = VerificationService(settings).check_tables(3, 6, fan=fan_3_6)

        assert report.passed, [i.name for i in report.items if not i.passed]
        assert report.notes[0].startswith("coordinate map found")

    def test_cluster_refinement(self, test_settings, fan_3_6):
        outcome = FanService(test_settings).refine(3, 6, base=fan_3_6)

        assert outcome.accepted
        assert outcome.refined.f_vector() == (16, 66, 100, 50)
        assert outcome.refined.nonsimplicial_cones() == []

        split = split_report(fan_3_6, outcome.refined)
        assert split.split_pattern() == {4: 1, 5: 2}
        assert split.chains_ok

    def test_minkowski_route_agrees(self, test_settings, fan_3_6):
        settings = test_settings.model_copy(
            update={"refinement_route": "minkowski", "completeness_samples": 20}
        )
        assert FanService(settings).compute(3, 6).same_cones(fan_3_6)


class TestF37:
    """Test F_{3,7} end to end"""

    @pytest.fixture(scope="class")
    def fan_3_7(self):
        return build_F(3, 7)

    def test_golden_table(self, test_settings, fan_3_7):
        report = VerificationService(test_settings).check_tables(3, 7, fan=fan_3_7)
        assert report.passed, [i.name for i in report.items if not i.passed]

    def test_cluster_refinement(self, test_settings, fan_3_7):
        outcome = FanService(test_settings).refine(3, 7, base=fan_3_7)

        assert outcome.accepted, outcome.attempts
        assert outcome.refined.f_vector() == (42, 399, 1547, 2856, 2499, 833)
        assert split_report(fan_3_7, outcome.refined).counts_ok
