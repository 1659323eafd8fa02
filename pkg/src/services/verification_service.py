"""
Verification service: golden tables, the Stanley-Pitman comparison and the
Gr(2,4) oracle
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from src.assoctrees import catalan, sp_comparison
from src.config.settings import Settings, get_settings
from src.exactgeom import (
    Fan,
    SignedPermutation,
    euler_characteristic_ok,
    find_signed_permutation,
)
from src.exactgeom.vectors import format_vector
from src.exceptions import FixtureException
from src.models.fan_models import CheckItem, CheckReport, CoordinateMap, GoldenTable
from src.tropfan import GR24_SUBSETS, pos_membership_gr24, trop_phi2
from src.services.fan_service import FanService

logger = logging.getLogger(__name__)

TABLE_FILES: Dict[Tuple[int, int], str] = {(3, 6): "table_f36.json", (3, 7): "table_f37.json"}

# Weight vectors on which the relation's initial form is one-signed
GR24_NEGATIVE_CASES: Tuple[Tuple[int, ...], ...] = (
    (0, 1, 1, 1, 1, 0),  # min only on p12 p34
    (1, 1, 0, 0, 1, 1),  # min only on p14 p23
)


def _diff(expected: Sequence, actual: Sequence) -> List[str]:
    want, got = set(map(str, expected)), set(map(str, actual))
    return [f"-{x}" for x in sorted(want - got)] + [f"+{x}" for x in sorted(got - want)]


def _fan_cones(fan: Fan, mapping: SignedPermutation) -> List[List[str]]:
    """Non-simplicial maximal cones of fan after mapping, as sorted ray labels"""
    return sorted(
        sorted(format_vector(r) for r in mapping.apply_all(fan.rays_of(rs)))
        for rs in fan.nonsimplicial_cones()
    )


def _table_cones(table: GoldenTable) -> List[List[str]]:
    return sorted(
        sorted(format_vector(r) for r in cone) for cone in table.nonsimplicial_cones
    )


class VerificationService:
    """Compares computed fans against golden data and independent constructions"""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        fan_service: Optional[FanService] = None,
    ):
        self.settings = settings or get_settings()
        self.fan_service = fan_service or FanService(self.settings)

    def load_table(self, k: int, n: int) -> GoldenTable:
        if (k, n) not in TABLE_FILES:
            raise FixtureException(f"No golden table for F_{{{k},{n}}}")
        path = Path(self.settings.resolved_fixtures_dir) / TABLE_FILES[(k, n)]
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise FixtureException("Golden table missing", path=str(path), original_error=e)
        try:
            table = GoldenTable.model_validate_json(text)
        except ValidationError as e:
            raise FixtureException("Golden table malformed", path=str(path), original_error=e)
        if (table.k, table.n) != (k, n):
            raise FixtureException(
                f"Golden table is for F_{{{table.k},{table.n}}}", path=str(path)
            )
        return table

    def _coordinate_map(
        self, table: GoldenTable, fan: Fan, report: CheckReport
    ) -> Optional[SignedPermutation]:
        if table.coordinate_map is not None:
            m = table.coordinate_map
            report.notes.append(f"coordinate map pinned: perm={m.perm} signs={m.signs}")
            return SignedPermutation(tuple(m.perm), tuple(m.signs))
        expected_cones = _table_cones(table)

        def carries_cones(candidate: SignedPermutation) -> bool:
            return _fan_cones(fan, candidate) == expected_cones

        found: Optional[SignedPermutation] = None
        if expected_cones:
            found = find_signed_permutation(fan.rays, table.rays, accept=carries_cones)
            if found is None:
                report.notes.append(
                    "no signed coordinate permutation carries the non-simplicial cones"
                )
        if found is None:
            found = find_signed_permutation(fan.rays, table.rays)
        if found is None:
            report.notes.append("no signed coordinate permutation matches the table rays")
            return None
        pinned = CoordinateMap(perm=list(found.perm), signs=list(found.signs))
        report.notes.append(f"coordinate map found: {pinned.model_dump_json()}")
        return found

    def check_tables(self, k: int, n: int, fan: Optional[Fan] = None) -> CheckReport:
        """Rays, f-vector, facet census and non-simplicial cones against the golden table"""
        table = self.load_table(k, n)
        if fan is None:
            fan = self.fan_service.compute(k, n)
        report = CheckReport(subject=table.name)

        mapping = self._coordinate_map(table, fan, report)
        rays = mapping.apply_all(fan.rays) if mapping else tuple(sorted(fan.rays))
        expected_rays = sorted(tuple(r) for r in table.rays)
        report.add(
            CheckItem(
                name="rays",
                passed=list(rays) == expected_rays,
                expected=len(expected_rays),
                actual=len(rays),
                diff=_diff(
                    [format_vector(r) for r in expected_rays],
                    [format_vector(r) for r in rays],
                ),
            )
        )

        f_vector = list(fan.f_vector())
        report.add(
            CheckItem(
                name="f_vector",
                passed=f_vector == table.f_vector,
                expected=table.f_vector,
                actual=f_vector,
            )
        )
        report.add(
            CheckItem(
                name="euler_characteristic",
                passed=euler_characteristic_ok(f_vector, fan.ambient_dim),
                actual=f_vector,
            )
        )
        census = fan.facet_census()
        report.add(
            CheckItem(
                name="facet_census",
                passed=census == table.facet_census,
                expected=table.facet_census,
                actual=census,
            )
        )

        if table.nonsimplicial_cones:
            image = mapping or SignedPermutation.identity(fan.ambient_dim)
            actual_cones = _fan_cones(fan, image)
            expected_cones = _table_cones(table)
            report.add(
                CheckItem(
                    name="nonsimplicial_cones",
                    passed=actual_cones == expected_cones,
                    expected=expected_cones,
                    actual=actual_cones,
                )
            )

        for item in report.items:
            logger.info(
                f"{table.name} {item.name}: {'ok' if item.passed else 'MISMATCH'}",
                extra={
                    "operation": "check_tables_item",
                    "item": item.name,
                    "passed": item.passed,
                },
            )
        return report

    def sp_check(self, n: int) -> CheckReport:
        """F_{2,n} against the Stanley-Pitman fan"""
        result = sp_comparison(n, self.settings.refinement_route, self.settings.threads)
        report = CheckReport(subject=f"F_2_{n}")
        report.add(
            CheckItem(
                name="maximal_cones",
                passed=result.f2n_cones == catalan(n - 2),
                expected=catalan(n - 2),
                actual=result.f2n_cones,
            )
        )
        report.add(
            CheckItem(
                name="stanley_pitman_cones",
                passed=result.sp_cones == catalan(n - 2),
                expected=catalan(n - 2),
                actual=result.sp_cones,
            )
        )
        report.add(
            CheckItem(
                name="equal_fans", passed=result.equal, expected=True, actual=result.equal
            )
        )
        return report

    def oracle_gr24(self, bound: Optional[int] = None) -> CheckReport:
        """
        Every tropical parameterization image on the grid passes the initial-form
        sign test; the designated one-signed weights fail it.
        """
        b = bound if bound is not None else self.settings.oracle_grid_bound
        report = CheckReport(subject="Gr_2_4_oracle")
        for x in range(-b, b + 1):
            image = trop_phi2(2, 4, [x])
            w = tuple(image[K] for K in GR24_SUBSETS)
            report.add(
                CheckItem(
                    name=f"phi2({x})",
                    passed=pos_membership_gr24(w),
                    expected=True,
                    actual=[str(v) for v in w],
                )
            )
        report.add(
            CheckItem(name="zero_weight", passed=pos_membership_gr24((0,) * 6), expected=True)
        )
        for w0 in GR24_NEGATIVE_CASES:
            rejected = not pos_membership_gr24(w0)
            report.add(
                CheckItem(
                    name=f"reject{list(w0)}",
                    passed=rejected,
                    expected=False,
                    actual=not rejected,
                )
            )
        logger.info(
            f"Gr(2,4) oracle over {2 * b + 1} grid points",
            extra={"operation": "oracle_gr24", "bound": b, "passed": report.passed},
        )
        return report
