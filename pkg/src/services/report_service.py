"""
Deterministic text reports for fan files and verification results
"""

import logging
from collections import Counter
from typing import List

from src.clusterfans import SplitReport
from src.exactgeom.vectors import format_vector
from src.models.fan_models import CheckReport, FanDocument, FanSummary

logger = logging.getLogger(__name__)


class ReportService:
    """Renders fans and check reports; identical input gives byte-identical output"""

    def summary(self, doc: FanDocument) -> FanSummary:
        if doc.ambient_dim == 0:
            return FanSummary(ambient_dim=0, trivial=True)
        top = doc.cones_by_dim.get(doc.ambient_dim, [])
        census = Counter(len(cone) for cone in top)
        return FanSummary(
            ambient_dim=doc.ambient_dim,
            rays=len(doc.rays),
            maximal_cones=len(top),
            f_vector=doc.f_vector(),
            facet_census=dict(sorted(census.items())),
        )

    def fan_report(self, doc: FanDocument) -> str:
        """TSV block (dimension, f-vector, rays, census) then a JSON summary line"""
        summary = self.summary(doc)
        lines: List[str] = []
        if summary.trivial:
            lines.append("# trivial fan: the ambient space is a point")
        else:
            lines.append(f"ambient_dim\t{doc.ambient_dim}")
            lines.append("f_vector\t" + ",".join(map(str, summary.f_vector)))
            for i, ray in enumerate(doc.rays):
                lines.append(f"ray\t{i}\t{','.join(map(str, ray))}\t{format_vector(ray)}")
            for rays, count in summary.facet_census.items():
                lines.append(f"census\t{rays}\t{count}")
        lines.append(summary.model_dump_json())
        logger.debug(
            "Rendered fan report",
            extra={"operation": "fan_report", "rays": summary.rays, "trivial": summary.trivial},
        )
        return "\n".join(lines) + "\n"

    def check_report(self, report: CheckReport) -> str:
        lines = [f"# {report.subject}"]
        for item in report.items:
            status = "PASS" if item.passed else "FAIL"
            lines.append(f"{status}\t{item.name}\texpected={item.expected}\tactual={item.actual}")
            lines.extend(f"\t{d}" for d in item.diff)
        lines.extend(f"# {note}" for note in report.notes)
        lines.append(f"# {'all checks passed' if report.passed else 'MISMATCH'}")
        return "\n".join(lines) + "\n"

    def split_report(self, report: SplitReport) -> str:
        """Parent ray count, child count and chain flag per coarse cone, then totals"""
        lines = ["parent_rays\tchildren\texpected\tchain"]
        for entry in report.entries:
            lines.append(
                f"{len(entry.parent)}\t{len(entry.children)}\t"
                f"{entry.expected_children}\t{'yes' if entry.is_chain() else 'no'}"
            )
        for rays, counts in report.child_counts().items():
            lines.append(f"# {rays}-ray cones: " + ",".join(map(str, sorted(set(counts)))))
        return "\n".join(lines) + "\n"
