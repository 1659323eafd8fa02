"""
Fan computation service: builds, refines, stores and loads fans
"""

import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from src.clusterfans import (
    SplitReport,
    cluster_ray_count_ok,
    refine_gr36,
    refine_gr37,
    split_report,
)
from src.clusterfans.variables import Convention
from src.config.settings import Settings, get_settings
from src.exactgeom import Fan
from src.exceptions import SerializationException, TropGrassException, WebDiagramException
from src.models.fan_models import FanDocument
from src.tropfan import build_F, build_F_cross_checked

logger = logging.getLogger(__name__)

REFINABLE = ((3, 6), (3, 7))


@dataclass(frozen=True)
class RefinementOutcome:
    """Refined fan plus what was needed to get it"""

    base: Fan
    refined: Fan
    convention: Optional[Convention]
    accepted: bool
    attempts: List[str]


class FanService:
    """Builds F_{k,n} and its cluster refinements using the configured route and threads"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def compute(self, k: int, n: int, cross_check: bool = False) -> Fan:
        started = time.monotonic()
        logger.info(
            f"Computing F_{{{k},{n}}}",
            extra={
                "operation": "compute_fan_start",
                "k": k,
                "n": n,
                "route": self.settings.refinement_route,
                "threads": self.settings.threads,
            },
        )
        if cross_check:
            fan = build_F_cross_checked(k, n, self.settings.threads)
        else:
            fan = build_F(k, n, self.settings.refinement_route, self.settings.threads)
        if not fan.is_trivial:
            fan.verify_complete(
                samples=self.settings.completeness_samples, seed=self.settings.random_seed
            )
        logger.info(
            f"F_{{{k},{n}}} ready",
            extra={
                "operation": "compute_fan_done",
                "k": k,
                "n": n,
                "maximal_cones": len(fan.maximal_cones),
                "elapsed": round(time.monotonic() - started, 3),
            },
        )
        return fan

    def _accepts(self, k: int, n: int, base: Fan, refined: Fan) -> bool:
        """Simplicial, one ray per cluster variable, facets split in chains"""
        if refined.nonsimplicial_cones():
            return False
        if not cluster_ray_count_ok(refined, k, n):
            return False
        report = split_report(base, refined)
        return report.counts_ok and report.chains_ok

    def refine(self, k: int, n: int, base: Optional[Fan] = None) -> RefinementOutcome:
        """
        Refine F_{3,6} or F_{3,7} by the extra cluster variables.

        For Gr(3,7) the configured projection convention is tried first; if its
        refinement is not accepted the other convention is tried and both
        attempts are reported.
        """
        if (k, n) not in REFINABLE:
            raise WebDiagramException(
                "Cluster refinements exist for Gr(3,6) and Gr(3,7) only", k=k, n=n
            )
        if base is None:
            base = self.compute(k, n)
        threads = self.settings.threads

        if (k, n) == (3, 6):
            refined = refine_gr36(base=base, threads=threads)
            accepted = self._accepts(k, n, base, refined)
            return RefinementOutcome(base, refined, None, accepted, ["gr36"])

        first: Convention = self.settings.projection_convention
        second: Convention = "cyclic" if first == "order" else "order"
        attempts: List[str] = []
        refined = base
        for convention in (first, second):
            refined = refine_gr37(base=base, convention=convention, threads=threads)
            accepted = self._accepts(k, n, base, refined)
            attempts.append(f"{convention}:{'accepted' if accepted else 'rejected'}")
            if accepted:
                if convention != first:
                    logger.warning(
                        f"Projection convention '{first}' rejected, '{convention}' accepted",
                        extra={"operation": "projection_fallback", "attempts": attempts},
                    )
                return RefinementOutcome(base, refined, convention, True, attempts)
            logger.warning(
                f"Refinement with projection convention '{convention}' not accepted",
                extra={
                    "operation": "projection_rejected",
                    "convention": convention,
                    "maximal_cones": len(refined.maximal_cones),
                },
            )
        return RefinementOutcome(base, refined, second, False, attempts)

    def split(self, before: Fan, after: Fan) -> SplitReport:
        return split_report(before, after)


def dump_fan(fan: Fan) -> str:
    """Stable JSON text of a fan file"""
    return fan.to_document().model_dump_json(indent=2) + "\n"


def save_fan(fan: Fan, path: Union[str, Path]) -> None:
    try:
        Path(path).write_text(dump_fan(fan), encoding="utf-8")
    except OSError as e:
        raise SerializationException("Cannot write fan file", path=str(path), original_error=e)


def load_document(path: Union[str, Path]) -> FanDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SerializationException("Cannot read fan file", path=str(path), original_error=e)
    try:
        return FanDocument.model_validate_json(text)
    except ValidationError as e:
        raise SerializationException(
            f"Malformed fan file: {e.error_count()} validation errors",
            path=str(path),
            original_error=e,
        )


def load_fan(path: Union[str, Path], certify: bool = True) -> Fan:
    doc = load_document(path)
    try:
        return Fan.from_document(doc, certify=certify)
    except TropGrassException as e:
        raise SerializationException(
            f"Fan file does not describe a complete fan: {e.message}",
            path=str(path),
            original_error=e,
        )
