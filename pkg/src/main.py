"""
tropgrass command-line interface
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from src.config.settings import Settings, get_settings
from src.exceptions import (
    ConfigurationException,
    FanStructureException,
    FixtureException,
    RefinementException,
    SerializationException,
    TropGrassException,
    VerificationException,
    WebDiagramException,
)
from src.exactgeom import Fan
from src.exactgeom.vectors import format_vector
from src.posparam import (
    RegionAssignment,
    format_plucker_tsv,
    format_regions_tsv,
    parse_plucker_tsv,
    phi1,
    phi2,
    psi,
    region_values,
)
from src.posparam.tsv import read_text
from src.services.fan_service import (
    FanService,
    dump_fan,
    load_document,
    load_fan,
    save_fan,
)
from src.services.report_service import ReportService
from src.services.verification_service import VerificationService
from src.utils.version import version_banner
from src.webdiagram import build_web

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _value_list(text: str) -> List[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropgrass",
        description="Totally positive tropical Grassmannian fans from web diagrams",
    )
    parser.add_argument("--version", action="version", version=version_banner())
    parser.add_argument("--threads", type=_positive_int, help="worker processes (default 1)")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--route", choices=["direct", "minkowski"], help="refinement route")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("web", help="render Web_{k,n} and its regions")
    _add_kn(p)
    p.add_argument("--json", action="store_true", help="dump regions as JSON")

    p = sub.add_parser("fan", help="compute F_{k,n} and write it as JSON")
    _add_kn(p)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--cross-check", action="store_true", help="run both routes and compare")

    for name, text in (("fvector", "print the f-vector"), ("rays", "print the rays")):
        p = sub.add_parser(name, help=text)
        _add_kn(p, required=False)
        p.add_argument("--fan", help="read the fan from a JSON file instead")

    p = sub.add_parser("param", help="Plücker coordinates of region values")
    _add_kn(p)
    given = p.add_mutually_exclusive_group(required=True)
    given.add_argument(
        "--inner", type=_value_list, help="inner region values v1,v2,... in coordinate order"
    )
    given.add_argument("--regions", help="TSV of region values, inner or all regions")
    p.add_argument(
        "--outer",
        type=_value_list,
        help="outer region values in row-major order (default: all 1, normalized)",
    )

    p = sub.add_parser("invert", help="region values of a positive Plücker vector")
    p.add_argument("--plucker", required=True, help="TSV of Plücker coordinates")

    p = sub.add_parser("sp-check", help="compare F_{2,n} with the Stanley-Pitman fan")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("refine", help="refine F_{3,6} or F_{3,7} by cluster variables")
    _add_kn(p)
    p.add_argument("--base", help="precomputed F_{k,n} JSON")
    p.add_argument("--out", help="write the refined fan here")

    p = sub.add_parser("split-report", help="how the cones of one fan split in another")
    p.add_argument("before")
    p.add_argument("after")

    p = sub.add_parser("check-tables", help="compare F_{3,6} or F_{3,7} with the golden tables")
    _add_kn(p)
    p.add_argument("--fan", help="precomputed fan JSON")

    p = sub.add_parser("oracle", help="Gr(2,4) initial-form oracle")
    p.add_argument("--bound", type=_positive_int, help="grid half-width")

    p = sub.add_parser("report", help="TSV report and JSON summary of a fan file")
    p.add_argument("fan")

    return parser


def _add_kn(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--k", type=int, required=required)
    p.add_argument("--n", type=int, required=required)


def _settings_for(args: argparse.Namespace) -> Settings:
    try:
        base = get_settings()
    except ValidationError as e:
        raise ConfigurationException("Invalid environment configuration", original_error=e)
    update: Dict[str, object] = {}
    if args.threads is not None:
        update["threads"] = args.threads
    if args.route is not None:
        update["refinement_route"] = args.route
    if args.log_level is not None:
        level = args.log_level.upper()
        if level not in logging.getLevelNamesMapping():
            raise ConfigurationException(
                f"Unknown log level: {args.log_level}", config_key="log_level"
            )
        update["log_level"] = level
    return base.model_copy(update=update) if update else base


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _fan_from(args: argparse.Namespace, service: FanService) -> Fan:
    if getattr(args, "fan", None):
        return load_fan(args.fan)
    if args.k is None or args.n is None:
        raise ConfigurationException("Give --k and --n, or --fan", config_key="k,n")
    return service.compute(args.k, args.n)


def _require(passed: bool, what: str, mismatches: Optional[List[str]] = None) -> None:
    if not passed:
        raise VerificationException(f"{what} failed", mismatches=mismatches)


def cmd_web(args: argparse.Namespace, settings: Settings) -> int:
    w = build_web(args.k, args.n)
    if args.json:
        _emit(w.to_document().model_dump_json(indent=2) + "\n")
    else:
        _emit(w.render_text() + "\n")
    return EXIT_OK


def cmd_fan(args: argparse.Namespace, settings: Settings) -> int:
    fan = FanService(settings).compute(args.k, args.n, cross_check=args.cross_check)
    if args.out:
        save_fan(fan, args.out)
    else:
        _emit(dump_fan(fan))
    return EXIT_OK


def cmd_fvector(args: argparse.Namespace, settings: Settings) -> int:
    fan = _fan_from(args, FanService(settings))
    _emit(",".join(map(str, fan.f_vector())) + "\n")
    return EXIT_OK


def cmd_rays(args: argparse.Namespace, settings: Settings) -> int:
    fan = _fan_from(args, FanService(settings))
    for i, ray in enumerate(fan.rays):
        _emit(f"{i}\t{','.join(map(str, ray))}\t{format_vector(ray)}\n")
    return EXIT_OK


def cmd_param(args: argparse.Namespace, settings: Settings) -> int:
    w = build_web(args.k, args.n)
    if args.regions is not None:
        if args.outer is not None:
            raise ConfigurationException("--outer goes with --inner, not --regions")
        values = region_values(read_text(args.regions), source=args.regions)
        inner = {r.grid_index for r in w.inner_regions}
        mode = "inner" if set(values) <= inner else "all"
        x = RegionAssignment.from_mapping(args.k, args.n, mode, values)
        d = phi2(x) if mode == "inner" else phi1(x)
    elif args.outer is None:
        d = phi2(RegionAssignment.from_inner_vector(args.k, args.n, args.inner))
    else:
        if len(args.outer) != len(w.outer_regions):
            raise WebDiagramException(
                f"Expected {len(w.outer_regions)} outer values, got {len(args.outer)}",
                k=args.k,
                n=args.n,
            )
        outer = dict(zip((r.grid_index for r in w.outer_regions), args.outer))
        x = RegionAssignment.from_inner_vector(args.k, args.n, args.inner)
        d = phi1(x.with_outer(outer))
    _emit(format_plucker_tsv(d))
    return EXIT_OK


def cmd_invert(args: argparse.Namespace, settings: Settings) -> int:
    d = parse_plucker_tsv(read_text(args.plucker), source=args.plucker)
    _emit(format_regions_tsv(psi(d.normalized())))
    return EXIT_OK


def cmd_sp_check(args: argparse.Namespace, settings: Settings) -> int:
    report = VerificationService(settings).sp_check(args.n)
    _emit(ReportService().check_report(report))
    _require(report.passed, f"Stanley-Pitman comparison for n={args.n}")
    return EXIT_OK


def cmd_refine(args: argparse.Namespace, settings: Settings) -> int:
    service = FanService(settings)
    base = load_fan(args.base) if args.base else None
    outcome = service.refine(args.k, args.n, base=base)
    if args.out:
        save_fan(outcome.refined, args.out)
    lines = [
        "f_vector_before\t" + ",".join(map(str, outcome.base.f_vector())),
        "f_vector_after\t" + ",".join(map(str, outcome.refined.f_vector())),
        f"convention\t{outcome.convention or '-'}",
        "attempts\t" + ",".join(outcome.attempts),
        f"accepted\t{'yes' if outcome.accepted else 'no'}",
    ]
    _emit("\n".join(lines) + "\n")
    _require(outcome.accepted, "Cluster refinement", outcome.attempts)
    return EXIT_OK


def cmd_split_report(args: argparse.Namespace, settings: Settings) -> int:
    before, after = load_fan(args.before), load_fan(args.after)
    report = FanService(settings).split(before, after)
    _emit(ReportService().split_report(report))
    _require(report.counts_ok and report.chains_ok, "Split pattern")
    return EXIT_OK


def cmd_check_tables(args: argparse.Namespace, settings: Settings) -> int:
    fan = load_fan(args.fan) if args.fan else None
    report = VerificationService(settings).check_tables(args.k, args.n, fan=fan)
    _emit(ReportService().check_report(report))
    _require(
        report.passed,
        f"Golden table check for F_{{{args.k},{args.n}}}",
        [item.name for item in report.items if not item.passed],
    )
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> int:
    report = VerificationService(settings).oracle_gr24(args.bound)
    _emit(ReportService().check_report(report))
    _require(report.passed, "Gr(2,4) oracle")
    return EXIT_OK


def cmd_report(args: argparse.Namespace, settings: Settings) -> int:
    _emit(ReportService().fan_report(load_document(args.fan)))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "web": cmd_web,
    "fan": cmd_fan,
    "fvector": cmd_fvector,
    "rays": cmd_rays,
    "param": cmd_param,
    "invert": cmd_invert,
    "sp-check": cmd_sp_check,
    "refine": cmd_refine,
    "split-report": cmd_split_report,
    "check-tables": cmd_check_tables,
    "oracle": cmd_oracle,
    "report": cmd_report,
}


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the process exit status"""
    if isinstance(exc, (VerificationException, RefinementException, FanStructureException)):
        return EXIT_MISMATCH
    if isinstance(exc, TropGrassException):
        return EXIT_USAGE
    return EXIT_MISMATCH


def handle_exception(exc: BaseException) -> int:
    code = exit_code_for(exc)
    if isinstance(exc, VerificationException):
        logger.error(
            f"Verification failed: {exc.message}",
            extra={"exception_type": "VerificationException", "details": exc.details},
        )
    elif isinstance(exc, (FixtureException, SerializationException, ConfigurationException)):
        logger.error(
            f"Input error: {exc.message}",
            extra={"exception_type": type(exc).__name__, "details": exc.details},
        )
    elif isinstance(exc, TropGrassException):
        logger.error(
            f"{type(exc).__name__}: {exc}",
            extra={"exception_type": type(exc).__name__, "details": exc.details},
        )
    else:
        logger.error(
            f"Unexpected error: {exc}",
            extra={"exception_type": type(exc).__name__},
            exc_info=True,
        )
    sys.stderr.write(f"error: {exc}\n")
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settings_for(args)
        logging.basicConfig(
            level=settings.effective_log_level,
            format=LOG_FORMAT,
            stream=sys.stderr,
            force=True,
        )
        logger.debug(
            f"Running {args.command}",
            extra={"operation": "cli", "command": args.command, "threads": settings.threads},
        )
        return COMMANDS[args.command](args, settings)
    except Exception as e:
        return handle_exception(e)


if __name__ == "__main__":
    sys.exit(main())
