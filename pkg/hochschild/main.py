"""
Command line entry point
"""

import argparse
import logging
import sys

from dotenv import load_dotenv
from pydantic import ValidationError

load_dotenv()

from hochschild.algebra.koszul import KINDS, is_profile_dict  # noqa: E402
from hochschild.components import JsonComponent, ProfileComponent, TableComponent  # noqa: E402
from hochschild.exceptions import INPUT_ERRORS, HochschildError  # noqa: E402
from hochschild.models import JobConfig, Report  # noqa: E402
from hochschild.services import SERVICES, VerificationService  # noqa: E402
from hochschild.settings import settings  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

# options forwarded to Service.run when given
SERVICE_OPTIONS = ("ideal", "poly", "by", "seq", "bound", "kind", "p")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--f", help="the polynomial f (default: the cubic with parameter q)")
    common.add_argument("--vars", help="comma-separated variable names")
    common.add_argument("--order", help="lex, grlex or grevlex, optionally with a priority, e.g. grevlex:z3,z1,z2")
    common.add_argument("--coeff", help="Q, Qq or Qq@<rational>")
    common.add_argument("--smax", type=int, help="largest internal degree of profiles")
    common.add_argument("--pmax", type=int, help="largest complex index to build")
    common.add_argument("--window", type=int, help="trailing zeros that count as stabilized")
    common.add_argument("--workers", type=int, help="processes for profile evaluation")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="hochschild",
        description="Groebner bases, Milnor algebras and Hochschild (co)homology of hypersurfaces.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, parents=[common], help=help, aliases=list(SERVICES[name].ALIASES))

    ideal_help = "gradient, jacobian2 or custom:<p1>,<p2>,..."
    gb = add("gb", "reduced Groebner basis of an ideal")
    gb.add_argument("--ideal", default="gradient", help=ideal_help)
    for name, help in (("nf", "normal form modulo an ideal"), ("member", "ideal membership")):
        sub = add(name, help)
        sub.add_argument("--ideal", default="gradient", help=ideal_help)
        sub.add_argument("--poly", required=True)
    colon = add("colon", "colon ideal J : <g>")
    colon.add_argument("--ideal", default="gradient", help=ideal_help)
    colon.add_argument("--by", required=True)
    regseq = add("regseq", "regular sequence test")
    regseq.add_argument("--seq", required=True, help="comma-separated polynomials")
    milnor = add("milnor", "Milnor algebra of f")
    milnor.add_argument("--bound", type=int)
    std = add("std-basis", "standard monomials of an ideal")
    std.add_argument("--ideal", default="gradient", help=ideal_help)
    std.add_argument("--bound", type=int)
    hh = add("hh", "dimension profile of Hochschild (co)homology")
    hh.add_argument("--kind", choices=KINDS, default=KINDS[0])
    hh.add_argument("--p", type=int, required=True)
    add("structural", "profiles of the auxiliary spaces over A")
    add(VerificationService.SUBCOMMAND, "run the verification checklist")
    return parser


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else settings.LOG_LEVEL
    logging.basicConfig(level=level, format=settings.LOG_FORMAT, stream=sys.stderr, force=True)


def job_config(args: argparse.Namespace) -> JobConfig:
    given = {
        "f": args.f,
        "variables": args.vars,
        "order": args.order,
        "coeff": args.coeff,
        "smax": args.smax,
        "pmax": args.pmax,
        "window": args.window,
        "workers": args.workers,
    }
    return JobConfig(**{k: v for k, v in given.items() if v is not None})


def render(report: Report, as_json: bool) -> str:
    if as_json:
        return JsonComponent(report).render()
    title = f"{report.subcommand}: f = {report.config.f} over {report.config.coeff}"
    parts = [TableComponent(report.results).render(title, checklist=report.subcommand == VerificationService.SUBCOMMAND)]
    for result in report.results:
        if is_profile_dict(result.computed):
            parts.append(ProfileComponent(result.computed).render(result.name))
    return "\n\n".join(parts)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        return exit.code
    configure_logging(args.verbose)
    try:
        config = job_config(args)
        service = SERVICES[args.subcommand](config)
        options = {k: getattr(args, k) for k in SERVICE_OPTIONS if getattr(args, k, None) is not None}
        report = service.run(**options)
    except ValidationError as error:
        print(f"error: invalid configuration: {error.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT
    except INPUT_ERRORS as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT
    except HochschildError as error:
        logger.exception("%s failed", args.subcommand)
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_FAILED
    print(render(report, args.json))
    for failure in report.failures:
        print(f"FAILED {failure.name} [{failure.anchor}]", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED
