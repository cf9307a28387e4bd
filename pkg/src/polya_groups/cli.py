"""
Command-line surface: polya-survey {quad,survey,growth,families,cyclotomic,sieve}.

Tables go to stdout (or --out), logs to stderr. Exit codes: 0 on success,
2 on invalid input, 3 when two independent computations disagree or an
arithmetic step fails (an untrusted high-precision value included).
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from polya_groups.api.survey_parallel import SurveyPipelineParallel
from polya_groups.api.tables import write_table
from polya_groups.config import get_app_config, get_catalog
from polya_groups.errors import InputError, InvariantViolation
from polya_groups.models.requests import SurveyConfig
from polya_groups.types import Commands

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='fmt', choices=['csv', 'json'], default='csv', help='Output format')
    common.add_argument('--out', metavar='PATH', help='Write the table to PATH instead of stdout')
    common.add_argument('--workers', type=int, metavar='K', help='Worker processes (default POLYA_WORKERS)')
    common.add_argument('--precision', type=int, metavar='DIGITS', help='Decimal digits (default POLYA_PRECISION)')
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per catalog command; column docs go in each epilog."""
    catalog = get_catalog()
    parser = argparse.ArgumentParser(
        prog='polya-survey',
        description='Class groups, Polya groups, units and abelian discriminants as CSV/JSON tables.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    common = _common_options()

    def add(name: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(
            name,
            parents=[common],
            help=catalog.commands[name],
            description=catalog.commands[name],
            epilog=Commands.describe_columns(name),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )

    quad = add('quad')
    quad.add_argument('-d', '--disc', type=int, required=True, help='Fundamental discriminant')

    for name in ('survey', 'growth'):
        sweep = add(name)
        sweep.add_argument('-B', '--bound', type=int, required=True, help='Sweep -B <= d < 0')

    families = add('families')
    families.add_argument('-N', dest='n_max', type=int, required=True, help='Largest family parameter n')
    families.add_argument('--family', choices=sorted(catalog.families), help='Only this family')

    cyclotomic = add('cyclotomic')
    cyclotomic.add_argument('--pmax', type=int, required=True, help='Largest odd prime p (<= 100)')

    sieve = add('sieve')
    sieve.add_argument('-N', dest='n_max', type=int, required=True, help='Sieve 1 <= n <= N')
    sieve.add_argument('--family', choices=sorted(catalog.families), required=True, help='Family to sieve')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Returns:
        Process exit code (0, 2 or 3)

    Example:
        $ polya-survey quad -d -84
        $ polya-survey survey -B 10000 --workers 4 --out data/survey.csv
    """
    args = build_parser().parse_args(argv)
    app = get_app_config()
    logging.basicConfig(
        level=app.log_level.upper(),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )

    try:
        cfg = SurveyConfig(
            command=args.command,
            disc=getattr(args, 'disc', None),
            bound=getattr(args, 'bound', None),
            n_max=getattr(args, 'n_max', None),
            family=getattr(args, 'family', None),
            pmax=getattr(args, 'pmax', None),
            fmt=args.fmt,
            out=args.out,
            workers=args.workers if args.workers is not None else app.workers,
            precision=args.precision if args.precision is not None else app.precision,
        )
        pipeline = SurveyPipelineParallel(config=app, precision=cfg.precision, workers=cfg.workers)
        table = pipeline.run(cfg)
        text = write_table(table, cfg.fmt, cfg.out, app.float_digits)
    except (InputError, ValidationError) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_INPUT
    except (InvariantViolation, ArithmeticError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INVARIANT

    if cfg.out is None:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
