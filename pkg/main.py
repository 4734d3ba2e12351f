import argparse
import sys
from typing import List, Optional

from commands import collapses, complexes, constructions, hypertrees
from decorators.command_handler import EXIT_REFUSED, EXIT_USAGE
from utils.logging import setup_logger

logger = setup_logger(__name__)

COMMAND_MODULES = [complexes, collapses, hypertrees, constructions]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='stuck',
        description='Homology, Alexander duality, collapses and stuck complexes on small vertex sets.',
    )
    subparsers = parser.add_subparsers(dest='subcommand', metavar='COMMAND')
    subparsers.required = True

    # Register command modules
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def dispatch(argv: Optional[List[str]] = None) -> int:
    """
    Parse ``argv``, run the command and return its exit code.

    Exit codes: 0 success or property holds, 1 property fails or nothing found
    within budget, 2 usage or input error, 3 refusal.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    response, code = args.handler(args)
    if not response.get('success') and response.get('error') and code != EXIT_REFUSED:
        print(f"error: {response['error']}", file=sys.stderr)
    logger.debug(f"{args.subcommand} finished with exit code {code}")
    return code


if __name__ == '__main__':
    sys.exit(dispatch())
