import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from girthroot.cli.router import include_commands
from girthroot.core.config import LOG_LEVELS, settings
from girthroot.core.errors import EXIT_USAGE, GirthRootError
from girthroot.core.logging import configure_logging

logger = logging.getLogger(__name__)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Graph powers and roots of girth at least 2r+3.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=None,
                        help="overrides GIRTHROOT_LOG")
    subparsers = parser.add_subparsers(dest="command", required=True)
    include_commands(subparsers)
    return parser

def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 for --help
        return int(exc.code or 0)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except GirthRootError as exc:
        logger.debug("command failed", exc_info=True)
        print(f"{parser.prog}: error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"{parser.prog}: error: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE

def main_entry() -> None:
    sys.exit(main())

if __name__ == "__main__":
    main_entry()
