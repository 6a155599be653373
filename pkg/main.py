# main.py
import argparse
import logging
import sys
from typing import List, Optional

from cyclodecomp.commands import (
    register_analysis,
    register_circulant,
    register_cyclo,
    register_selfcheck,
)
from cyclodecomp.exactmath import ConsistencyError
from cyclodecomp.services import AnalysisService
from cyclodecomp.settings import settings

logger = logging.getLogger("cyclodecomp")

# Options whose values may start with "-" (e.g. --row "-1,1")
_SIGNED_VALUE_OPTIONS = ("--row", "--coeffs")


def create_parser() -> argparse.ArgumentParser:
    # Shared by every leaf subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--log-level", default=None, help=f"default {settings.log_level}")

    parser = argparse.ArgumentParser(
        prog="cyclodecomp",
        description="Exact cyclotomic decomposition of periodic sequences.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # -----------------------------------------------------
    # SUBCOMMANDS
    # -----------------------------------------------------
    register_cyclo(subparsers, common)
    register_analysis(subparsers, common)
    register_circulant(subparsers, common)
    register_selfcheck(subparsers, common)

    return parser


def _looks_like_option(token: str) -> bool:
    # every flag is long-form; -h is the only short one
    return token.startswith("--") or token == "-h"


def _attach_signed_values(argv: List[str]) -> List[str]:
    """
    Rewrite ["--row", "-1,1"] as ["--row=-1,1"] so argparse keeps the value.
    A following option (["--row", "--det"]) is left alone: the value is missing.
    """
    out: List[str] = []
    i = 0
    while i < len(argv):
        if (
            argv[i] in _SIGNED_VALUE_OPTIONS
            and i + 1 < len(argv)
            and not _looks_like_option(argv[i + 1])
        ):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
            continue
        out.append(argv[i])
        i += 1
    return out


def _configure_logging(level_name: Optional[str]) -> None:
    level = getattr(logging, (level_name or settings.log_level).upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s - %(message)s",
        stream=sys.stderr,
    )
    logger.setLevel(level)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, dispatch, print the report on stdout.

    Exit status: 0 success, 1 domain error or failed check, 2 usage error.
    """
    parser = create_parser()
    try:
        args = parser.parse_args(_attach_signed_values(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as e:
        # argparse already printed the usage diagnostic
        return int(e.code) if e.code is not None else 0

    _configure_logging(args.log_level)
    logger.info("Dispatching %s", args.command)

    try:
        service = AnalysisService()
        result = args.handler(args, service)
    except (ValueError, ZeroDivisionError) as e:
        logger.warning("%s failed: %s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ConsistencyError as e:
        logger.error("%s internal check failed: %s", args.command, e)
        print(f"error: internal check failed: {e}", file=sys.stderr)
        return 1
    except Exception as e:
        logger.exception("%s unexpected error: %s", args.command, e)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1

    if args.format == "text":
        print(result.text)
    else:
        print(result.payload.model_dump_json(indent=2))
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
