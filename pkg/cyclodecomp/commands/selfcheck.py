# cyclodecomp/commands/selfcheck.py
import argparse

from . import CommandResult
from ..selfcheck import selfcheck
from ..services import AnalysisService


def _selfcheck(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    out = selfcheck(args.max_n, seed=args.seed, samples=args.samples)

    lines = []
    for suite in out.suites:
        status = "ok" if suite.passed else f"FAILED: {suite.failure}"
        lines.append(f"{suite.name}: {suite.cases} cases {status}")
    lines.append("PASS" if out.passed else "FAIL")
    return CommandResult(out, "\n".join(lines), exit_code=0 if out.passed else 1)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    """
    selfcheck [--max-n N] [--seed S] [--samples K]
    """
    p = subparsers.add_parser("selfcheck", parents=[common], help="run every invariant suite")
    p.add_argument("--max-n", type=int, default=24, help="run scale; 24 runs every suite at full size (default 24)")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default from settings)")
    p.add_argument("--samples", type=int, default=None, help="override the random cases per n of every suite")
    p.set_defaults(handler=_selfcheck)
