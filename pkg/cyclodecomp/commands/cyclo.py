# cyclodecomp/commands/cyclo.py
import argparse

from . import CommandResult
from ..services import AnalysisService


def _poly(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    out = service.cyclotomic_report(args.n)
    return CommandResult(out, out.poly)


def _phi(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    out = service.phi_report(args.n)
    return CommandResult(out, str(out.phi))


def _factor_unity(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    out = service.factor_unity_report(args.n)
    text = "\n".join(f"{f.d}: {f.poly}" for f in out.factors)
    return CommandResult(out, text)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    """
    cyclo poly N | cyclo phi N | cyclo factor-unity N
    """
    cyclo = subparsers.add_parser("cyclo", help="cyclotomic polynomials and totients")
    actions = cyclo.add_subparsers(dest="action", required=True)

    for name, handler, help_text in (
        ("poly", _poly, "ascending coefficients of Phi_N"),
        ("phi", _phi, "Euler totient phi(N)"),
        ("factor-unity", _factor_unity, "x^N - 1 as a product of Phi_d, d | N"),
    ):
        p = actions.add_parser(name, parents=[common], help=help_text)
        p.add_argument("n", type=int, metavar="N")
        p.set_defaults(handler=handler)
