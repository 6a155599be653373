# cyclodecomp/commands/analysis.py
import argparse

from . import CommandResult, optional_text, render_text, seq_text
from ..data_loading import load_sequence, parse_poly_text
from ..services import AnalysisService


def _decompose(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    seq = load_sequence(args.input)
    out = service.decompose_report(seq, oracle=args.oracle)

    fields = [("support", ",".join(str(d) for d in out.support))]
    fields += [(f"component {d}", seq_text(part.values)) for d, part in out.components.items()]
    fields += [
        ("minimal_annihilator", out.minimal_annihilator),
        ("fundamental_period", str(out.fundamental_period)),
    ]
    if out.oracle_max_error is not None:
        fields.append(("oracle_max_error", f"{out.oracle_max_error:.3e}"))
    return CommandResult(out, render_text(fields))


def _halving(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    seq = load_sequence(args.input)
    out = service.halving_report(seq, chain=args.chain)

    if args.chain:
        fields = [(f"antiperiod {q}", seq_text(part.values)) for q, part in out.chain.items()]
        fields.append(("remainder", seq_text(out.remainder.values)))
    else:
        fields = [
            ("periodic", seq_text(out.periodic.values)),
            ("antiperiodic", seq_text(out.antiperiodic.values)),
        ]
    return CommandResult(out, render_text(fields))


def _diffeq_analyze(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    out = service.diffeq_report(parse_poly_text(args.coeffs))

    fields = [
        ("char_poly", out.char_poly),
        ("cyclotomic_factors", ",".join(f"{d}^{m}" for d, m in out.cyclotomic_factors.items()) or "-"),
        ("residual", out.residual),
        ("common_period", optional_text(out.common_period)),
        ("unit_modulus_flag", out.unit_modulus_flag),
        ("verdict", out.verdict),
    ]
    fields += [(f"solution {d}", seq_text(s.values)) for d, s in out.sample_solutions.items()]
    return CommandResult(out, render_text(fields))


def _annihilator(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    seq = load_sequence(args.input)
    out = service.annihilator_report(seq)

    fields = [("row " + str(j), seq_text(row)) for j, row in enumerate(out.matrix)]
    fields += [("nullspace", "; ".join(seq_text(v) for v in out.nullspace) or "-")]
    fields += [
        ("minimal_annihilator", out.minimal_annihilator),
        ("consistent", str(out.consistent).lower()),
    ]
    return CommandResult(out, render_text(fields))


def register(subparsers, common: argparse.ArgumentParser) -> None:
    """
    decompose --input seq.json [--oracle]
    halving --input seq.json [--chain]
    diffeq analyze --coeffs "1,2,2,1"
    annihilator --input seq.json
    """
    p = subparsers.add_parser("decompose", parents=[common], help="split a sequence over ker Phi_d(E)")
    p.add_argument("--input", required=True, help="sequence file (.json or single-row .csv)")
    p.add_argument("--oracle", action="store_true", help="also report the DFT oracle max error")
    p.set_defaults(handler=_decompose)

    p = subparsers.add_parser("halving", parents=[common], help="periodic + antiperiodic halving split")
    p.add_argument("--input", required=True, help="sequence file (.json or single-row .csv)")
    p.add_argument("--chain", action="store_true", help="repeat the split down to the odd part")
    p.set_defaults(handler=_halving)

    diffeq = subparsers.add_parser("diffeq", help="constant-coefficient difference equations")
    actions = diffeq.add_subparsers(dest="action", required=True)
    p = actions.add_parser("analyze", parents=[common], help="classify P(E) y = 0")
    p.add_argument("--coeffs", required=True, help='ascending coefficients, e.g. "1,2,2,1"')
    p.set_defaults(handler=_diffeq_analyze)

    p = subparsers.add_parser("annihilator", parents=[common], help="circulant system M a = 0 for a sequence")
    p.add_argument("--input", required=True, help="sequence file (.json or single-row .csv)")
    p.set_defaults(handler=_annihilator)
