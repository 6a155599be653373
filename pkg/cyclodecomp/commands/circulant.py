# cyclodecomp/commands/circulant.py
import argparse

from . import CommandResult, render_text, seq_text
from ..circulant import Circulant
from ..exactmath import parse_rational
from ..services import AnalysisService


def _circulant(args: argparse.Namespace, service: AnalysisService) -> CommandResult:
    fields_in = [f.strip() for f in args.row.split(",")]
    if not args.row.strip() or any(not f for f in fields_in):
        raise ValueError(f"Malformed circulant row: {args.row!r}")
    c = Circulant(tuple(parse_rational(f) for f in fields_in))

    show_matrix = not (args.det or args.singular or args.nullspace)
    out = service.circulant_report(c, det=args.det, singular=args.singular, null=args.nullspace)

    fields = []
    if show_matrix:
        fields += [(f"row {i}", seq_text(r)) for i, r in enumerate(out.matrix)]
    if args.det:
        fields.append(("det", out.det))
    if args.singular:
        fields.append(("singular", str(out.singular).lower()))
        fields.append(("witnesses", ",".join(str(d) for d in out.witnesses) or "-"))
    if args.nullspace:
        fields.append(("nullspace", "; ".join(seq_text(v) for v in out.nullspace) or "-"))
    return CommandResult(out, render_text(fields))


def register(subparsers, common: argparse.ArgumentParser) -> None:
    """
    circulant --row "-1,1" [--det] [--singular] [--nullspace]
    """
    p = subparsers.add_parser("circulant", parents=[common], help="circulant matrix C(a_0, ..., a_{n-1})")
    p.add_argument("--row", required=True, help='first row, e.g. "-1,1"')
    p.add_argument("--det", action="store_true", help="exact determinant (two methods, cross-checked)")
    p.add_argument("--singular", action="store_true", help="singularity with cyclotomic witnesses")
    p.add_argument("--nullspace", action="store_true", help="exact nullspace basis")
    p.set_defaults(handler=_circulant)
