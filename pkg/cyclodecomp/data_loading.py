# cyclodecomp/data_loading.py
import csv
import json
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from .exactmath import RatPoly, format_rational, parse_rational
from .periodic import PeriodicSeq
from .schemas import SequenceFile

PathLike = Union[str, Path]


def sequence_to_file(seq: PeriodicSeq) -> SequenceFile:
    return SequenceFile(period=seq.n, values=[format_rational(v) for v in seq.values])


def sequence_from_file(payload: SequenceFile) -> PeriodicSeq:
    return PeriodicSeq(payload.period, tuple(parse_rational(v) for v in payload.values))


def load_sequence(path: PathLike) -> PeriodicSeq:
    """
    Load a sequence from JSON ({"period": n, "values": ["1", "-1/2", ...]})
    or from a single-row CSV whose field count is the period.
    """
    path = Path(path)
    if not path.exists():
        raise ValueError(f"Sequence file not found: {path}")

    if path.suffix.lower() == ".csv":
        with path.open("r", encoding="utf-8", newline="") as f:
            rows: List[List[str]] = [r for r in csv.reader(f) if any(cell.strip() for cell in r)]
        if len(rows) != 1:
            raise ValueError(f"CSV sequence file needs exactly one row, got {len(rows)}")
        values = [cell.strip() for cell in rows[0]]
        return PeriodicSeq(len(values), tuple(parse_rational(v) for v in values))

    try:
        with path.open("r", encoding="utf-8") as f:
            payload = SequenceFile.model_validate(json.load(f))
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON in {path}: {e.msg}") from e
    except ValidationError as e:
        raise ValueError(f"Invalid sequence file {path}: {e.errors()[0]['msg']}") from e
    return sequence_from_file(payload)


def dump_sequence(seq: PeriodicSeq, path: PathLike) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as f:
        f.write(sequence_to_file(seq).model_dump_json(indent=2))
        f.write("\n")


def parse_poly_text(text: str) -> RatPoly:
    return RatPoly.parse(text)


def format_poly_text(p: RatPoly) -> str:
    return p.to_text()
