# cyclodecomp/commands/__init__.py

"""
CLI subcommands for the cyclotomic decomposition toolkit.

Each module registers its subparser and a handler
    handler(args, service) -> CommandResult
"""

from typing import List, NamedTuple, Optional, Tuple

from pydantic import BaseModel


class CommandResult(NamedTuple):
    payload: BaseModel
    text: str
    exit_code: int = 0


def render_text(fields: List[Tuple[str, str]]) -> str:
    """A single field prints bare; several print as "key: value" lines."""
    if len(fields) == 1:
        return fields[0][1]
    return "\n".join(f"{key}: {value}" for key, value in fields)


def seq_text(values: List[str]) -> str:
    return ",".join(values)


def optional_text(value: Optional[object]) -> str:
    return "-" if value is None else str(value)


from .analysis import register as register_analysis  # noqa: E402,F401
from .circulant import register as register_circulant  # noqa: E402,F401
from .cyclo import register as register_cyclo  # noqa: E402,F401
from .selfcheck import register as register_selfcheck  # noqa: E402,F401

__all__ = [
    "CommandResult",
    "register_analysis",
    "register_circulant",
    "register_cyclo",
    "register_selfcheck",
    "render_text",
]
