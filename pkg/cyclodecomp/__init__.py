# cyclodecomp/__init__.py

"""
Exact cyclotomic decomposition of periodic sequences, difference-equation
periodicity analysis and circulant-matrix tools over the rationals.
"""

from . import (  # noqa: F401
    circulant,
    cyclotomic,
    data_loading,
    decompose,
    diffeq,
    exactmath,
    periodic,
    schemas,
    services,
    settings,
)

__all__ = [
    "circulant",
    "cyclotomic",
    "data_loading",
    "decompose",
    "diffeq",
    "exactmath",
    "periodic",
    "schemas",
    "services",
    "settings",
]
