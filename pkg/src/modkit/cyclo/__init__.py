"""Exact arithmetic in cyclotomic fields."""
from .literal import LiteralError, format_literal, parse_literal
from .lower import lower, minimal_conductor
from .number import CycNum, NotAnInteger, zeta
from .split import PrecisionError, SplitField, norm_data

__all__ = [
    "CycNum",
    "LiteralError",
    "NotAnInteger",
    "PrecisionError",
    "SplitField",
    "format_literal",
    "lower",
    "minimal_conductor",
    "norm_data",
    "parse_literal",
    "zeta",
]
