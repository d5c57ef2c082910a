"""Compressed self-index over byte strings with pattern search and extraction."""

from ._core import (
    BoundsError,
    Error,
    FormatError,
    Index,
    InputError,
    IoError,
    measure,
)

__all__ = ["BoundsError", "Error", "FormatError", "Index", "InputError", "IoError", "measure"]
