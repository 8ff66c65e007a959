"""Python bindings for the symporb C++ core."""

from ._core import *  # noqa: F401,F403
from ._core import Error, DomainError, SizeError, ParseError, ConsistencyError  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
