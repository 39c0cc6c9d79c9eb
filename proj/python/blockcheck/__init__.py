"""Blocked-clause checks, elimination and model reconstruction for CNF formulas.

Clauses and assignments are lists of DIMACS integers.
"""

from ._blockcheck import *  # noqa: F401,F403
from ._blockcheck import (
    BlockcheckError,
    CapExceeded,
    Formula,
    ParseError,
    PreconditionError,
    ResourceError,
    ValidationError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
