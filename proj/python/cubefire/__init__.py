"""Left cyclic partitions of n-cubes and the parallel chip firing game."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, ConstructionError, FormatError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
