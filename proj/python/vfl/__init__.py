"""First-order logic with variadic function symbols and ellipsis terms.

The heavy lifting lives in the compiled extension; this package re-exports
its surface: signatures, term/formula ASTs, parsing and printing,
substitution, the two term interpretations, three-valued satisfaction,
bounded quantifier elimination, and prefix-sound membership checking.
"""

from vfl._core import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
