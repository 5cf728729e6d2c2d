"""pgames: solver, verifier and real-time advisor for parametrized games."""

__version__ = "0.1.0"

from . import jeopardy, kuhn, matrix, pdl, sampling, weakest_link  # noqa: F401
