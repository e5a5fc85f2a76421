"""Exact invariants of tangles, knots and links from oriented quantum coalgebras."""

from ._qcoalg import *  # noqa: F401,F403
from ._qcoalg import __doc__  # noqa: F401
