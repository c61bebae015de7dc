"""Lossy, seeded SU(1,1) interferometer simulator."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, closed_form  # noqa: F401
