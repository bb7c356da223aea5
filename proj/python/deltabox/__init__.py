"""Particle in a box with a delta spike."""

from ._deltabox import *  # noqa: F401,F403
from ._deltabox import __version__  # noqa: F401
