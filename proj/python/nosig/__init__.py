"""No-signaling simulator: complex linear algebra, Kraus channels, Choi
positivity tests, optical networks and end-to-end scenario runners."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
