"""Zero-sum blocks and arithmetic subsequences in {-r,s}-sequences."""

from ._zerosum import *  # noqa: F401,F403
from ._zerosum import __version__  # noqa: F401
