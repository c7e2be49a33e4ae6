# SPDX-License-Identifier: Apache-2.0
"""Device-orientation statistics and optical wireless link models."""

from orilink._core import *  # noqa: F401,F403
from orilink._core import __version__  # noqa: F401
