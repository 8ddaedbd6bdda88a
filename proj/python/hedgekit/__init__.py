"""Sentiment-driven dynamic hedging backtests.

Thin wrapper around the C++ core; see the README for the config file and
CLI interfaces.
"""

from ._hedgekit import *  # noqa: F401,F403
from ._hedgekit import __version__  # noqa: F401
