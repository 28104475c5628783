"""Python bindings for the double-EIT cross-Kerr laboratory."""

from _deitlab import *  # noqa: F401,F403
from _deitlab import __doc__  # noqa: F401
