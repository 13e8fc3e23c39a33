"""Laplace equation in d dimensions: ultraspherical harmonics and boundary-value solver."""

from ._hyperlaplace import *  # noqa: F401,F403
from ._hyperlaplace import __doc__  # noqa: F401

__version__ = "0.1.0"
