"""Wideband source enumeration on sparse linear arrays.

Thin package wrapper around the C++ core: coarray geometry, frequency-domain
snapshot synthesis, periodogram-averaged correlation recovery, augmented
covariance construction and the MDL / MDLgap / SORTE enumeration criteria.
"""

from saenum._core import *  # noqa: F401,F403
from saenum._core import __doc__  # noqa: F401

__version__ = "0.1.0"
