"""Entangled-photon interferometric lithography: Fock-space simulation,
N-photon exposure doses and genetic-algorithm pattern synthesis."""

from ._qlitho import *  # noqa: F401,F403
from ._qlitho import __doc__  # noqa: F401

__version__ = "0.1.0"
