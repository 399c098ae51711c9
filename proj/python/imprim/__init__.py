"""Induced representations, covariant observables and generalized wavelet
frames on finite groups, plus numeric wavelet/Gabor demonstrations."""

from imprim._core import *  # noqa: F401,F403
from imprim._core import __version__  # noqa: F401
