"""Waves in fractional Zener viscoelastic media.

Thin Python layer over the C++ core: fundamental-solution evaluation,
Cauchy-problem solves, fractional-calculus primitives, and the oracle
verification suite.
"""

try:
    from ._fzwave import *  # noqa: F401,F403
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _fzwave import *  # noqa: F401,F403
