"""Exact torsion-growth exponents and finite symplectic groups."""

try:
    from avgamma._core import *  # noqa: F401,F403
    from avgamma._core import __version__  # noqa: F401
except ImportError:  # in-tree builds put _core next to this package
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
