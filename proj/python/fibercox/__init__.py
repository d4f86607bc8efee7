"""Pair thickenings of cube complexes: legality orbits, exact (co)homology,
virtual cohomological dimension, level-2 Davis quotients, and certificate
chains.

Every operation exchanges plain dicts in the same JSON schemas the ``fibercox``
command-line tool reads and writes, so artifacts move freely between the two.
"""

try:
    # installed layout: the extension lives inside this package
    from ._fibercox import *  # noqa: F401,F403
    from . import _fibercox as _impl
except ImportError:
    # build-tree layout: the extension sits on sys.path next to the package
    from _fibercox import *  # noqa: F401,F403
    import _fibercox as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "1.0.0"
