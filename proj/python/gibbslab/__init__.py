"""Commuting-projector Gibbs state laboratory (python bindings)."""

try:
    from ._gibbslab import *  # noqa: F401,F403  installed layout
    from ._gibbslab import __version__  # noqa: F401
except ImportError:  # in-tree layout: extension built next to the sources
    from _gibbslab import *  # noqa: F401,F403
    from _gibbslab import __version__  # noqa: F401
