"""rank-one Dunkl harmonic analysis toolkit."""

try:
    from ._dunklkit import *  # noqa: F401,F403
    from ._dunklkit import __version__  # noqa: F401
except ImportError:  # in-tree builds place the extension on sys.path directly
    from _dunklkit import *  # noqa: F401,F403
    from _dunklkit import __version__  # noqa: F401
