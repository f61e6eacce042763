"""Python interface to the entrokit C++ core.

When installed via pip the compiled extension sits inside this package and
the bundled data files live in ``data/`` next to it; in a development
checkout the extension is importable from the CMake build tree instead.
"""

import os
import pathlib

_pkg_dir = pathlib.Path(__file__).resolve().parent

# Point the core at the packaged data files unless the caller already chose
# a data directory.
if "ENTROPY_INJECT_DATA_DIR" not in os.environ and (_pkg_dir / "data").is_dir():
    os.environ["ENTROPY_INJECT_DATA_DIR"] = str(_pkg_dir / "data")

try:
    from ._entrokit import *  # noqa: F401,F403
    from . import _entrokit as _impl
except ImportError:  # development layout: extension on sys.path
    from _entrokit import *  # noqa: F401,F403
    import _entrokit as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
