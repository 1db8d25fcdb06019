"""
Makes the flat source tree importable as ``morphPairs`` when the package is not installed.

The root directory is exposed through a symlink named after the package, so worker processes
of the parallel code paths can import it by name as well.
"""
import os
import sys
import tempfile

try:
    import morphPairs  # noqa: F401 pylint: disable=unused-import
except ImportError:
    _ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    _LINK_DIR = tempfile.mkdtemp(prefix="morphPairs-src-")
    os.symlink(_ROOT, os.path.join(_LINK_DIR, "morphPairs"))
    sys.path.insert(0, _LINK_DIR)
    os.environ["PYTHONPATH"] = os.pathsep.join(
        filter(None, [_LINK_DIR, os.environ.get("PYTHONPATH")])
    )
