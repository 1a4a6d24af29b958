"""Walk-regularity analysis for finite graphs.

Thin wrapper around the native ``walkreg._core`` extension: exact integer
walk counts, floating-point spectra and idempotents, derived-graph
constructions, Delsarte cliques and geometric decompositions.
"""

import json as _json
import os as _os
import sys as _sys

try:
    from walkreg._core import *  # noqa: F401,F403
    from walkreg import _core as _core  # noqa: F401
except ImportError:  # build-tree layout: extension next to the build dir
    _ext_dir = _os.environ.get("WALKREG_EXT_DIR")
    if not _ext_dir:
        raise
    _sys.path.insert(0, _ext_dir)
    import _core  # noqa: F401
    from _core import *  # noqa: F401,F403


def analyze(graph, with_geometry=True, max_n=2000):
    """Full analysis report as a dict (see the JSON schema walkreg-report/1)."""
    return _json.loads(_core.analyze_json(graph, with_geometry, max_n))
