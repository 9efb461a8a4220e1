"""Grid math kernels: overlap detection, vertical compaction, push-down.

These are the inner loops of the layout engine, executed on every edit and
hammered by the property suites. Two interchangeable implementations exist:
a Cython extension (``_cgrid``) and a pure-Python fallback (``_pure``). The
compiled kernel is preferred when it was built; set ``DASHFORGE_PURE_GRID=1``
to force the pure kernel. Both produce identical results on identical input
(see tests/test_gridkernel.py and benchmarks/bench_gridkernel.py).

A rect is an ``(x, y, w, h)`` tuple of grid units.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("DASHFORGE_PURE_GRID"):
    _impl = _pure
    IMPLEMENTATION = "pure"
else:
    try:
        from . import _cgrid as _impl  # type: ignore[attr-defined]

        IMPLEMENTATION = "cython"
    except ImportError:
        _impl = _pure
        IMPLEMENTATION = "pure"

overlapping_pairs = _impl.overlapping_pairs
has_overlap = _impl.has_overlap
compact = _impl.compact
push_down = _impl.push_down

__all__ = [
    "IMPLEMENTATION",
    "overlapping_pairs",
    "has_overlap",
    "compact",
    "push_down",
]
