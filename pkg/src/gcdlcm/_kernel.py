"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
twin. Set GCDLCM_PURE=1 to force the pure backend (used by the benchmark
and parity tests). Both backends return identical results on identical
input; only speed differs.
"""

from __future__ import annotations

import os

if os.environ.get("GCDLCM_PURE"):
    from gcdlcm import _core_py as impl

    BACKEND = "python"
else:
    try:
        from gcdlcm import _core as impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from gcdlcm import _core_py as impl

        BACKEND = "python"

greedy_cover = impl.greedy_cover
exact_cover = impl.exact_cover
bfs_reached = impl.bfs_reached


def kernel_backend() -> str:
    """Name of the active kernel backend: "compiled" or "python"."""
    return BACKEND
