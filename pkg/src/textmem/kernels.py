"""Kernel selection: compiled extension when built, pure Python otherwise.

The compiled module is optional; installs without a C toolchain fall
back transparently. ``BACKEND`` reports which one is active.
"""

from __future__ import annotations

try:
    from textmem._bfs import min_pair_distance

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from textmem._bfs_py import min_pair_distance

    BACKEND = "pure-python"

__all__ = ["min_pair_distance", "BACKEND"]
