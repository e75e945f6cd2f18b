"""Backend selection for the hot paths.

The compiled extension ``_core`` is used when it was built and imports
cleanly; otherwise, or when the environment variable ``RAMSEY_EPS_PURE``
is set to a non-empty value other than ``0``, the pure-Python
``_core_py`` is used.  ``BACKEND`` names the choice.
"""

from __future__ import annotations

import os

_force_pure = os.environ.get("RAMSEY_EPS_PURE", "") not in ("", "0")

if _force_pure:
    from . import _core_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _core_py as _impl

        BACKEND = "python"

ProductRun = _impl.ProductRun
ReadTrie = _impl.ReadTrie
RecordingBeta = _impl.RecordingBeta
last_extending = _impl.last_extending
place_nodes = _impl.place_nodes
prefix_zero_masks = _impl.prefix_zero_masks
seeded_colour = _impl.seeded_colour
splitmix64 = _impl.splitmix64
strip = _impl.strip
zeros_mask = _impl.zeros_mask

__all__ = [
    "BACKEND",
    "ProductRun",
    "ReadTrie",
    "RecordingBeta",
    "last_extending",
    "place_nodes",
    "prefix_zero_masks",
    "seeded_colour",
    "splitmix64",
    "strip",
    "zeros_mask",
]
