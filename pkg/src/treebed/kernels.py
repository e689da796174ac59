"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set ``TREEBED_PURE_PYTHON=1`` in the environment to force the fallback even
when the extension built; the test suite uses this to compare the two.
"""

from __future__ import annotations

import os

from treebed import _kernels_py

if os.environ.get("TREEBED_PURE_PYTHON"):
    _impl = _kernels_py
    IMPLEMENTATION = "python"
else:
    try:
        from treebed import _kernels as _impl  # type: ignore[no-redef]

        IMPLEMENTATION = "compiled"
    except ImportError:
        _impl = _kernels_py
        IMPLEMENTATION = "python"

__all__ = ["IMPLEMENTATION", "min_wirelength_bijections", "max_induced_edges"]


def min_wirelength_bijections(nv, dist, edge_u, edge_v, first_choices=None):
    """See ``treebed._kernels_py.min_wirelength_bijections``."""
    return _impl.min_wirelength_bijections(nv, dist, edge_u, edge_v, first_choices)


def max_induced_edges(nv, adj_masks, k):
    """See ``treebed._kernels_py.max_induced_edges``."""
    if nv > 64 and _impl is not _kernels_py:
        # The compiled kernel packs subsets into one 64-bit word.
        return _kernels_py.max_induced_edges(nv, adj_masks, k)
    return _impl.max_induced_edges(nv, adj_masks, k)
