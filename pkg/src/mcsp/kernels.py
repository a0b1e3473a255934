"""Kernel dispatch: the compiled extension when available, numpy otherwise.

Set ``MCSP_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py as python_impl

native_impl = None
if not os.environ.get("MCSP_PURE_PYTHON"):
    try:
        from . import _kernels as native_impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        native_impl = None

_impl = native_impl if native_impl is not None else python_impl

IMPLEMENTATION = _impl.IMPLEMENTATION
extension_table = _impl.extension_table
free_runs = _impl.free_runs
placement_limits = _impl.placement_limits
suffix_bound = _impl.suffix_bound
longest_free_common = _impl.longest_free_common

__all__ = [
    "IMPLEMENTATION",
    "extension_table",
    "free_runs",
    "longest_free_common",
    "native_impl",
    "placement_limits",
    "python_impl",
    "suffix_bound",
]
