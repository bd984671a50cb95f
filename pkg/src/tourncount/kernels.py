"""Backend selection for the hot loops.

The compiled extension is preferred when importable; otherwise the pure
Python implementation is used.  Both expose the same three functions with
identical semantics (tests assert bit-for-bit parity).

Set TOURNCOUNT_BACKEND=python to force the fallback, or
TOURNCOUNT_BACKEND=cython to require the extension (ImportError if missing).
"""

import os

_requested = os.environ.get("TOURNCOUNT_BACKEND", "auto").lower()

if _requested in ("python", "pure", "py"):
    from . import _kernels_py as _impl
elif _requested in ("cython", "compiled", "c"):
    from . import _kernels_cy as _impl  # type: ignore[no-redef]
elif _requested == "auto":
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl
else:
    raise ImportError(f"unknown TOURNCOUNT_BACKEND value {_requested!r}")

BACKEND = _impl.BACKEND_NAME

edge_sums = _impl.edge_sums
subset_table_sum = _impl.subset_table_sum
label_histogram5 = _impl.label_histogram5
