"""Kernel selection: compiled core if importable, pure Python otherwise.

Set DSEQ_PURE_PYTHON=1 to force the fallback (used by tests and the
benchmark to exercise both paths).
"""

import os

if os.environ.get("DSEQ_PURE_PYTHON"):
    from . import _corrpure as _impl

    BACKEND = "python"
else:
    try:
        from . import _corrcore as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _corrpure as _impl  # type: ignore[no-redef]

        BACKEND = "python"

cyclic_corr_sums = _impl.cyclic_corr_sums


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND
