"""Hot-loop kernels: compiled extension when available, pure Python otherwise.

Set CONCEPTLAB_KERNEL=pure to force the fallback (used by the benchmark and
by backend-equivalence tests).  The active backend is reported in BACKEND.
"""

import os

from conceptlab._kernels import pure

if os.environ.get("CONCEPTLAB_KERNEL", "").strip().lower() == "pure":
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from conceptlab._kernels import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

BRUTEFORCE_MAX_PATTERNS = pure.BRUTEFORCE_MAX_PATTERNS

ds_fixpoint = _impl.ds_fixpoint
ds_bruteforce_mask = _impl.ds_bruteforce_mask
