"""Kernel backend selection.

The compiled extension is preferred when present; setting the environment
variable ``COSMO_EVO_PURE_PYTHON=1`` forces the NumPy fallback. Both
backends are bit-identical, so the choice affects speed only (see
``benchmarks/bench_kernels.py``).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("COSMO_EVO_PURE_PYTHON", "").strip() in ("1", "true", "yes"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND

batch_rewards = _impl.batch_rewards
sample_categorical = _impl.sample_categorical
policy_grad = _impl.policy_grad
min_hamming = _impl.min_hamming
mutate_rows = _impl.mutate_rows
