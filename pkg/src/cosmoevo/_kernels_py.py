"""Pure-NumPy kernel implementations.

These are the reference semantics for the compiled twins in
``_kernels_c.pyx``: both backends must produce bit-identical float64
results for the same inputs, so every reduction here is written with a
fixed accumulation order (``np.add.at`` accumulates in element order,
matching a plain C loop). Transcendentals (exp/log) and statistics are
deliberately kept out of the kernels and live in shared caller code.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def batch_rewards(actions: np.ndarray, target: int, reward_base: float) -> np.ndarray:
    """Reward of each row: reward_base - |row_sum - target|."""
    sums = actions.sum(axis=1, dtype=np.int64)
    return reward_base - np.abs(sums - target).astype(np.float64)


def sample_categorical(cdf: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Inverse-CDF draw per position.

    ``cdf`` has shape (length, n_actions) with rows non-decreasing and ending
    at ~1.0; ``u`` has shape (n, length). Returns the smallest index j with
    u < cdf[j], clipped to the last action to absorb rounding at the top end.
    """
    n, length = u.shape
    last = cdf.shape[1] - 1
    out = np.empty((n, length), dtype=np.int64)
    for i in range(length):
        out[:, i] = np.searchsorted(cdf[i], u[:, i], side="right")
    np.minimum(out, last, out=out)
    return out


def policy_grad(
    probs: np.ndarray,
    actions: np.ndarray,
    wbar: np.ndarray,
    wbar_total: float,
) -> np.ndarray:
    """Gradient of the weight-normalized log-likelihood w.r.t. the logits.

    grad[i, a] = sum_k wbar[k] * (1{actions[k, i] == a} - probs[i, a]).
    """
    n, length = actions.shape
    counts = np.zeros_like(probs)
    pos = np.broadcast_to(np.arange(length), (n, length))
    w = np.broadcast_to(wbar[:, None], (n, length))
    np.add.at(counts, (pos, actions), w)
    return counts - wbar_total * probs


def min_hamming(trajs: np.ndarray, neighbors: np.ndarray) -> np.ndarray:
    """Per row, the minimum Hamming distance to its listed neighbor rows."""
    diffs = trajs[neighbors] != trajs[:, None, :]
    return diffs.sum(axis=2).min(axis=1).astype(np.int64)


def mutate_rows(
    parents: np.ndarray,
    mask_u: np.ndarray,
    alt_u: np.ndarray,
    rate: float,
    action_max: int,
) -> np.ndarray:
    """Per-position resampling that always lands on a different action.

    A position mutates when mask_u < rate; the replacement is one of the
    ``action_max`` non-current values, picked by alt_u. action_max == 0 has
    no alternatives, so rows are returned unchanged.
    """
    out = parents.copy()
    if action_max == 0:
        return out
    mask = mask_u < rate
    alt = (alt_u * action_max).astype(np.int64)
    np.minimum(alt, action_max - 1, out=alt)
    alt += alt >= parents
    out[mask] = alt[mask]
    return out
