# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels; bit-identical twins of ``_kernels_py``.

All loops accumulate float64 values in the same order as the NumPy
fallback so that either backend reproduces the other exactly.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"


def batch_rewards(cnp.int64_t[:, :] actions, long target, double reward_base):
    cdef Py_ssize_t n = actions.shape[0]
    cdef Py_ssize_t length = actions.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double[:] ov = out
    cdef Py_ssize_t k, i
    cdef long s, d
    for k in range(n):
        s = 0
        for i in range(length):
            s += actions[k, i]
        d = s - target
        if d < 0:
            d = -d
        ov[k] = reward_base - <double> d
    return out


def sample_categorical(cnp.float64_t[:, :] cdf, cnp.float64_t[:, :] u):
    cdef Py_ssize_t n = u.shape[0]
    cdef Py_ssize_t length = u.shape[1]
    cdef Py_ssize_t k_actions = cdf.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = np.empty((n, length), dtype=np.int64)
    cdef cnp.int64_t[:, :] ov = out
    cdef Py_ssize_t k, i, j
    cdef double uv
    for k in range(n):
        for i in range(length):
            uv = u[k, i]
            j = 0
            while j < k_actions - 1 and uv >= cdf[i, j]:
                j += 1
            ov[k, i] = j
    return out


def policy_grad(
    cnp.float64_t[:, :] probs,
    cnp.int64_t[:, :] actions,
    cnp.float64_t[:] wbar,
    double wbar_total,
):
    cdef Py_ssize_t n = actions.shape[0]
    cdef Py_ssize_t length = probs.shape[0]
    cdef Py_ssize_t k_actions = probs.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] grad = np.zeros(
        (length, k_actions), dtype=np.float64
    )
    cdef double[:, :] gv = grad
    cdef Py_ssize_t k, i, a
    for k in range(n):
        for i in range(length):
            gv[i, actions[k, i]] += wbar[k]
    for i in range(length):
        for a in range(k_actions):
            gv[i, a] = gv[i, a] - wbar_total * probs[i, a]
    return grad


def min_hamming(cnp.int64_t[:, :] trajs, cnp.int64_t[:, :] neighbors):
    cdef Py_ssize_t n = trajs.shape[0]
    cdef Py_ssize_t length = trajs.shape[1]
    cdef Py_ssize_t m = neighbors.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[:] ov = out
    cdef Py_ssize_t k, j, i
    cdef long best, d
    cdef cnp.int64_t nb
    for k in range(n):
        best = length + 1
        for j in range(m):
            nb = neighbors[k, j]
            d = 0
            for i in range(length):
                if trajs[nb, i] != trajs[k, i]:
                    d += 1
            if d < best:
                best = d
        ov[k] = best
    return out


def mutate_rows(
    cnp.int64_t[:, :] parents,
    cnp.float64_t[:, :] mask_u,
    cnp.float64_t[:, :] alt_u,
    double rate,
    long action_max,
):
    cdef Py_ssize_t n = parents.shape[0]
    cdef Py_ssize_t length = parents.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = np.empty((n, length), dtype=np.int64)
    cdef cnp.int64_t[:, :] ov = out
    cdef Py_ssize_t k, i
    cdef long alt
    for k in range(n):
        for i in range(length):
            if action_max > 0 and mask_u[k, i] < rate:
                alt = <long> (alt_u[k, i] * action_max)
                if alt > action_max - 1:
                    alt = action_max - 1
                if alt >= parents[k, i]:
                    alt += 1
                ov[k, i] = alt
            else:
                ov[k, i] = parents[k, i]
    return out
