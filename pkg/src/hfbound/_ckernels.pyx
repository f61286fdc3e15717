# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same interface as ``_kernels_py``.  Sphere counts are accumulated in int64,
so callers must only route spaces with ``q*(q-1)**(n-1) < 2**62`` here
(``kernels.py`` enforces that and falls back to exact Python ints above it).
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef cnp.int64_t i64
ctypedef cnp.uint8_t u8

BACKEND = "cython"


cdef void _dp_row(const u8* center, int n, int q, i64* cur, i64* nxt, i64* tot, i64* out) noexcept nogil:
    # cur/nxt are (n+1) x q, row-major; tot and out have n+1 entries.
    cdef int k, r, b, a
    cdef i64 same, prev_tot
    memset(cur, 0, (n + 1) * q * sizeof(i64))
    memset(tot, 0, (n + 1) * sizeof(i64))
    tot[0] = 1
    for k in range(n):
        a = center[k]
        memset(nxt, 0, (n + 1) * q * sizeof(i64))
        for r in range(k + 2):
            nxt[r * q + a] = tot[r] - cur[r * q + a]
            if r > 0:
                prev_tot = tot[r - 1]
                for b in range(q):
                    if b != a:
                        nxt[r * q + b] = prev_tot - cur[(r - 1) * q + b]
        for r in range(k + 2):
            same = 0
            for b in range(q):
                same += nxt[r * q + b]
            tot[r] = same
        cur, nxt = nxt, cur
    for r in range(n + 1):
        out[r] = tot[r]


def profile_dp(center, int q):
    cdef u8[:] c = np.ascontiguousarray(center, dtype=np.uint8)
    return profiles_all(np.asarray(c)[None, :], q)[0].tolist()


def profiles_all(words, int q):
    cdef const u8[:, :] w = np.ascontiguousarray(words, dtype=np.uint8)
    cdef Py_ssize_t N = w.shape[0], i
    cdef int n = w.shape[1]
    out_arr = np.zeros((N, n + 1), dtype=np.int64)
    cdef i64[:, :] out = out_arr
    cdef i64* cur = <i64*> malloc((n + 1) * q * sizeof(i64))
    cdef i64* nxt = <i64*> malloc((n + 1) * q * sizeof(i64))
    cdef i64* tot = <i64*> malloc((n + 1) * sizeof(i64))
    if cur == NULL or nxt == NULL or tot == NULL:
        free(cur); free(nxt); free(tot)
        raise MemoryError()
    try:
        with nogil:
            for i in range(N):
                _dp_row(&w[i, 0], n, q, cur, nxt, tot, &out[i, 0])
    finally:
        free(cur); free(nxt); free(tot)
    return out_arr


def distance_histograms(centers, words):
    cdef const u8[:, :] c = np.ascontiguousarray(centers, dtype=np.uint8)
    cdef const u8[:, :] w = np.ascontiguousarray(words, dtype=np.uint8)
    cdef Py_ssize_t M = c.shape[0], N = w.shape[0], i, j
    cdef int n = c.shape[1], k, dist
    out_arr = np.zeros((M, n + 1), dtype=np.int64)
    cdef i64[:, :] out = out_arr
    with nogil:
        for i in range(M):
            for j in range(N):
                dist = 0
                for k in range(n):
                    if c[i, k] != w[j, k]:
                        dist += 1
                out[i, dist] += 1
    return out_arr


def greedy_indices(words, int d):
    cdef const u8[:, :] w = np.ascontiguousarray(words, dtype=np.uint8)
    cdef Py_ssize_t N = w.shape[0], i, j, m = 0
    cdef int n = w.shape[1], k, dist
    cdef bint ok
    kept_arr = np.empty(N, dtype=np.int64)
    cdef i64[:] kept = kept_arr
    with nogil:
        for i in range(N):
            ok = True
            for j in range(m):
                dist = 0
                for k in range(n):
                    if w[i, k] != w[kept[j], k]:
                        dist += 1
                if dist < d:
                    ok = False
                    break
            if ok:
                kept[m] = i
                m += 1
    return kept_arr[:m].copy()


def min_pairwise_distance(words):
    cdef const u8[:, :] w = np.ascontiguousarray(words, dtype=np.uint8)
    cdef Py_ssize_t N = w.shape[0], i, j
    cdef int n = w.shape[1], k, dist, best = n + 1
    with nogil:
        for i in range(N):
            for j in range(i + 1, N):
                dist = 0
                for k in range(n):
                    if w[i, k] != w[j, k]:
                        dist += 1
                if dist < best:
                    best = dist
    return best


def nearest_distances(words, code):
    cdef const u8[:, :] w = np.ascontiguousarray(words, dtype=np.uint8)
    cdef const u8[:, :] c = np.ascontiguousarray(code, dtype=np.uint8)
    cdef Py_ssize_t N = w.shape[0], M = c.shape[0], i, j
    cdef int n = w.shape[1], k, dist, best
    out_arr = np.empty(N, dtype=np.int64)
    cdef i64[:] out = out_arr
    with nogil:
        for i in range(N):
            best = n + 1
            for j in range(M):
                dist = 0
                for k in range(n):
                    if w[i, k] != c[j, k]:
                        dist += 1
                if dist < best:
                    best = dist
            out[i] = best
    return out_arr
