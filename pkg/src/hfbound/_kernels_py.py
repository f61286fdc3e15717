"""Pure-Python/numpy implementations of the enumeration kernels.

Every function here has a same-named twin in ``_ckernels.pyx``; the two are
checked against each other in the test suite.  Results are exact: sphere
counts use Python integers, so nothing here can overflow.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

_CHUNK = 256


def profile_dp(center, q):
    """Sphere sizes ``|H_r(center)|`` for ``r = 0..n`` via the last-symbol DP."""
    n = len(center)
    # cur[r][b]: words of the current prefix length ending in b at distance r.
    # The virtual empty prefix has one word at distance 0 and no last symbol.
    cur = [[0] * q for _ in range(n + 1)]
    tot = [1] + [0] * n
    for k in range(n):
        a = center[k]
        nxt = [[0] * q for _ in range(n + 1)]
        for r in range(k + 2):
            row = nxt[r]
            same = tot[r] - cur[r][a]
            row[a] = same
            if r:
                prev_tot = tot[r - 1]
                prev = cur[r - 1]
                for b in range(q):
                    if b != a:
                        row[b] = prev_tot - prev[b]
        cur = nxt
        tot = [sum(row) for row in cur]
    return tot


def profiles_all(words, q):
    """Row-wise :func:`profile_dp` over an ``(N, n)`` word matrix.

    Returns an ``(N, n+1)`` object array so entries stay exact integers.
    """
    words = np.asarray(words)
    N, n = words.shape
    out = np.empty((N, n + 1), dtype=object)
    for i in range(N):
        out[i, :] = profile_dp(words[i].tolist(), q)
    return out


def distance_histograms(centers, words):
    """``hist[i, r]`` = number of rows of ``words`` at Hamming distance r from ``centers[i]``."""
    centers = np.asarray(centers)
    words = np.asarray(words)
    M, n = centers.shape
    out = np.zeros((M, n + 1), dtype=np.int64)
    for lo in range(0, M, _CHUNK):
        block = centers[lo : lo + _CHUNK]
        dist = (block[:, None, :] != words[None, :, :]).sum(axis=2)
        for j in range(block.shape[0]):
            out[lo + j] = np.bincount(dist[j], minlength=n + 1)
    return out


def greedy_indices(words, d):
    """Scan rows in order, keeping each row at distance >= d from all kept rows."""
    words = np.asarray(words)
    N, n = words.shape
    kept = np.empty_like(words)
    idx = []
    m = 0
    for i in range(N):
        w = words[i]
        if m == 0 or int((kept[:m] != w).sum(axis=1).min()) >= d:
            kept[m] = w
            m += 1
            idx.append(i)
    return np.asarray(idx, dtype=np.int64)


def min_pairwise_distance(words):
    """Minimum distance over distinct row pairs; ``n + 1`` when fewer than two rows."""
    words = np.asarray(words)
    N, n = words.shape
    best = n + 1
    for i in range(N - 1):
        dist = (words[i + 1 :] != words[i]).sum(axis=1)
        best = min(best, int(dist.min()))
        if best == 0:
            break
    return best


def nearest_distances(words, code):
    """For each row of ``words``, its distance to the closest row of ``code``."""
    words = np.asarray(words)
    code = np.asarray(code)
    out = np.empty(words.shape[0], dtype=np.int64)
    for lo in range(0, words.shape[0], _CHUNK):
        block = words[lo : lo + _CHUNK]
        dist = (block[:, None, :] != code[None, :, :]).sum(axis=2)
        out[lo : lo + block.shape[0]] = dist.min(axis=1)
    return out
