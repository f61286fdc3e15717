"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``HFBOUND_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the
active implementation.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

_py = _kernels_py
_c = None
if os.environ.get("HFBOUND_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c
    except ImportError:  # extension not built
        _c = None

BACKEND = _c.BACKEND if _c is not None else _py.BACKEND

# Largest space the int64 kernels accept: every sphere count is at most |C_{q,n}|.
_INT64_SAFE = 2**62


def _fast(q: int, n: int):
    if _c is not None and q * (q - 1) ** (n - 1) < _INT64_SAFE and q < 256:
        return _c
    return _py


def hf_matrix(q: int, n: int) -> np.ndarray:
    """All HF words of length ``n`` as an ``(N, n)`` uint8 matrix, lexicographic rows."""
    if q > 256:
        raise ValueError("matrix form supports q <= 256")
    words = np.arange(q, dtype=np.uint8)[:, None]
    step = np.arange(q - 1, dtype=np.int64)
    for _ in range(n - 1):
        last = words[:, -1].astype(np.int64)
        # k-th symbol different from `last`, in increasing order
        nxt = step[None, :] + (step[None, :] >= last[:, None])
        words = np.concatenate(
            [np.repeat(words, q - 1, axis=0), nxt.reshape(-1, 1).astype(np.uint8)], axis=1
        )
    return words


def profile_dp(center, q: int) -> list[int]:
    n = len(center)
    return [int(v) for v in _fast(q, n).profile_dp(list(center), q)]


def profiles_all(words, q: int) -> list[list[int]]:
    words = np.asarray(words, dtype=np.uint8)
    if words.shape[0] == 0:
        return []
    return [[int(v) for v in row] for row in _fast(q, words.shape[1]).profiles_all(words, q)]


def profiles_array(words, q: int) -> np.ndarray:
    """Like :func:`profiles_all` but returns the raw kernel array (int64 or object)."""
    words = np.asarray(words, dtype=np.uint8)
    return _fast(q, words.shape[1]).profiles_all(words, q)


def distance_histograms(centers, words) -> np.ndarray:
    impl = _c or _py
    return impl.distance_histograms(np.asarray(centers, np.uint8), np.asarray(words, np.uint8))


def greedy_indices(words, d: int) -> np.ndarray:
    return (_c or _py).greedy_indices(np.asarray(words, np.uint8), d)


def min_pairwise_distance(words) -> int:
    return int((_c or _py).min_pairwise_distance(np.asarray(words, np.uint8)))


def nearest_distances(words, code) -> np.ndarray:
    return (_c or _py).nearest_distances(np.asarray(words, np.uint8), np.asarray(code, np.uint8))
