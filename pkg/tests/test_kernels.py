"""Backend parity: the compiled kernels must agree with the pure-Python ones."""

import os
import subprocess
import sys

import numpy as np
import pytest

from hfbound import _kernels_py as py
from hfbound import kernels

cy = pytest.importorskip("hfbound._ckernels")


@pytest.mark.parametrize("q,n", [(3, 6), (4, 6), (5, 4), (7, 3)])
def test_profiles_parity(q, n):
    words = kernels.hf_matrix(q, n)
    assert np.array_equal(np.asarray(cy.profiles_all(words, q)).astype(object), py.profiles_all(words, q))


@pytest.mark.parametrize("q,n", [(3, 6), (4, 5)])
def test_distance_kernel_parity(q, n):
    words = kernels.hf_matrix(q, n)
    centers = words[::7]
    assert np.array_equal(cy.distance_histograms(centers, words), py.distance_histograms(centers, words))
    assert cy.min_pairwise_distance(centers) == py.min_pairwise_distance(centers)
    assert np.array_equal(cy.nearest_distances(words, centers), py.nearest_distances(words, centers))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_greedy_parity(d):
    words = kernels.hf_matrix(4, 5)
    assert list(cy.greedy_indices(words, d)) == list(py.greedy_indices(words, d))


def test_hf_matrix_lexicographic():
    m = kernels.hf_matrix(3, 3).tolist()
    assert m == sorted(m) and len(m) == 12
    assert all(a != b for row in m for a, b in zip(row, row[1:]))


def test_env_forces_fallback():
    env = dict(os.environ, HFBOUND_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from hfbound import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
