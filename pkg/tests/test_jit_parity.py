"""Compiled kernels and their interpreted source give the same answers."""

import os
import subprocess
import sys

import numpy as np
import pytest

from zykov import kernels as K
from zykov._accel import JIT_ENABLED, python_impl
from conftest import random_graphs

needs_jit = pytest.mark.skipif(not JIT_ENABLED, reason="numba disabled")


@needs_jit
def test_splitting_kernels():
    for g in random_graphs(40, 7, seed=21):
        adj = K.adjacency_words(g.masks)
        full = np.uint64(g.full_mask())
        for strong in (False, True):
            a = K.all_splitting_masks(adj, g.n, full, strong)
            b = python_impl(K.all_splitting_masks)(adj, g.n, full, strong)
            assert list(a) == list(b)
            assert K.first_subset_without_splitting(adj, g.n, strong) == \
                python_impl(K.first_subset_without_splitting)(adj, g.n, strong)


@needs_jit
def test_sweep_small():
    for n in range(1, 6):
        assert tuple(K.sweep_triangle_free(n, False)) == tuple(python_impl(K.sweep_triangle_free)(n, False))


def test_jacobi_twins():
    rng = np.random.default_rng(4)
    for n in (3, 12, 30):
        m = rng.standard_normal((n, n))
        m = (m + m.T) / 2
        a = np.sort(K.jacobi_kernel(m.copy(), 1e-10, 100)[0])
        b = np.sort(K.jacobi_numpy(m.copy(), 1e-10, 100)[0])
        assert np.allclose(a, b, atol=1e-9)


def test_disabled_flag_runs_same_code():
    code = ("from zykov._accel import JIT_ENABLED; from zykov import recognize, gallery; "
            "print(JIT_ENABLED, recognize(gallery('F').graph).status)")
    env = dict(os.environ, ZYKOV_DISABLE_JIT="1")
    r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert r.stdout.split() == ["False", "non_member"]
