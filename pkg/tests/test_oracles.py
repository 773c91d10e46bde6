"""The oracles themselves, checked against a plain reading of the definition."""

import itertools

import numpy as np
import pytest

from zykov import kernels as K
from zykov import graph as G
from conftest import random_graphs
from oracles import all_3cnf, definitional_splitting, oracle_nonempty_splitting, truth_table_sat


@pytest.mark.parametrize("strong", [False, True])
def test_kernel_matches_definition(strong):
    for g in random_graphs(80, 6, seed=11):
        adj = K.adjacency_words(g.masks)
        full = np.uint64(g.full_mask())
        for a in range(1 << g.n):
            want = definitional_splitting(g.n, g.edge_list(), G.iter_bits(a), strong)
            got = bool(K.splitting_ok(adj, g.n, full, np.uint64(a), strong))
            assert got == want, (g.edge_list(), a)


@pytest.mark.parametrize("strong", [False, True])
def test_dfs_oracle_matches_definition(strong):
    for g in random_graphs(80, 7, seed=12):
        exists = any(definitional_splitting(g.n, g.edge_list(), G.iter_bits(a), strong)
                     for a in range(1, 1 << g.n))
        found = oracle_nonempty_splitting(g, strong)
        assert (found is not None) == exists
        if found:
            assert definitional_splitting(g.n, g.edge_list(), found, strong)


def test_hand_examples():
    c5 = G.cycle(5).edge_list()
    assert definitional_splitting(5, c5, [0, 2])
    # removing one vertex leaves a path that sees it twice
    assert not definitional_splitting(5, c5, [0])
    assert not definitional_splitting(5, c5, [0, 1])
    c4 = G.cycle(4).edge_list()
    assert definitional_splitting(4, c4, [0, 2])
    assert not definitional_splitting(4, c4, [0, 2], strong=True)


def test_cnf_enumeration_counts():
    insts = list(all_3cnf())
    # n=1: 4 triples, n=2: 20; m in {1, 2}
    assert len(insts) == (4 + 16) + (20 + 400)
    assert sum(not truth_table_sat(i) for i in insts) == 6


def test_truth_table_small():
    from zykov.reductions import CnfInstance
    x = CnfInstance.from_ints(1, [[1, 1, 1], [-1, -1, -1]])
    assert not truth_table_sat(x)
    assert truth_table_sat(CnfInstance.from_ints(2, [[1, 2, 2], [-1, -1, 2]]))
    assert sum(1 for _ in itertools.product((0, 1), repeat=3)) == 8
