import itertools

import pytest

from zykov import graph as G
from zykov.exact import exact_max_independent_set, is_k_colorable
from zykov.reductions import (AssignmentError, CnfFormatError, CnfInstance, assignment_to_splitting_set,
                              coloring_reduction, mis_reduction, parse_dimacs_cnf, sat_to_bd, sat_to_bd_size,
                              sat_to_zykov, satisfiable, splitting_set_to_assignment, unequality_gadget,
                              unequality_gadget_size, verify_stable_forest)
from zykov.splitting import STRONG, WEAK, Status, find_splitting, is_splitting, verify_stable_forest_partition
from conftest import random_graphs

X = CnfInstance.from_ints(1, [[1, 1, 1]])
X_NOT_X = CnfInstance.from_ints(1, [[1, 1, 1], [-1, -1, -1]])


def test_parse_cnf():
    inst = parse_dimacs_cnf("c hi\np cnf 2 2\n1 -2 2 0\n-1 -1 2 0\n")
    assert inst == CnfInstance.from_ints(2, [[1, -2, 2], [-1, -1, 2]])
    assert parse_dimacs_cnf(inst.to_dimacs()) == inst


@pytest.mark.parametrize("text", [
    "p cnf 1 1\n1 1 0\n",
    "p cnf 1 1\n1 1 1 1 0\n",
    "1 1 1 0\n",
    "p cnf 1 2\n1 1 1 0\n",
    "p cnf 1 1\n2 1 1 0\n",
    "p cnf 1 1\n1 1 1\n",
])
def test_parse_cnf_errors(text):
    with pytest.raises(CnfFormatError):
        parse_dimacs_cnf(text)


def test_zykov_gadget_shape():
    g = sat_to_zykov(X)
    assert g.graph.n == 33
    assert G.is_triangle_free(g.graph)
    inst = CnfInstance.from_ints(2, [[1, -2, 2], [-1, 1, 2]])
    assert sat_to_zykov(inst).graph.n == 7 + 5 * 2 + 21 * 2


def test_zykov_small_equivalence_examples():
    assert find_splitting(sat_to_zykov(X).graph, WEAK).found
    assert find_splitting(sat_to_zykov(X_NOT_X).graph, WEAK).status is Status.NONE_EXISTS


def test_zykov_assignment_set():
    gg = sat_to_zykov(X)
    s = assignment_to_splitting_set(X, (True,), "zykov", gg)
    assert is_splitting(gg.graph, s, WEAK)
    assert verify_stable_forest_partition(gg.graph, s)
    assert splitting_set_to_assignment(gg, s) == (True,)


def test_zykov_literal_recipe_breaks_with_two_true_positions():
    inst = CnfInstance.from_ints(1, [[1, -1, 1]])
    gg = sat_to_zykov(inst)
    lit = assignment_to_splitting_set(inst, (True,), "zykov", gg, literal=True)
    assert not is_splitting(gg.graph, lit, WEAK)
    fixed = assignment_to_splitting_set(inst, (True,), "zykov", gg)
    assert is_splitting(gg.graph, fixed, WEAK)


def test_zykov_uncuttable_clause_raises():
    # true positions {1, 2} leave the clause cycle with no clean cut
    inst = CnfInstance.from_ints(1, [[1, 1, -1]])
    assert satisfiable(inst)
    with pytest.raises(AssignmentError):
        assignment_to_splitting_set(inst, (True,), "zykov")


def test_bad_assignment_raises():
    with pytest.raises(AssignmentError):
        assignment_to_splitting_set(X, (False,), "zykov")
    with pytest.raises(AssignmentError):
        assignment_to_splitting_set(X, (True, True), "zykov")
    with pytest.raises(ValueError):
        assignment_to_splitting_set(X, (True,), "mycielski")


def test_set_to_assignment_rejects():
    gg = sat_to_zykov(X)
    with pytest.raises(AssignmentError):
        splitting_set_to_assignment(gg, [])
    with pytest.raises(AssignmentError):
        splitting_set_to_assignment(gg, [gg.vertex("t_1"), gg.vertex("b_1,1")])


def test_bd_gadget_shape():
    g = sat_to_bd(X)
    assert g.graph.n == sat_to_bd_size(1, 1) == 281
    assert G.is_triangle_free(g.graph)
    s = assignment_to_splitting_set(X, (True,), "bd", g)
    assert is_splitting(g.graph, s, STRONG)
    assert verify_stable_forest(g.graph, s)
    assert splitting_set_to_assignment(g, s) == (True,)
    assert not s & g.colored(G.Color.RED)
    assert g.colored(G.Color.GREEN) <= s


def test_bd_text_wiring_differs():
    inst = CnfInstance.from_ints(1, [[-1, -1, -1]])
    sym, text = sat_to_bd(inst, "symmetric"), sat_to_bd(inst, "text")
    assert sym.graph.n == text.graph.n and sym.graph != text.graph
    s = assignment_to_splitting_set(inst, (False,), "bd", sym)
    assert is_splitting(sym.graph, s, STRONG)


def test_mis_reduction():
    for g in [G.complete(3), G.cycle(5)] + random_graphs(20, 5, seed=4):
        h, bound = mis_reduction(g, 1)
        assert bound == 1 + 2 * g.m
        assert exact_max_independent_set(h)[0] == exact_max_independent_set(g)[0] + 2 * g.m
    assert exact_max_independent_set(G.subdivide(G.complete(3), 4))[0] == 7


def _proper_2colorings(g):
    for col in itertools.product((0, 1), repeat=g.n):
        if all(col[u] != col[v] for u, v in g.edge_list()):
            yield col


def test_ug2_exhaustive():
    gg = unequality_gadget(2)
    a, b = gg.meta["ports"]
    assert gg.graph.n == 9 and gg.vertex("a") == a and gg.vertex("b") == b
    cols = list(_proper_2colorings(gg.graph))
    assert cols and all(c[a] != c[b] for c in cols)


def test_ug_sizes():
    assert unequality_gadget_size(3) == (352735, 705431)
    assert unequality_gadget_size(2) == (9, 8)
    g = unequality_gadget(2).graph
    assert (g.n, g.m) == unequality_gadget_size(2)


def test_coloring_reduction_c2():
    for g in random_graphs(60, 5, seed=8):
        h = coloring_reduction(g, 2)
        assert G.is_bipartite(h) == G.is_bipartite(g)
    assert coloring_reduction(G.complete(3), 2).n == 3 + 3 * 7
    with pytest.raises(ValueError):
        coloring_reduction(G.complete(3), 4)


def test_coloring_reduction_c3_size():
    h = coloring_reduction(G.Graph(2, [(0, 1)]), 3)
    assert h.n == unequality_gadget_size(3)[0]
    assert h.m == unequality_gadget_size(3)[1]
