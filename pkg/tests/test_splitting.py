import itertools

import pytest
from hypothesis import given, settings, strategies as st

from zykov import generators, graph as G
from zykov.exact import BudgetExhausted
from zykov.splitting import (STRONG, WEAK, Conflict, SplitMode, Status, brute_force_splitting_sets, find_splitting,
                             is_splitting, is_stable_set, iter_splitting_sets, propagate, splitting_violation,
                             verify_stable_forest_partition)
from conftest import gallery_graphs, random_graphs


def test_stable_set_examples():
    assert is_stable_set(G.cycle(5), [])
    assert is_stable_set(G.cycle(5), [0, 2])
    assert not is_stable_set(G.complete(2), [0, 1])


def test_splitting_examples():
    c5, c4, c9 = G.cycle(5), G.cycle(4), G.cycle(9)
    assert not is_splitting(c5, [0], WEAK)
    assert is_splitting(c5, [0, 2], WEAK)
    assert is_splitting(c4, [0, 2], WEAK)
    assert not is_splitting(c4, [0, 2], STRONG)
    assert is_splitting(c9, [0, 3, 6], STRONG)


def test_empty_set_always_splits():
    for g in gallery_graphs().values():
        assert is_splitting(g, [], WEAK) and is_splitting(g, [], STRONG)


def test_violation_messages_name_the_clause():
    assert "not stable" in splitting_violation(G.cycle(4), [0, 1])
    assert "neighbors in the set" in splitting_violation(G.cycle(4), [0, 2], STRONG)
    assert "component" in splitting_violation(G.cycle(5), [0])


def test_subset_outside_graph():
    with pytest.raises(ValueError):
        is_splitting(G.cycle(4), [7])


def test_mode_parse():
    assert SplitMode.parse("zykov") is WEAK
    assert SplitMode.parse("bd") is STRONG
    with pytest.raises(ValueError):
        SplitMode.parse("medium")


def test_find_splitting_examples():
    assert find_splitting(generators.gallery("F").graph, WEAK).status is Status.NONE_EXISTS
    assert find_splitting(G.cycle(4), STRONG).status is Status.NONE_EXISTS
    for g in [G.cycle(6), G.complete_bipartite(2, 3), G.path(4), generators.gallery("petersen").graph]:
        if G.is_bipartite(g):
            out = find_splitting(g, WEAK)
            assert out.found and is_splitting(g, out.witness, WEAK)


def test_find_splitting_without_nonempty():
    out = find_splitting(G.complete(3), WEAK, require_nonempty=False)
    assert out.found and out.witness == frozenset()


def test_budget_reported():
    out = find_splitting(generators.gallery("tw2").graph, WEAK, budget=3)
    assert out.status is Status.BUDGET_EXCEEDED and out.witness is None
    with pytest.raises(BudgetExhausted):
        list(iter_splitting_sets(G.cycle(9), WEAK, budget=2))


@pytest.mark.parametrize("mode", [WEAK, STRONG])
def test_enumeration_matches_brute_force(mode):
    for g in random_graphs(150, 7, seed=3) + list(gallery_graphs().values()):
        if g.n > 12:
            continue
        brute = {s for s in brute_force_splitting_sets(g, mode) if s}
        found = list(iter_splitting_sets(g, mode))
        assert len(found) == len(set(found))
        assert set(found) == brute


def test_propagate_examples():
    h = generators.gallery("H")
    inn, out = propagate(h.graph, [h.vertex("a")])
    assert {h.vertex(r) for r in ("a", "a'", "a''", "a'''")} <= inn
    assert {h.vertex(r) for r in ("v", "v'", "v''")} <= out
    c5 = G.cycle(5)
    inn, out = propagate(c5, [0], [2])
    assert 3 in inn
    inn, out = propagate(c5, [0], probe=False)
    assert inn == {0}
    assert isinstance(propagate(c5, [0, 1]), Conflict)
    assert isinstance(propagate(c5, [0], [0]), Conflict)


@pytest.mark.parametrize("probe", [False, True])
def test_propagate_is_sound(probe):
    # every splitting set compatible with the input stays compatible with the output
    for g in random_graphs(60, 6, seed=9):
        sets = brute_force_splitting_sets(g, WEAK)
        for i, o in itertools.product(range(g.n), range(g.n)):
            if i == o:
                continue
            res = propagate(g, [i], [o], WEAK, probe)
            fits = [s for s in sets if i in s and o not in s]
            if isinstance(res, Conflict):
                assert not fits
            else:
                inn, out = res
                assert all(inn <= s and not (out & s) for s in fits)


def test_stable_forest_examples():
    c5 = G.cycle(5)
    assert verify_stable_forest_partition(c5, [0, 2])
    assert not verify_stable_forest_partition(c5, [0])
    assert not verify_stable_forest_partition(G.complete(3), [0])


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 7))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return G.Graph(n, chosen)


@settings(max_examples=150, deadline=None)
@given(small_graphs(), st.sampled_from([WEAK, STRONG]))
def test_found_sets_verify(g, mode):
    out = find_splitting(g, mode)
    brute = any(s for s in brute_force_splitting_sets(g, mode))
    assert out.found == brute
    if out.found:
        assert out.witness and is_splitting(g, out.witness, mode)
