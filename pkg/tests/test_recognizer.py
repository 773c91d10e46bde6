import json

import pytest

from zykov import generators, graph as G
from zykov.exact import BudgetExhausted
from zykov.recognizer import (MEMBER, NON_MEMBER, UNKNOWN, NonMembershipWitness, PeelCertificate, certificate_from_json,
                              certificate_to_json, class_consistency, explain_peel, is_member, recognize,
                              verify_non_membership, verify_peel)
from zykov.splitting import STRONG, WEAK, Status
from conftest import corpus, random_graphs


def _named(name):
    return generators.gallery(name).graph


@pytest.mark.parametrize("name, mode, want", [
    ("F_prime", WEAK, NON_MEMBER),
    ("F", WEAK, NON_MEMBER),
    ("tw2", WEAK, NON_MEMBER),
    ("H", STRONG, NON_MEMBER),
    ("petersen", WEAK, MEMBER),  # peel re-verified in the soundness sweep
])
def test_named_verdicts(name, mode, want):
    assert recognize(_named(name), mode).status == want


def test_cycles():
    assert recognize(G.cycle(9), STRONG).status == MEMBER
    assert recognize(G.cycle(4), STRONG).status == NON_MEMBER
    assert recognize(G.cycle(4), WEAK).status == MEMBER
    assert recognize(G.subdivide(G.complete(4), 1), STRONG).status == NON_MEMBER


def test_c9_certificate_is_the_layered_one():
    v = recognize(G.cycle(9), STRONG)
    assert [sorted(a) for a in v.certificate.layers] == [[0, 3, 6], [1, 4, 7], [2, 5, 8]]


def test_peel_verification():
    c9 = G.cycle(9)
    good = PeelCertificate(STRONG, (frozenset({0, 3, 6}), frozenset({1, 4, 7}), frozenset({2, 5, 8})))
    assert verify_peel(c9, good)
    missing = PeelCertificate(STRONG, good.layers[:2])
    assert "no layer" in explain_peel(c9, missing)
    adjacent = PeelCertificate(WEAK, (frozenset({0, 1}),) + good.layers[1:])
    assert not verify_peel(c9, adjacent)
    assert "empty" in explain_peel(c9, PeelCertificate(WEAK, (frozenset(),) + good.layers))


def test_non_membership_verification():
    f = _named("F")
    assert verify_non_membership(f, NonMembershipWitness(WEAK, frozenset(range(f.n)))) is True
    assert verify_non_membership(G.cycle(5), NonMembershipWitness(WEAK, frozenset(range(5)))) is False
    assert verify_non_membership(G.cycle(4), NonMembershipWitness(STRONG, frozenset(range(4)))) is True
    tw2 = _named("tw2")
    res = verify_non_membership(tw2, NonMembershipWitness(WEAK, frozenset(range(tw2.n))), budget=2)
    assert res is Status.BUDGET_EXCEEDED


def test_consistency_examples():
    assert class_consistency(G.cycle(9)).to_dict() == {"strong": MEMBER, "weak": MEMBER, "consistent": True}
    assert class_consistency(G.cycle(4)).to_dict() == {"strong": NON_MEMBER, "weak": MEMBER, "consistent": True}
    assert class_consistency(_named("F")).to_dict() == {"strong": NON_MEMBER, "weak": NON_MEMBER, "consistent": True}


@pytest.mark.parametrize("mode", [WEAK, STRONG])
def test_soundness_round_trip(mode):
    for name, g in corpus().items():
        if g.n > 20:
            continue
        v = recognize(g, mode)
        assert v.status in (MEMBER, NON_MEMBER), name
        if v.status == MEMBER:
            assert verify_peel(g, v.certificate), name
        else:
            assert verify_non_membership(g, v.witness) is True, name


def test_component_law():
    parts = [G.cycle(5), G.cycle(4), G.path(3)]
    u = G.disjoint_union(*parts)
    for mode in (WEAK, STRONG):
        want = all(recognize(p, mode).is_member for p in parts)
        assert recognize(u, mode).is_member == want


def test_zykov_stage_layers_peel():
    for k in range(1, 6):
        lg = generators.zykov(k)
        cert = PeelCertificate(WEAK, tuple(frozenset(a) for a in lg.layers()))
        assert verify_peel(lg.graph, cert), k


def test_threads_agree():
    g = G.disjoint_union(G.cycle(9), G.cycle(7), G.path(4))
    a = recognize(g, STRONG)
    b = recognize(g, STRONG, threads=2)
    assert a.status == b.status
    assert verify_peel(g, b.certificate)


def test_unknown_on_budget():
    v = recognize(_named("tw2"), WEAK, budget=2)
    assert v.status == UNKNOWN and v.proof() is None
    with pytest.raises(BudgetExhausted):
        is_member(_named("tw2"), WEAK, budget=2)


def test_certificate_json():
    v = recognize(G.cycle(9), STRONG)
    text = certificate_to_json(v.certificate)
    assert text == '{"mode": "strong", "kind": "peel", "layers": [[0, 3, 6], [1, 4, 7], [2, 5, 8]]}'
    assert certificate_from_json(text) == v.certificate
    w = recognize(G.cycle(4), STRONG).witness
    assert json.loads(certificate_to_json(w)) == {"mode": "strong", "kind": "non_membership", "witness": [0, 1, 2, 3]}
    for bad in ('[]', '{"mode": "weak", "kind": "other"}', '{"kind": "peel"}'):
        with pytest.raises(ValueError):
            certificate_from_json(bad)


def test_f_prime_subgraphs_are_members():
    g = _named("F_prime")
    for v in range(g.n):
        sub, _ = G.induced_subgraph(g, [u for u in range(g.n) if u != v])
        assert recognize(sub, WEAK).is_member


def test_random_strong_implies_weak():
    for g in random_graphs(100, 8, seed=77):
        r = class_consistency(g)
        assert r.consistent
