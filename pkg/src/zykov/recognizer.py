"""Zykov and Blanche Descartes membership by peeling splitting sets.

A graph is a member when it can be emptied by repeatedly removing a
non-empty (strongly) splitting stable set of what is left; when one state
of that process has none, the state itself is a non-membership witness.
The search branches over every splitting set of a state, because peeling
greedily is not known to be complete, and remembers each state it has
settled.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .exact import DEFAULT_BUDGET, BudgetExhausted, Counter
from .graph import Graph, induced_subgraph, iter_bits, mask_bipartition, mask_components, mask_is_forest, sorted_members, to_mask
from .splitting import STRONG, WEAK, SplitMode, Status, _Context, find_splitting, iter_splitting_masks, splitting_violation

MEMBER, NON_MEMBER, UNKNOWN = "member", "non_member", "unknown"


@dataclass(frozen=True)
class PeelCertificate:
    mode: SplitMode
    layers: tuple[frozenset[int], ...]

    def to_dict(self) -> dict:
        return {"mode": self.mode.value, "kind": "peel", "layers": [sorted(a) for a in self.layers]}


@dataclass(frozen=True)
class NonMembershipWitness:
    mode: SplitMode
    witness: frozenset[int]

    def to_dict(self) -> dict:
        return {"mode": self.mode.value, "kind": "non_membership", "witness": sorted(self.witness)}


@dataclass(frozen=True)
class Verdict:
    status: str
    mode: SplitMode
    certificate: PeelCertificate | None = None
    witness: NonMembershipWitness | None = None
    nodes: int = 0
    budget: int = DEFAULT_BUDGET

    @property
    def is_member(self) -> bool:
        return self.status == MEMBER

    def to_dict(self) -> dict:
        return {"verdict": self.status, "nodes": self.nodes}

    def proof(self) -> PeelCertificate | NonMembershipWitness | None:
        return self.certificate if self.status == MEMBER else self.witness


def certificate_to_json(cert: PeelCertificate | NonMembershipWitness) -> str:
    return json.dumps(cert.to_dict())


def certificate_from_json(text: str) -> PeelCertificate | NonMembershipWitness:
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("certificate must be a JSON object")
    try:
        mode = SplitMode.parse(obj["mode"])
        kind = obj["kind"]
        if kind == "peel":
            return PeelCertificate(mode, tuple(frozenset(int(v) for v in a) for a in obj["layers"]))
        if kind == "non_membership":
            return NonMembershipWitness(mode, frozenset(int(v) for v in obj["witness"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed certificate: {exc}") from None
    raise ValueError(f"unknown certificate kind {kind!r}")


# -- search ------------------------------------------------------------------

class _Failed(Exception):
    def __init__(self, witness: int):
        self.witness = witness


def _merge(into: list[int], layers: Sequence[int]):
    for i, a in enumerate(layers):
        if i < len(into):
            into[i] |= a
        else:
            into.append(a)


def _forest_strong_layers(masks, scope: int) -> list[int]:
    # in a forest any stable set at pairwise distance >= 3 is strongly
    # splitting; take maximal ones greedily in index order
    layers = []
    rest = scope
    while rest:
        layer = blocked = 0
        for v in iter_bits(rest):
            if not blocked >> v & 1:
                layer |= 1 << v
                near = masks[v] & rest
                for w in iter_bits(near):
                    near |= masks[w] & rest
                blocked |= near | (1 << v)
        layers.append(layer)
        rest &= ~layer
    return layers


class _Search:
    def __init__(self, g: Graph, mode: SplitMode, counter: Counter):
        self.ctx = _Context(g, mode, counter)
        self.masks = g.masks
        self.mode = mode
        self.counter = counter
        self.done: dict[int, list[int]] = {}
        self.failed: dict[int, int] = {}

    def solve(self, x: int) -> list[int]:
        """Layers peeling the connected state ``x``; raises :class:`_Failed`."""
        hit = self.done.get(x)
        if hit is not None:
            return hit
        bad = self.failed.get(x)
        if bad is not None:
            raise _Failed(bad)
        masks = self.masks
        if mask_is_forest(masks, x) and self.mode is STRONG:
            layers = _forest_strong_layers(masks, x)
        elif self.mode is WEAK and (sides := mask_bipartition(masks, x)) is not None:
            layers = [s for s in sides if s]
        else:
            layers = self._branch(x)
        self.done[x] = layers
        return layers

    def _branch(self, x: int) -> list[int]:
        first_fail = None
        for a in iter_splitting_masks(self.ctx, x, True):
            tail: list[int] = []
            try:
                for comp in mask_components(self.masks, x & ~a):
                    _merge(tail, self.solve(comp))
            except _Failed as exc:
                if first_fail is None:
                    first_fail = exc.witness
                continue
            return [a] + tail
        witness = x if first_fail is None else first_fail
        self.failed[x] = witness
        raise _Failed(witness)


def _recognize_component(args):
    g, mode, comp, budget = args
    counter = Counter(budget)
    search = _Search(g, mode, counter)
    try:
        return "ok", search.solve(comp), counter.used
    except _Failed as exc:
        return "fail", exc.witness, counter.used
    except BudgetExhausted:
        return "unknown", None, counter.used


def recognize(g: Graph, mode=WEAK, budget: int = DEFAULT_BUDGET, threads: int = 1) -> Verdict:
    """Decide membership, with a certificate either way.

    Components are peeled independently.  With ``threads > 1`` components
    run in a process pool, each with its own node budget, so ``nodes``
    (not the decided verdicts) can differ from a sequential run.
    """
    mode = SplitMode.parse(mode)
    comps = mask_components(g.masks, g.full_mask())
    layers: list[int] = []
    if threads > 1 and len(comps) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_recognize_component, [(g, mode, c, budget) for c in comps]))
        used = sum(r[2] for r in results)
        for status, payload, _ in results:
            if status == "fail":
                return Verdict(NON_MEMBER, mode, witness=NonMembershipWitness(mode, frozenset(iter_bits(payload))),
                               nodes=used, budget=budget)
        if any(r[0] == "unknown" for r in results):
            return Verdict(UNKNOWN, mode, nodes=used, budget=budget)
        for _, payload, _ in results:
            _merge(layers, payload)
    else:
        counter = Counter(budget)
        search = _Search(g, mode, counter)
        try:
            for comp in comps:
                _merge(layers, search.solve(comp))
        except _Failed as exc:
            w = NonMembershipWitness(mode, frozenset(iter_bits(exc.witness)))
            return Verdict(NON_MEMBER, mode, witness=w, nodes=counter.used, budget=budget)
        except BudgetExhausted:
            return Verdict(UNKNOWN, mode, nodes=counter.used, budget=budget)
        used = counter.used
    cert = PeelCertificate(mode, tuple(frozenset(iter_bits(a)) for a in layers))
    return Verdict(MEMBER, mode, certificate=cert, nodes=used, budget=budget)


def is_member(g: Graph, mode=WEAK, budget: int = DEFAULT_BUDGET) -> bool:
    """``recognize`` reduced to a boolean; raises if the budget runs out."""
    v = recognize(g, mode, budget)
    if v.status == UNKNOWN:
        raise BudgetExhausted(f"undecided after {v.nodes} nodes")
    return v.is_member


# -- verification ------------------------------------------------------------

def explain_peel(g: Graph, cert: PeelCertificate) -> str | None:
    """First violated clause of a peel certificate, or ``None`` if it holds."""
    full = g.full_mask()
    seen = 0
    for i, layer in enumerate(cert.layers, start=1):
        if not layer:
            return f"layer {i} is empty"
        a = to_mask(layer)
        if a & ~full:
            return f"layer {i} names a vertex outside 0..{g.n - 1}"
        if a & seen:
            return f"layer {i} repeats vertex {sorted_members(a & seen)[0]}"
        seen |= a
    if seen != full:
        return f"vertex {sorted_members(full & ~seen)[0]} is in no layer"
    remaining = full
    for i, layer in enumerate(cert.layers, start=1):
        why = splitting_violation(g, layer, cert.mode, scope=remaining)
        if why is not None:
            return f"layer {i}: {why}"
        remaining &= ~to_mask(layer)
    return None


def verify_peel(g: Graph, cert: PeelCertificate) -> bool:
    return explain_peel(g, cert) is None


def verify_non_membership(g: Graph, w: NonMembershipWitness, budget: int = DEFAULT_BUDGET) -> bool | Status:
    """``True`` iff ``G[W]`` has no non-empty splitting set.

    Returns :attr:`Status.BUDGET_EXCEEDED` when the search is cut off.
    """
    if not w.witness:
        return False
    if to_mask(w.witness) >> g.n:
        raise ValueError("witness names a vertex outside the graph")
    sub, _ = induced_subgraph(g, sorted(w.witness))
    out = find_splitting(sub, w.mode, True, budget)
    if out.status is Status.BUDGET_EXCEEDED:
        return out.status
    return out.status is Status.NONE_EXISTS


def verify(g: Graph, cert, budget: int = DEFAULT_BUDGET):
    if isinstance(cert, PeelCertificate):
        return verify_peel(g, cert)
    return verify_non_membership(g, cert, budget)


@dataclass(frozen=True)
class ConsistencyReport:
    strong: Verdict
    weak: Verdict

    @property
    def consistent(self) -> bool:
        """False only for the impossible pair strong member, weak non-member."""
        return not (self.strong.status == MEMBER and self.weak.status == NON_MEMBER)

    def to_dict(self) -> dict:
        return {"strong": self.strong.status, "weak": self.weak.status, "consistent": self.consistent}


def class_consistency(g: Graph, budget: int = DEFAULT_BUDGET) -> ConsistencyReport:
    return ConsistencyReport(recognize(g, STRONG, budget), recognize(g, WEAK, budget))
