"""Exact chromatic number and maximum stable set for small graphs.

Both searches count branch nodes against a budget and return :class:`Unknown`
when it runs out, never a guessed value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits, mask_components

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Unknown:
    nodes: int

    def __bool__(self):
        return False


class BudgetExhausted(Exception):
    pass


class Counter:
    """Shared node counter; raises :class:`BudgetExhausted` past the limit."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExhausted


# -- coloring ----------------------------------------------------------------

def _greedy_clique(masks, scope):
    best = 0
    for v in iter_bits(scope):
        clique = 1 << v
        cand = masks[v] & scope
        while cand:
            # densest candidate first
            w = max(iter_bits(cand), key=lambda x: ((masks[x] & cand).bit_count(), -x))
            clique |= 1 << w
            cand &= masks[w]
        best = max(best, clique.bit_count())
    return best


def _dsatur_greedy(masks, order_scope):
    colors = {}
    verts = list(iter_bits(order_scope))
    while len(colors) < len(verts):
        v = max(
            (u for u in verts if u not in colors),
            key=lambda u: (len({colors[w] for w in iter_bits(masks[u]) if w in colors}), (masks[u] & order_scope).bit_count(), -u),
        )
        used = {colors[w] for w in iter_bits(masks[v]) if w in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return (max(colors.values()) + 1) if colors else 0


def _colorable(masks, scope, k, counter):
    verts = list(iter_bits(scope))
    classes = []  # mask per used color
    assigned = {}

    def pick():
        best, key = -1, None
        for u in verts:
            if u in assigned:
                continue
            nu = masks[u]
            sat = sum(1 for cl in classes if cl & nu)
            cand = (sat, (nu & scope).bit_count(), -u)
            if key is None or cand > key:
                best, key = u, cand
        return best

    def rec(left):
        counter.tick()
        if left == 0:
            return True
        v = pick()
        nv = masks[v]
        for i, cl in enumerate(classes):
            if not cl & nv:
                classes[i] = cl | (1 << v)
                assigned[v] = i
                if rec(left - 1):
                    return True
                classes[i] = cl
                del assigned[v]
        if len(classes) < k:
            classes.append(1 << v)
            assigned[v] = len(classes) - 1
            if rec(left - 1):
                return True
            classes.pop()
            del assigned[v]
        return False

    return rec(len(verts))


def exact_chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int | Unknown:
    if g.n == 0:
        return 0
    masks = g.masks
    counter = Counter(budget)
    best = 0
    try:
        for comp in mask_components(masks, g.full_mask()):
            lo = max(best, _greedy_clique(masks, comp))
            hi = _dsatur_greedy(masks, comp)
            k = lo
            while k < hi and not _colorable(masks, comp, k, counter):
                k += 1
            best = max(best, k)
    except BudgetExhausted:
        return Unknown(counter.used)
    return best


def is_k_colorable(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> bool | Unknown:
    masks = g.masks
    counter = Counter(budget)
    try:
        return all(_colorable(masks, comp, k, counter) for comp in mask_components(masks, g.full_mask()))
    except BudgetExhausted:
        return Unknown(counter.used)


# -- stable sets -------------------------------------------------------------

def _cycle_alternate(masks, comp):
    """Every other vertex along a component that is a cycle."""
    start = (comp & -comp).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = masks[cur] & comp
        if prev >= 0:
            nxt &= ~(1 << prev)
        nxt = (nxt & -nxt).bit_length() - 1
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    picked = 0
    for i in range(0, 2 * (len(order) // 2), 2):
        picked |= 1 << order[i]
    return picked


def _mis(masks, scope, counter, memo):
    if scope == 0:
        return 0
    hit = memo.get(scope)
    if hit is not None:
        return hit
    counter.tick()
    comps = mask_components(masks, scope)
    if len(comps) > 1:
        res = 0
        for c in comps:
            res |= _mis(masks, c, counter, memo)
        memo[scope] = res
        return res
    degs = [(((masks[v] & scope).bit_count()), v) for v in iter_bits(scope)]
    dmin, vmin = min(degs)
    if dmin <= 1:
        res = (1 << vmin) | _mis(masks, scope & ~(masks[vmin] | (1 << vmin)), counter, memo)
    else:
        dmax, vmax = max(degs, key=lambda t: (t[0], -t[1]))
        if dmax == 2:
            res = _cycle_alternate(masks, scope)
        else:
            take = (1 << vmax) | _mis(masks, scope & ~(masks[vmax] | (1 << vmax)), counter, memo)
            skip = _mis(masks, scope & ~(1 << vmax), counter, memo)
            res = take if take.bit_count() >= skip.bit_count() else skip
    memo[scope] = res
    return res


def exact_max_independent_set(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, frozenset[int]] | Unknown:
    counter = Counter(budget)
    try:
        res = _mis(g.masks, g.full_mask(), counter, {})
    except BudgetExhausted:
        return Unknown(counter.used)
    return res.bit_count(), frozenset(iter_bits(res))
