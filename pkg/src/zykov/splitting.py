"""Splitting and strongly splitting stable sets.

A stable set ``A`` is splitting when every vertex of ``A`` has at most one
neighbor in each connected component of ``G - A``; it is strongly splitting
when, in addition, every vertex outside ``A`` has at most one neighbor in
``A``.

The search assigns vertices to ``in`` or ``out`` in increasing index order,
``in`` first, and closes every partial assignment under :func:`propagate`'s
rules.  The closure is sound but incomplete; completeness comes from
branching.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from . import kernels
from .exact import DEFAULT_BUDGET, BudgetExhausted, Counter
from .graph import Graph, from_mask, iter_bits, mask_components, mask_is_forest, to_mask


class SplitMode(enum.Enum):
    WEAK = "weak"
    STRONG = "strong"

    @classmethod
    def parse(cls, value) -> "SplitMode":
        if isinstance(value, cls):
            return value
        key = str(value).lower()
        aliases = {"weak": cls.WEAK, "zykov": cls.WEAK, "strong": cls.STRONG, "bd": cls.STRONG}
        if key not in aliases:
            raise ValueError(f"unknown split mode {value!r}")
        return aliases[key]


WEAK = SplitMode.WEAK
STRONG = SplitMode.STRONG


class Status(enum.Enum):
    FOUND = "found"
    NONE_EXISTS = "none_exists"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    witness: frozenset[int] | None
    nodes_explored: int
    budget: int

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


class Conflict(NamedTuple):
    reason: str


def _check_subset(g: Graph, mask: int):
    if mask >> g.n:
        raise ValueError(f"vertex set exceeds graph with n={g.n}")


# -- verifiers ---------------------------------------------------------------

def is_stable_set(g: Graph, a: Iterable[int] | int) -> bool:
    amask = to_mask(a)
    _check_subset(g, amask)
    masks = g.masks
    return all(not masks[v] & amask for v in iter_bits(amask))


def splitting_violation(g: Graph, a, mode=WEAK, scope: int | None = None) -> str | None:
    """First violated clause of the splitting definition, or ``None``."""
    mode = SplitMode.parse(mode)
    amask = to_mask(a)
    masks = g.masks
    scope = g.full_mask() if scope is None else scope
    if amask & ~scope:
        return "set is not inside the vertex set"
    for v in iter_bits(amask):
        hit = masks[v] & amask
        if hit:
            w = (hit & -hit).bit_length() - 1
            return f"not stable: {min(v, w)}-{max(v, w)} is an edge"
    rest = scope & ~amask
    if mode is STRONG:
        for u in iter_bits(rest):
            if (masks[u] & amask).bit_count() > 1:
                return f"vertex {u} has {(masks[u] & amask).bit_count()} neighbors in the set"
    for comp in mask_components(masks, rest):
        for v in iter_bits(amask):
            k = (masks[v] & comp).bit_count()
            if k > 1:
                return f"vertex {v} has {k} neighbors in the component containing {(comp & -comp).bit_length() - 1}"
    return None


def is_splitting(g: Graph, a, mode=WEAK) -> bool:
    _check_subset(g, to_mask(a))
    return splitting_violation(g, a, mode) is None


def verify_stable_forest_partition(g: Graph, a) -> bool:
    """Stable set plus forest, each set vertex seeing each tree at most once."""
    amask = to_mask(a)
    _check_subset(g, amask)
    if not is_stable_set(g, amask):
        return False
    rest = g.full_mask() & ~amask
    if not mask_is_forest(g.masks, rest):
        return False
    return splitting_violation(g, amask, WEAK) is None


# -- propagation -------------------------------------------------------------

class _Context:
    """Per-graph data shared by propagation and search."""

    __slots__ = ("masks", "zone", "strong", "counter")

    def __init__(self, g: Graph, mode: SplitMode, counter: Counter | None = None):
        masks = g.masks
        self.masks = masks
        self.strong = mode is STRONG
        if self.strong:
            zone = []
            for v in range(g.n):
                z = masks[v]
                for w in iter_bits(masks[v]):
                    z |= masks[w]
                zone.append(z & ~(1 << v))
            self.zone = zone
        else:
            self.zone = masks
        self.counter = counter or Counter(DEFAULT_BUDGET)


def _close(ctx: _Context, scope: int, inn: int, out: int):
    """Fixpoint of the propagation rules; ``None`` on conflict.

    Rules: vertices next to ``in`` (within distance 2 in strong mode) go
    ``out``; an ``in`` vertex may not see two vertices of one ``out``
    component; an undecided vertex whose exclusion would merge two
    neighbors of an ``in`` vertex into one ``out`` component goes ``in``.
    """
    masks, zone = ctx.masks, ctx.zone
    pending = inn
    while True:
        for v in iter_bits(pending):
            z = zone[v] & scope
            if z & inn:
                return None
            out |= z
        if inn & out:
            return None
        comps = mask_components(masks, out)
        ins = list(iter_bits(inn))
        for a in ins:
            na = masks[a]
            for c in comps:
                if (na & c).bit_count() > 1:
                    return None
        und = scope & ~inn & ~out
        if not ins or not und:
            return inn, out
        forced = 0
        for w in iter_bits(und):
            nw = masks[w]
            merged = 1 << w
            for c in comps:
                if c & nw:
                    merged |= c
            for a in ins:
                if (masks[a] & merged).bit_count() > 1:
                    forced |= 1 << w
                    break
        if not forced:
            return inn, out
        inn |= forced
        pending = forced


def _probe(ctx: _Context, scope: int, inn: int, out: int):
    """Failed-literal probing on top of :func:`_close`."""
    state = _close(ctx, scope, inn, out)
    changed = True
    while state is not None and changed:
        changed = False
        inn, out = state
        for w in iter_bits(scope & ~inn & ~out):
            b = 1 << w
            if inn & b or out & b:
                continue
            if _close(ctx, scope, inn | b, out) is None:
                state = _close(ctx, scope, inn, out | b)
            elif _close(ctx, scope, inn, out | b) is None:
                state = _close(ctx, scope, inn | b, out)
            else:
                continue
            if state is None:
                return None
            inn, out = state
            changed = True
    return state


def propagate(g: Graph, forced_in, forced_out=(), mode=WEAK, probe: bool = True):
    """Sound refinement of a partial assignment.

    Returns ``(in, out)`` as frozensets, or a :class:`Conflict` when no
    splitting set of the given mode extends the assignment.  With ``probe``
    each undecided vertex is tried both ways and a side that closes to a
    conflict is ruled out.
    """
    mode = SplitMode.parse(mode)
    inn, out = to_mask(forced_in), to_mask(forced_out)
    _check_subset(g, inn | out)
    if inn & out:
        return Conflict("a vertex is both forced in and forced out")
    ctx = _Context(g, mode)
    closer = _probe if probe else _close
    state = closer(ctx, g.full_mask(), inn, out)
    if state is None:
        return Conflict("propagation reached a contradiction")
    return from_mask(state[0]), from_mask(state[1])


# -- search ------------------------------------------------------------------

def _dfs(ctx: _Context, scope: int, inn: int, out: int, nonempty: bool) -> Iterator[int]:
    ctx.counter.tick()
    state = _close(ctx, scope, inn, out)
    if state is None:
        return
    inn, out = state
    und = scope & ~inn & ~out
    if not und:
        if inn or not nonempty:
            yield inn
        return
    b = und & -und
    yield from _dfs(ctx, scope, inn | b, out, nonempty)
    yield from _dfs(ctx, scope, inn, out | b, nonempty)


def iter_splitting_masks(ctx: _Context, scope: int, nonempty: bool = True) -> Iterator[int]:
    """Splitting sets of ``G[scope]`` as masks.

    Order: membership vectors read from the smallest vertex, ``in`` before
    ``out`` (so ``{0, 1}`` precedes ``{0}``, which precedes ``{1}``).
    """
    return _dfs(ctx, scope, 0, 0, nonempty)


def iter_splitting_sets(g: Graph, mode=WEAK, nonempty: bool = True, budget: int = DEFAULT_BUDGET) -> Iterator[frozenset[int]]:
    """Every (non-empty) splitting set of ``g``, in search order.

    Raises :class:`~zykov.exact.BudgetExhausted` if the budget runs out.
    """
    ctx = _Context(g, SplitMode.parse(mode), Counter(budget))
    for m in iter_splitting_masks(ctx, g.full_mask(), nonempty):
        yield from_mask(m)


def find_splitting(g: Graph, mode=WEAK, require_nonempty: bool = True, budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Search for a (non-empty) splitting stable set, one component at a time."""
    mode = SplitMode.parse(mode)
    counter = Counter(budget)
    if not require_nonempty:
        return SearchOutcome(Status.FOUND, frozenset(), 0, budget)
    ctx = _Context(g, mode, counter)
    try:
        for comp in mask_components(g.masks, g.full_mask()):
            for m in iter_splitting_masks(ctx, comp, True):
                return SearchOutcome(Status.FOUND, from_mask(m), counter.used, budget)
    except BudgetExhausted:
        return SearchOutcome(Status.BUDGET_EXCEEDED, None, counter.used, budget)
    return SearchOutcome(Status.NONE_EXISTS, None, counter.used, budget)


# -- brute force -------------------------------------------------------------

def brute_force_splitting_sets(g: Graph, mode=WEAK) -> list[frozenset[int]]:
    """All splitting sets (empty one included) by checking every subset.

    Runs on the bitmask kernel, so ``g`` may have at most 63 vertices.
    """
    mode = SplitMode.parse(mode)
    adj = kernels.adjacency_words(g.masks)
    scope = np.uint64(g.full_mask())
    found = kernels.all_splitting_masks(adj, g.n, scope, mode is STRONG)
    return [from_mask(int(x)) for x in found]


def has_nonempty_splitting_brute(g: Graph, mode=WEAK) -> bool:
    mode = SplitMode.parse(mode)
    if g.n == 0:
        return False
    adj = kernels.adjacency_words(g.masks)
    return int(kernels.first_nonempty_splitting(adj, g.n, np.uint64(g.full_mask()), mode is STRONG)) != 0
