"""Independent oracles used by the tests.

Nothing here imports the propagation or recognizer code; the splitting
check is the bitmask kernel, which is itself checked against a plain
Python reading of the definition in ``test_oracles.py``.
"""

import itertools

import numpy as np

from zykov import kernels as K
from zykov._accel import njit

ONE = np.uint64(1)
ZERO = np.uint64(0)


@njit
def _bad_partial(adj, n, inn, out):
    rest = out
    while rest:
        comp = rest & (~rest + ONE)
        frontier = comp
        while frontier:
            grow = ZERO
            for v in range(n):
                if (frontier >> np.uint64(v)) & ONE:
                    grow |= adj[v]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        for v in range(n):
            if (inn >> np.uint64(v)) & ONE:
                if K.popcount(adj[v] & comp) > 1:
                    return True
        rest &= ~comp
    return False


@njit
def _search(adj, n, depth, inn, out, full, strong):
    # sound prune: an out-component only grows, so a vertex of inn that
    # already sees it twice stays violated
    if _bad_partial(adj, n, inn, out):
        return ZERO
    if depth == n:
        if inn != ZERO and K.splitting_ok(adj, n, full, inn, strong):
            return inn
        return ZERO
    b = ONE << np.uint64(depth)
    if (adj[depth] & inn) == ZERO:
        r = _search(adj, n, depth + 1, inn | b, out, full, strong)
        if r:
            return r
    return _search(adj, n, depth + 1, inn, out | b, full, strong)


def oracle_nonempty_splitting(g, strong=False):
    """Some non-empty splitting set of ``g`` as a sorted list, or ``None``."""
    if g.n == 0:
        return None
    adj = K.adjacency_words(g.masks)
    full = (ONE << np.uint64(g.n)) - ONE
    r = int(_search(adj, g.n, 0, ZERO, ZERO, full, strong))
    return [v for v in range(g.n) if r >> v & 1] if r else None


def definitional_splitting(n, edges, a, strong=False):
    """Plain reading of the definition on an edge list."""
    a = set(a)
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if any(adj[v] & a for v in a):
        return False
    if strong and any(len(adj[u] & a) > 1 for u in range(n) if u not in a):
        return False
    rest = set(range(n)) - a
    seen = set()
    for s in sorted(rest):
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            x = stack.pop()
            for y in adj[x] & rest:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        if any(len(adj[v] & comp) > 1 for v in a):
            return False
    return True


def all_3cnf(max_vars=2, max_clauses=2):
    """Every instance with ``n <= max_vars`` and ``m <= max_clauses``,
    clauses taken as multisets of literals (within-clause order ignored)."""
    from zykov.reductions import CnfInstance
    for n in range(1, max_vars + 1):
        lits = [(v, p) for v in range(n) for p in (True, False)]
        triples = list(itertools.combinations_with_replacement(lits, 3))
        for m in range(1, max_clauses + 1):
            for cls in itertools.product(triples, repeat=m):
                yield CnfInstance(n, tuple(cls))


def truth_table_sat(inst):
    return any(all(any(bits[v] == p for v, p in c) for c in inst.clauses)
               for bits in itertools.product((False, True), repeat=inst.num_vars))
