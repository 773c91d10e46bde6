"""Hot numeric kernels.

Bitmask kernels take ``adj``, a ``uint64`` array of neighborhood masks, so
they cover graphs with at most 63 vertices.  They back the brute-force
oracles (all subsets of a small graph) and the labeled small-graph sweep.

The Jacobi eigensolver has a loop kernel for numba and a vectorized numpy
twin used when the JIT is disabled.  ``jacobi_eigenvalues`` picks one.
"""

import math

import numpy as np

from ._accel import JIT_ENABLED, njit

ONE = np.uint64(1)
ZERO = np.uint64(0)
MAX_BITS = 63


def adjacency_words(masks) -> np.ndarray:
    if len(masks) > MAX_BITS:
        raise ValueError(f"bitmask kernels support at most {MAX_BITS} vertices")
    return np.array([int(x) for x in masks], dtype=np.uint64)


@njit
def popcount(x):
    c = 0
    while x:
        x &= x - ONE
        c += 1
    return c


@njit
def splitting_ok(adj, n, scope, a, strong):
    """Whether ``a`` is a (strongly) splitting stable set of ``G[scope]``."""
    for v in range(n):
        b = ONE << np.uint64(v)
        if a & b:
            if adj[v] & a:
                return False
        elif strong and (scope & b):
            if popcount(adj[v] & a) > 1:
                return False
    rest = scope & ~a
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
            if (a >> np.uint64(v)) & ONE:
                if popcount(adj[v] & comp) > 1:
                    return False
        rest &= ~comp
    return True


@njit
def all_splitting_masks(adj, n, scope, strong):
    """Every splitting submask of ``scope`` (the empty one included), ascending."""
    k = popcount(scope)
    out = np.empty(1 << k, dtype=np.uint64)
    cnt = 0
    sub = scope
    while True:
        if splitting_ok(adj, n, scope, sub, strong):
            out[cnt] = sub
            cnt += 1
        if sub == ZERO:
            break
        sub = (sub - ONE) & scope
    return np.sort(out[:cnt])


@njit
def first_nonempty_splitting(adj, n, scope, strong):
    """Some non-empty splitting submask of ``scope``, or 0 if there is none."""
    for v in range(n):
        b = ONE << np.uint64(v)
        if (scope & b) and popcount(adj[v] & scope) <= 1:
            return b
    sub = scope
    while sub:
        if splitting_ok(adj, n, scope, sub, strong):
            return sub
        sub = (sub - ONE) & scope
    return ZERO


@njit
def first_subset_without_splitting(adj, n, strong):
    """Smallest non-empty vertex subset whose induced subgraph has no
    non-empty splitting set, or 0 if every subset has one."""
    full = (ONE << np.uint64(n)) - ONE
    x = ONE
    while x <= full and n > 0:
        if first_nonempty_splitting(adj, n, x, strong) == ZERO:
            return x
        x += ONE
    return ZERO


@njit
def sweep_triangle_free(n, strong):
    """Enumerate all labeled graphs on ``n`` vertices.

    Returns ``(graphs, triangle_free, failures, first_failure_code)`` where a
    failure is a triangle-free graph with an induced subgraph lacking a
    non-empty splitting set.  Edge ``k`` of the code is the ``k``-th pair
    ``(i, j)``, ``i < j``, in lexicographic order.
    """
    npairs = n * (n - 1) // 2
    pi = np.empty(npairs, dtype=np.int64)
    pj = np.empty(npairs, dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            pi[k] = i
            pj[k] = j
            k += 1
    adj = np.zeros(max(n, 1), dtype=np.uint64)
    total = 1 << npairs
    tf = 0
    failures = 0
    first = -1
    for code in range(total):
        for v in range(n):
            adj[v] = ZERO
        for e in range(npairs):
            if (code >> e) & 1:
                adj[pi[e]] |= ONE << np.uint64(pj[e])
                adj[pj[e]] |= ONE << np.uint64(pi[e])
        triangle = False
        for e in range(npairs):
            if (code >> e) & 1:
                if adj[pi[e]] & adj[pj[e]]:
                    triangle = True
                    break
        if triangle:
            continue
        tf += 1
        if first_subset_without_splitting(adj, n, strong) != ZERO:
            failures += 1
            if first < 0:
                first = code
    return total, tf, failures, first


@njit
def jacobi_kernel(a, tol, max_sweeps):
    """Cyclic Jacobi rotations; returns (diagonal, sweeps, off-diagonal norm)."""
    A = a.copy()
    n = A.shape[0]
    threshold = tol / max(n, 1)
    sweeps = 0
    off = 0.0
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += A[p, q] * A[p, q]
        off = math.sqrt(2.0 * off)
        if off < threshold or sweep == max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    arp = A[r, p]
                    arq = A[r, q]
                    A[r, p] = c * arp - s * arq
                    A[r, q] = s * arp + c * arq
                for r in range(n):
                    apr = A[p, r]
                    aqr = A[q, r]
                    A[p, r] = c * apr - s * aqr
                    A[q, r] = s * apr + c * aqr
    return np.diag(A).copy(), sweeps, off


def jacobi_numpy(a, tol, max_sweeps):
    """Vectorized twin of :func:`jacobi_kernel` (same sweep order)."""
    A = np.array(a, dtype=np.float64, copy=True)
    n = A.shape[0]
    threshold = tol / max(n, 1)
    iu = np.triu_indices(n, 1)
    sweeps = 0
    off = 0.0
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(2.0 * float(np.sum(A[iu] ** 2)))
        if off < threshold or sweep == max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q]
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :]
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
    return np.diag(A).copy(), sweeps, off


def jacobi_eigenvalues(a, tol=1e-9, max_sweeps=100):
    """Eigenvalues of a symmetric matrix, ascending."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(a, a.T):
        raise ValueError("matrix is not symmetric")
    impl = jacobi_kernel if JIT_ENABLED else jacobi_numpy
    diag, sweeps, off = impl(a, float(tol), int(max_sweeps))
    if off >= tol / max(a.shape[0], 1):
        raise ArithmeticError(f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})")
    return np.sort(diag)
