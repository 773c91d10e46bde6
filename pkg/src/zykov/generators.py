"""Zykov and Blanche Descartes constructions and the named small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

import numpy as np

from . import graph as G
from .graph import Color, GadgetGraph, Graph

ZYKOV_MAX_K = 6
DESCARTES_MAX_K = 3


class SizeGuardError(ValueError):
    """A construction would be too large; carries the would-be size."""

    def __init__(self, what: str, k: int, size: int, limit: int):
        self.size = size
        super().__init__(f"{what}({k}) would have {size} vertices; refusing k > {limit}")


@dataclass(frozen=True)
class LayeredGraph:
    """A constructed graph plus the construction stage of every vertex.

    Stage 1 holds the single-vertex base graphs; stage ``j`` holds the
    vertices added when building the ``j``-th graph of the sequence.
    """

    graph: Graph
    layer_of: tuple[int, ...]

    def layers(self) -> list[frozenset[int]]:
        """Vertex sets by stage, outermost stage first."""
        by_stage: dict[int, set[int]] = {}
        for v, s in enumerate(self.layer_of):
            by_stage.setdefault(s, set()).add(v)
        return [frozenset(by_stage[s]) for s in sorted(by_stage, reverse=True)]


def zykov_sizes(k: int) -> list[int]:
    sizes = [1]
    while len(sizes) < k:
        sizes.append(sum(sizes) + prod(sizes))
    return sizes[:k]


def zykov(k: int) -> LayeredGraph:
    """``Z_k``: disjoint union of ``Z_1..Z_{k-1}`` plus one apex per tuple.

    Apexes are numbered after the union, in lexicographic tuple order.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > ZYKOV_MAX_K:
        raise SizeGuardError("zykov", k, zykov_sizes(k)[-1], ZYKOV_MAX_K)
    built = [(1, np.empty((0, 2), dtype=np.int64), np.array([1], dtype=np.int64))]
    for _ in range(1, k):
        sizes = [b[0] for b in built]
        offsets = np.cumsum([0] + sizes[:-1])
        base = sum(sizes)
        napex = prod(sizes)
        parts = [b[1] + off for b, off in zip(built, offsets)]
        idx = np.unravel_index(np.arange(napex), sizes)
        apex = base + np.arange(napex)
        for i, off in enumerate(offsets):
            parts.append(np.stack([idx[i] + off, apex], axis=1))
        stages = np.concatenate([b[2] for b in built] + [np.full(napex, len(built) + 1)])
        built.append((base + napex, np.concatenate(parts), stages))
    n, edges, stages = built[-1]
    return LayeredGraph(Graph(n, edges), tuple(int(s) for s in stages))


def descartes_sizes(k: int) -> list[int]:
    sizes = [1]
    for j in range(1, k):
        n = sizes[-1]
        s = j * (n - 1) + 1
        sizes.append(s + comb(s, n) * n)
    return sizes[:k]


def descartes(k: int) -> LayeredGraph:
    """``D_k`` with the canonical matching.

    ``D_{j+1}``: a stable set ``S`` of ``j(n-1)+1`` vertices (numbered first),
    then for every ``n``-subset ``T`` of ``S`` in lexicographic order a fresh
    copy of ``D_j`` whose ``i``-th vertex is matched to the ``i``-th smallest
    member of ``T``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > DESCARTES_MAX_K:
        raise SizeGuardError("descartes", k, descartes_sizes(k)[-1], DESCARTES_MAX_K)
    n, edges, stages = 1, np.empty((0, 2), dtype=np.int64), np.array([1], dtype=np.int64)
    for j in range(1, k):
        s = j * (n - 1) + 1
        subsets = np.array(list(combinations(range(s), n)), dtype=np.int64).reshape(-1, n)
        ncopies = len(subsets)
        offsets = s + n * np.arange(ncopies)
        inner = (edges[None, :, :] + offsets[:, None, None]).reshape(-1, 2)
        match = np.stack([subsets.ravel(), (offsets[:, None] + np.arange(n)[None, :]).ravel()], axis=1)
        stages = np.concatenate([np.full(s, j + 1), np.tile(stages, ncopies)])
        edges = np.concatenate([inner, match])
        n = s + ncopies * n
    return LayeredGraph(Graph(n, edges), tuple(int(x) for x in stages))


# -- named graphs ------------------------------------------------------------

def _gadget(n, edges, roles=None, colors=None, kind=""):
    roles = tuple(roles) if roles else tuple(f"v{i}" for i in range(n))
    colors = tuple(colors) if colors else (Color.UNCOLORED,) * n
    return GadgetGraph(Graph(n, edges), colors, roles, kind)


def graph_F() -> GadgetGraph:
    """Two 5-cycles ``w1..w5`` (0..4) and ``u1..u5`` (5..9) joined by ``w_i u_i``."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    roles = [f"w{i}" for i in range(1, 6)] + [f"u{i}" for i in range(1, 6)]
    return _gadget(10, edges, roles, kind="F")


def graph_F_prime() -> GadgetGraph:
    """5-cycle ``u1..u5`` (0..4) with ``w1, w2, w3`` (5, 6, 7) attached."""
    u = {i: i - 1 for i in range(1, 6)}
    w = {1: 5, 2: 6, 3: 7}
    edges = [(u[i], u[i % 5 + 1]) for i in range(1, 6)]
    edges += [(u[1], w[1]), (u[1], w[2]), (w[2], w[3]), (w[1], u[4]), (w[3], u[4]), (w[2], u[3])]
    roles = [f"u{i}" for i in range(1, 6)] + ["w1", "w2", "w3"]
    return _gadget(8, edges, roles, kind="F_prime")


H_ROLES = ("v", "v'", "v''", "a", "a'", "a''", "a'''")


def graph_H() -> GadgetGraph:
    """Two 4-cycles ``v a v' a'`` and ``v' a'' v'' a'''`` plus the edge ``v v''``.

    ``v, v', v''`` are red and the ``a`` vertices green.
    """
    v, v1, v2, a, a1, a2, a3 = range(7)
    edges = [(v, a), (v, a1), (a, v1), (a1, v1), (v1, a2), (v1, a3), (a2, v2), (a3, v2), (v, v2)]
    colors = [Color.RED] * 3 + [Color.GREEN] * 4
    return _gadget(7, edges, H_ROLES, colors, kind="H")


def graph_L() -> GadgetGraph:
    """Green ``a`` (0) and ``a'`` (1) joined by three paths with two red inner vertices each."""
    edges = []
    roles = ["a", "a'"]
    for p in range(3):
        x, y = 2 + 2 * p, 3 + 2 * p
        edges += [(0, x), (x, y), (y, 1)]
        roles += [f"p{p + 1}_1", f"p{p + 1}_2"]
    colors = [Color.GREEN] * 2 + [Color.RED] * 6
    return _gadget(8, edges, roles, colors, kind="L")


def graph_tw2() -> GadgetGraph:
    """Two copies of ``H`` glued along one edge, roles swapped across the glue.

    Transcribed from the drawing's grid coordinates: vertices are numbered
    in the order they are listed below, and each is labeled by its
    coordinates.
    """
    pts = [(0, 2), (1, 2), (3, -1), (4, -1)] + [p for i in range(4) for p in ((i, 1), (i + 1, 0))]
    index = {p: i for i, p in enumerate(pts)}
    segs = []
    for i, j in [(0, 2), (1, 1), (2, 1), (3, 0)]:
        segs += [((i, j), (i + 1, j)), ((i, j), (i, j - 1))]
    for i, j in [(1, 1), (3, 0), (4, -1)]:
        segs += [((i, j), (i - 1, j)), ((i, j), (i, j + 1))]
    segs += [((1, 0), (2, 0)), ((0, 2), (2, 0)), ((2, 1), (4, -1))]
    edges = [(index[p], index[q]) for p, q in segs]
    roles = [f"({x},{y})" for x, y in pts]
    return _gadget(len(pts), edges, roles, kind="tw2")


def petersen() -> GadgetGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _gadget(10, outer + spokes + inner, kind="petersen")


_FIXED = {
    "F": graph_F,
    "F_prime": graph_F_prime,
    "H": graph_H,
    "L": graph_L,
    "tw2": graph_tw2,
    "petersen": petersen,
}
_ALIASES = {"f": "F", "fprime": "F_prime", "f'": "F_prime", "f_prime": "F_prime", "h": "H", "l": "L",
            "nztw2": "tw2", "tw2": "tw2", "petersen": "petersen"}
_FAMILIES = {
    "cycle": (G.cycle, 1),
    "path": (G.path, 1),
    "complete": (G.complete, 1),
    "complete_bipartite": (G.complete_bipartite, 2),
    "edgeless": (G.edgeless, 1),
}

GALLERY_NAMES = tuple(_FIXED) + tuple(_FAMILIES)


def gallery(name: str, *params: int) -> GadgetGraph:
    key = _ALIASES.get(name.lower(), name)
    if key in _FIXED:
        if params:
            raise ValueError(f"{key} takes no parameters")
        return _FIXED[key]()
    if key in _FAMILIES:
        make, arity = _FAMILIES[key]
        if len(params) != arity:
            raise ValueError(f"{key} takes {arity} integer parameter(s)")
        g = make(*(int(p) for p in params))
        return _gadget(g.n, g.edges, kind=key)
    raise KeyError(f"unknown gallery graph {name!r}; known: {', '.join(GALLERY_NAMES)}")
