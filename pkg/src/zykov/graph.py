"""Simple undirected graphs on dense vertex indices ``0..n-1``.

Edges are kept as a sorted ``(m, 2)`` int array with ``u < v`` per row.
Per-vertex views (neighbor tuples, Python-int bitmasks) are built lazily, so
very large gadget graphs only pay for the views they use.

Vertex sets cross the public API as ``frozenset[int]``; the search code works
on Python ints used as bitmasks (bit ``v`` set means vertex ``v`` is in).
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np


class Graph:
    """Immutable simple graph."""

    __slots__ = ("n", "edges", "_nbrs", "_masks", "_sets")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        arr = np.asarray(edges, dtype=np.int64)
        arr = arr.reshape(-1, 2)
        if arr.size:
            if arr.min() < 0 or arr.max() >= n:
                bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
                raise ValueError(f"edge {tuple(int(x) for x in bad)} out of range for n={n}")
            loops = arr[:, 0] == arr[:, 1]
            if loops.any():
                v = int(arr[loops][0, 0])
                raise ValueError(f"self-loop at vertex {v}")
            arr = np.sort(arr, axis=1)
            arr = np.unique(arr, axis=0)
        self.n = int(n)
        self.edges = arr
        self.edges.setflags(write=False)
        self._nbrs = None
        self._masks = None
        self._sets = None

    @classmethod
    def from_masks(cls, masks: list[int]) -> "Graph":
        n = len(masks)
        edges = [(u, v) for u in range(n) for v in iter_bits(masks[u]) if u < v]
        return cls(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def nbrs(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuple for every vertex."""
        if self._nbrs is None:
            if self.m == 0:
                self._nbrs = tuple(() for _ in range(self.n))
            else:
                both = np.concatenate([self.edges, self.edges[:, ::-1]])
                order = np.lexsort((both[:, 1], both[:, 0]))
                both = both[order]
                splits = np.searchsorted(both[:, 0], np.arange(self.n + 1))
                targets = both[:, 1].tolist()
                self._nbrs = tuple(
                    tuple(targets[splits[v]:splits[v + 1]]) for v in range(self.n)
                )
        return self._nbrs

    @property
    def masks(self) -> list[int]:
        """Neighborhood bitmask per vertex (Python ints, any n)."""
        if self._masks is None:
            masks = []
            for row in self.nbrs:
                x = 0
                for w in row:
                    x |= 1 << w
                masks.append(x)
            self._masks = masks
        return self._masks

    @property
    def nbr_sets(self) -> list[frozenset[int]]:
        if self._sets is None:
            self._sets = [frozenset(row) for row in self.nbrs]
        return self._sets

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.nbrs[v]

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_sets[u]

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edges]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Color(enum.Enum):
    RED = "red"
    GREEN = "green"
    UNCOLORED = "uncolored"


@dataclass(frozen=True)
class GadgetGraph:
    """A graph whose vertices carry a color and a unique role label."""

    graph: Graph
    colors: tuple[Color, ...]
    roles: tuple[str, ...]
    kind: str = ""
    meta: dict | None = None

    def __post_init__(self):
        n = self.graph.n
        if len(self.colors) != n or len(self.roles) != n:
            raise ValueError("colors and roles must cover every vertex")
        if len(set(self.roles)) != n:
            raise ValueError("role labels must be unique")

    def vertex(self, role: str) -> int:
        return self.role_index[role]

    @property
    def role_index(self) -> dict[str, int]:
        cache = self.__dict__.get("_role_index")
        if cache is None:
            cache = {r: i for i, r in enumerate(self.roles)}
            object.__setattr__(self, "_role_index", cache)
        return cache

    def colored(self, color: Color) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.colors) if c is color)

    def sidecar(self) -> dict:
        return {
            "colors": {str(i): c.value for i, c in enumerate(self.colors)},
            "roles": {str(i): r for i, r in enumerate(self.roles)},
        }


# -- bitmask helpers ---------------------------------------------------------

def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, (int, np.integer)):
        return int(vertices)
    x = 0
    for v in vertices:
        x |= 1 << int(v)
    return x


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def sorted_members(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_components(masks: list[int], scope: int) -> list[int]:
    """Connected components of the subgraph induced by ``scope``, as masks,
    ordered by smallest member."""
    comps = []
    rest = scope
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= masks[v]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        rest &= ~comp
    return comps


def mask_is_forest(masks: list[int], scope: int) -> bool:
    edges2 = sum((masks[v] & scope).bit_count() for v in iter_bits(scope))
    return edges2 // 2 == scope.bit_count() - len(mask_components(masks, scope))


def mask_bipartition(masks: list[int], scope: int) -> tuple[int, int] | None:
    """2-coloring of ``G[scope]`` as (side0, side1) masks, side0 holding the
    smallest vertex of each component; ``None`` if not bipartite."""
    side0 = side1 = 0
    for comp in mask_components(masks, scope):
        a, b = comp & -comp, 0
        frontier, on_a = a, True
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= masks[v]
            grow &= comp
            if on_a:
                if grow & a:
                    return None
                grow &= ~b
                b |= grow
            else:
                if grow & b:
                    return None
                grow &= ~a
                a |= grow
            frontier = grow
            on_a = not on_a
        side0 |= a
        side1 |= b
    return side0, side1


# -- structure queries -------------------------------------------------------

def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by smallest contained index."""
    seen = bytearray(g.n)
    comps = []
    nbrs = g.nbrs
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s`` with vertices renumbered in increasing order.

    Returns the graph and the old->new index map.
    """
    keep = sorted(set(int(v) for v in s))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph with n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    if g.m == 0 or not keep:
        return Graph(len(keep)), index
    lookup = np.full(g.n, -1, dtype=np.int64)
    lookup[keep] = np.arange(len(keep))
    mapped = lookup[g.edges]
    mapped = mapped[(mapped >= 0).all(axis=1)]
    return Graph(len(keep), mapped), index


def induced_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, iter_bits(mask))[0]


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    nbrs = g.nbrs
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


class StructureFlags(NamedTuple):
    is_forest: bool
    is_bipartite: bool
    is_triangle_free: bool


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: Graph) -> list[int] | None:
    side = [-1] * g.n
    nbrs = g.nbrs
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def is_triangle_free(g: Graph) -> bool:
    sets = g.nbr_sets
    for u, v in g.edge_list():
        a, b = sets[u], sets[v]
        if len(a) > len(b):
            a, b = b, a
        if not a.isdisjoint(b):
            return False
    return True


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def structure_flags(g: Graph) -> StructureFlags:
    return StructureFlags(is_forest(g), is_bipartite(g), is_triangle_free(g))


def is_regular(g: Graph) -> int | None:
    """Common degree if ``g`` is regular, else ``None``."""
    if g.n == 0:
        return 0
    deg = g.degrees()
    return int(deg[0]) if (deg == deg[0]).all() else None


# -- constructions -----------------------------------------------------------

def subdivide(g: Graph, times: int) -> Graph:
    """Replace every edge by a path with ``times`` internal vertices.

    New vertices follow the originals, edge by edge in lexicographic order,
    each path listed from its smaller endpoint.
    """
    if times < 1:
        raise ValueError("times must be at least 1")
    m = g.m
    if m == 0:
        return Graph(g.n)
    base = g.n + times * np.arange(m, dtype=np.int64)
    inner = base[:, None] + np.arange(times, dtype=np.int64)[None, :]
    chain = np.concatenate([g.edges[:, :1], inner, g.edges[:, 1:]], axis=1)
    edges = np.stack([chain[:, :-1].ravel(), chain[:, 1:].ravel()], axis=1)
    return Graph(g.n + times * m, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    parts = []
    for h in graphs:
        parts.append(h.edges + offset)
        offset += h.n
    edges = np.concatenate(parts) if parts else np.empty((0, 2), dtype=np.int64)
    return Graph(offset, edges)


def relabel(g: Graph, perm) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    p = np.asarray(perm, dtype=np.int64)
    return Graph(g.n, p[g.edges])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def edgeless(n: int) -> Graph:
    return Graph(n)
