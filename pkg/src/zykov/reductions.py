"""3-SAT gadget compilers and the stable-set and coloring reductions.

Vertex numbering of the compiled graphs is fixed so that certificates are
reproducible:

* ``sat_to_zykov``: ``H`` (7 vertices in the order of
  :data:`zykov.generators.H_ROLES`), then per variable ``t, f, b1, b2, b3``,
  then per clause ``c1..c6`` followed by ``d_{k,1..5}`` for ``k = 1, 2, 3``.
* ``sat_to_bd``: per variable ``t, f, b1..b5``; per clause ``c1..c8`` then,
  for each ``k``, ``d_{k,1..7}, a_k, e_k``; finally ``L_{k,l}``: ``alpha``,
  one arm per external green vertex (three paths, two reds each, listed from
  ``alpha`` outwards), then one arm per external red vertex (``gamma``, its
  three paths, and the red connector to the port).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .generators import H_ROLES, graph_H
from .graph import Color, GadgetGraph, Graph, iter_bits, mask_is_forest, subdivide, to_mask
from .splitting import STRONG, WEAK, is_splitting

RED, GREEN, NONE = Color.RED, Color.GREEN, Color.UNCOLORED


class CnfFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class CnfInstance:
    """A 3-CNF. Literals are ``(variable, positive)`` with 0-based variables."""

    num_vars: int
    clauses: tuple[tuple[tuple[int, bool], ...], ...]

    def __post_init__(self):
        if not self.clauses:
            raise ValueError("an instance needs at least one clause")
        for c in self.clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly 3 literals")
            for var, _ in c:
                if not 0 <= var < self.num_vars:
                    raise ValueError(f"variable {var} out of range for n={self.num_vars}")

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Sequence[Sequence[int]]) -> "CnfInstance":
        """Build from DIMACS-style signed 1-based literals."""
        return cls(num_vars, tuple(tuple((abs(x) - 1, x > 0) for x in c) for c in clauses))

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[v] == pos for v, pos in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        for c in self.clauses:
            lines.append(" ".join(str(v + 1 if pos else -(v + 1)) for v, pos in c) + " 0")
        return "\n".join(lines) + "\n"


def parse_dimacs_cnf(text: str) -> CnfInstance:
    header = None
    lits: list[int] = []
    clauses: list[list[int]] = []
    starts: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("c") or s.startswith("%"):
            continue
        if s.startswith("p"):
            parts = s.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfFormatError("bad problem line, expected 'p cnf N M'", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfFormatError("bad problem line, expected 'p cnf N M'", lineno) from None
            continue
        if header is None:
            raise CnfFormatError("clause before the problem line", lineno)
        for tok in s.split():
            try:
                x = int(tok)
            except ValueError:
                raise CnfFormatError(f"not an integer literal: {tok!r}", lineno) from None
            if x == 0:
                if len(lits) != 3:
                    raise CnfFormatError(f"clause has {len(lits)} literals, expected exactly 3", starts[-1] if lits else lineno)
                clauses.append(lits)
                lits = []
                continue
            if abs(x) > header[0]:
                raise CnfFormatError(f"literal {x} exceeds the variable count {header[0]}", lineno)
            if not lits:
                starts.append(lineno)
            lits.append(x)
    if header is None:
        raise CnfFormatError("missing problem line")
    if lits:
        raise CnfFormatError("last clause is not terminated by 0", starts[-1])
    if len(clauses) != header[1]:
        raise CnfFormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return CnfInstance.from_ints(header[0], clauses)
    except ValueError as exc:
        raise CnfFormatError(str(exc)) from None


def satisfying_assignments(inst: CnfInstance) -> Iterator[tuple[bool, ...]]:
    """Truth-table enumeration, ``False`` before ``True`` per variable."""
    for bits in product((False, True), repeat=inst.num_vars):
        if inst.satisfied_by(bits):
            yield bits


def satisfiable(inst: CnfInstance) -> bool:
    return next(satisfying_assignments(inst), None) is not None


# -- construction helpers ----------------------------------------------------

class _Builder:
    def __init__(self):
        self.roles: list[str] = []
        self.colors: list[Color] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, role: str, color: Color = NONE) -> int:
        self.roles.append(role)
        self.colors.append(color)
        return len(self.roles) - 1

    def cycle(self, vs):
        for i in range(len(vs)):
            self.edges.append((vs[i], vs[(i + 1) % len(vs)]))

    def path(self, vs):
        for i in range(len(vs) - 1):
            self.edges.append((vs[i], vs[i + 1]))

    def build(self, kind: str, meta: dict) -> GadgetGraph:
        g = Graph(len(self.roles), self.edges)
        return GadgetGraph(g, tuple(self.colors), tuple(self.roles), kind, meta)


def _colored_cycle(b: _Builder, names: Sequence[str], colors: dict[int, Color]) -> list[int]:
    vs = [b.add(nm, colors.get(i + 1, NONE)) for i, nm in enumerate(names)]
    b.cycle(vs)
    return vs


class LiteralWiring(enum.Enum):
    SYMMETRIC = "symmetric"
    TEXT = "text"


# -- Zykov ------------------------------------------------------------------

def sat_to_zykov(inst: CnfInstance) -> GadgetGraph:
    """Compile a 3-CNF into a graph that is Zykov iff the CNF is satisfiable.

    ``|V| = 7 + 5n + 21m``.
    """
    b = _Builder()
    h = graph_H()
    for role, color in zip(h.roles, h.colors):
        b.add(role, color)
    b.edges.extend(h.graph.edge_list())
    v, v1 = 0, 1
    hub_green = (v, v1)
    hub_red = tuple(h.vertex(r) for r in H_ROLES[3:])

    t, f = [], []
    for i in range(1, inst.num_vars + 1):
        names = [f"t_{i}", f"b_{i},1", f"b_{i},2", f"b_{i},3", f"f_{i}"]
        # cycle t b1 b2 b3 f, numbered t, f, b1, b2, b3
        ti = b.add(names[0])
        fi = b.add(names[4])
        bs = [b.add(names[1], RED), b.add(names[2], GREEN), b.add(names[3], RED)]
        b.cycle([ti] + bs + [fi])
        t.append(ti)
        f.append(fi)

    clause_cols = {4: RED, 5: GREEN, 6: RED}
    d_cols = {2: RED, 3: GREEN, 4: RED}
    for j, clause in enumerate(inst.clauses, start=1):
        c = _colored_cycle(b, [f"c_{j},{r}" for r in range(1, 7)], clause_cols)
        for k in range(1, 4):
            d = _colored_cycle(b, [f"d_{j},{k},{r}" for r in range(1, 6)], d_cols)
            b.edges.append((c[k - 1], d[0]))
            var, pos = clause[k - 1]
            b.edges.append(((f if pos else t)[var], d[4]))

    for x in range(7, len(b.roles)):
        if b.colors[x] is RED:
            b.edges.extend((x, y) for y in hub_red)
        elif b.colors[x] is GREEN:
            b.edges.extend((x, y) for y in hub_green)
    meta = {"target": "zykov", "instance": inst}
    return b.build("sat_zykov", meta)


# -- Blanche Descartes ------------------------------------------------------

def _l_green_arm(b: _Builder, alpha: int, port: int, tag: str):
    for p in range(1, 4):
        x = b.add(f"{tag},{p},1", RED)
        y = b.add(f"{tag},{p},2", RED)
        b.path([alpha, x, y, port])


def sat_to_bd(inst: CnfInstance, literal_wiring: str | LiteralWiring = LiteralWiring.SYMMETRIC) -> GadgetGraph:
    """Compile a 3-CNF into a graph that is Blanche Descartes iff satisfiable.

    With the default symmetric wiring every literal is attached to
    ``e_{j,k}``, from ``f_i`` (positive) or ``t_i`` (negative).  ``"text"``
    instead joins ``t_i`` to ``d_{j,k,7}`` for negative literals.
    """
    wiring = LiteralWiring(literal_wiring)
    b = _Builder()
    t, f = [], []
    var_cols = {2: RED, 3: RED, 4: GREEN, 5: RED, 6: RED}  # positions in t b1..b5 f
    for i in range(1, inst.num_vars + 1):
        ti = b.add(f"t_{i}")
        fi = b.add(f"f_{i}")
        bs = [b.add(f"b_{i},{r}", var_cols[r + 1]) for r in range(1, 6)]
        b.cycle([ti] + bs + [fi])
        t.append(ti)
        f.append(fi)

    c_cols = {4: RED, 5: RED, 6: GREEN, 7: RED, 8: RED}
    d_cols = {2: RED, 3: RED, 4: GREEN, 5: RED, 6: RED}
    for j, clause in enumerate(inst.clauses, start=1):
        c = _colored_cycle(b, [f"c_{j},{r}" for r in range(1, 9)], c_cols)
        for k in range(1, 4):
            d = _colored_cycle(b, [f"d_{j},{k},{r}" for r in range(1, 8)], d_cols)
            a = b.add(f"a_{j},{k}", RED)
            e = b.add(f"e_{j},{k}", RED)
            b.path([c[k - 1], a, d[0]])
            b.edges.append((d[6], e))
            var, pos = clause[k - 1]
            if pos:
                b.edges.append((f[var], e))
            elif wiring is LiteralWiring.SYMMETRIC:
                b.edges.append((t[var], e))
            else:
                b.edges.append((t[var], d[6]))

    externals = len(b.roles)
    greens = [x for x in range(externals) if b.colors[x] is GREEN]
    reds = [x for x in range(externals) if b.colors[x] is RED]
    alpha = b.add("alpha", GREEN)
    for i, port in enumerate(greens, start=1):
        _l_green_arm(b, alpha, port, f"Lg_{i}")
    for i, port in enumerate(reds, start=1):
        gamma = b.add(f"gamma_{i}", GREEN)
        _l_green_arm(b, alpha, gamma, f"Lr_{i}")
        r = b.add(f"Lr_{i},link", RED)
        b.path([gamma, r, port])

    expected = externals + 1 + 6 * len(greens) + 8 * len(reds)
    if len(b.roles) != expected:
        raise AssertionError(f"vertex tally mismatch: {len(b.roles)} != {expected}")
    if externals != 7 * inst.num_vars + 35 * len(inst.clauses):
        raise AssertionError("external vertex tally mismatch")
    meta = {"target": "bd", "instance": inst, "literal_wiring": wiring.value,
            "green_ports": len(greens), "red_ports": len(reds)}
    return b.build("sat_bd", meta)


def sat_to_bd_size(num_vars: int, num_clauses: int) -> int:
    greens = num_vars + 4 * num_clauses
    reds = 4 * num_vars + 22 * num_clauses
    return 7 * num_vars + 35 * num_clauses + 1 + 6 * greens + 8 * reds


# -- certificate translation ------------------------------------------------

class AssignmentError(ValueError):
    pass


def _chosen_positions(inst: CnfInstance, assignment: Sequence[bool]) -> list[int]:
    ks = []
    for j, clause in enumerate(inst.clauses, start=1):
        for k, (var, pos) in enumerate(clause, start=1):
            if assignment[var] == pos:
                ks.append(k)
                break
        else:
            raise AssignmentError(f"assignment does not satisfy clause {j}")
    return ks


def _target_of(gg: GadgetGraph) -> str:
    if not gg.meta or "target" not in gg.meta:
        raise ValueError("not a compiled 3-SAT gadget graph")
    return gg.meta["target"]


def _zykov_clause_choice(clause, assignment) -> tuple[tuple[int, ...], frozenset[int]]:
    """``(c positions, true positions)`` for one clause of the Zykov gadget.

    Every true position must take ``d_{j,k,5}``, so the ``c`` vertices can
    only be cut cleanly when exactly one position is true or when both
    ends ``1`` and ``3`` are.
    """
    true_pos = frozenset(k for k, (var, pos) in enumerate(clause, start=1) if assignment[var] == pos)
    if len(true_pos) == 1:
        return tuple(true_pos), true_pos
    if {1, 3} <= true_pos:
        return (1, 3), true_pos
    raise AssignmentError(
        f"true literal positions {sorted(true_pos)} admit no splitting set of this shape")


def assignment_to_splitting_set(inst: CnfInstance, assignment: Sequence[bool], target: str = "zykov",
                                gadget: GadgetGraph | None = None, literal: bool = False) -> frozenset[int]:
    """The stable set built from a satisfying assignment.

    Common part: all green vertices and ``t_i`` or ``f_i`` by truth value.
    With ``literal`` (always for BD) each clause adds ``c_{j,k}`` and
    ``d_{j,k,5}`` (Zykov) or ``d_{j,k,7}`` (BD) for the smallest satisfied
    position ``k`` and ``d_{j,k',1}`` for the other two.  For Zykov that
    set is not splitting once a second literal of the clause is true, so
    by default every true position takes ``d_{j,k,5}``, every false one
    ``d_{j,k,1}``, and the ``c`` vertices follow
    :func:`_zykov_clause_choice`.
    """
    target = target.lower()
    if target not in ("zykov", "bd"):
        raise ValueError("target must be 'zykov' or 'bd'")
    if len(assignment) != inst.num_vars:
        raise AssignmentError(f"expected {inst.num_vars} truth values, got {len(assignment)}")
    ks = _chosen_positions(inst, assignment)
    if gadget is None:
        gadget = sat_to_zykov(inst) if target == "zykov" else sat_to_bd(inst)
    elif _target_of(gadget) != target:
        raise ValueError("gadget graph was compiled for the other target")
    idx = gadget.role_index
    chosen = set(gadget.colored(GREEN))
    for i, val in enumerate(assignment, start=1):
        chosen.add(idx[f"t_{i}" if val else f"f_{i}"])
    last = 5 if target == "zykov" else 7
    for j, (kj, clause) in enumerate(zip(ks, inst.clauses), start=1):
        if target == "zykov" and not literal:
            cs, true_pos = _zykov_clause_choice(clause, assignment)
        else:
            cs, true_pos = (kj,), frozenset((kj,))
        for k in cs:
            chosen.add(idx[f"c_{j},{k}"])
        for k in range(1, 4):
            chosen.add(idx[f"d_{j},{k},{last}" if k in true_pos else f"d_{j},{k},1"])
    return frozenset(chosen)


def splitting_set_to_assignment(gadget: GadgetGraph, s) -> tuple[bool, ...]:
    """Read the truth assignment off a non-empty splitting set: ``x_i`` iff ``t_i`` is in it."""
    target = _target_of(gadget)
    inst: CnfInstance = gadget.meta["instance"]
    members = frozenset(s)
    if not members:
        raise AssignmentError("the empty set carries no assignment")
    mode = WEAK if target == "zykov" else STRONG
    if not is_splitting(gadget.graph, members, mode):
        raise AssignmentError(f"not a {mode.value} splitting set of the gadget graph")
    idx = gadget.role_index
    out = []
    for i in range(1, inst.num_vars + 1):
        ti, fi = idx[f"t_{i}"] in members, idx[f"f_{i}"] in members
        if ti == fi:
            raise AssignmentError(f"set contains {'both' if ti else 'neither'} of t_{i} and f_{i}")
        out.append(ti)
    return tuple(out)


# -- stable sets and colorings ----------------------------------------------

def mis_reduction(g: Graph, k: int) -> tuple[Graph, int]:
    """Subdivide every edge four times; the stable-set target grows by ``2m``."""
    return subdivide(g, 4), k + 2 * g.m


@dataclass(frozen=True)
class _UGShape:
    core: Graph
    s_size: int
    subsets: np.ndarray


def _ug_shape(c: int) -> _UGShape:
    if c == 2:
        core = Graph(2, [(0, 1)])
    elif c == 3:
        core = Graph(7, [(i, (i + 1) % 7) for i in range(7)])
    else:
        raise ValueError("unequality gadget supports c in {2, 3}")
    p = core.n
    s = c * (p - 1) + 1
    subsets = np.array(list(combinations(range(s), p)), dtype=np.int64)
    return _UGShape(core, s, subsets)


def _ug_edges(shape: _UGShape) -> np.ndarray:
    p, s = shape.core.n, shape.s_size
    ncopies = len(shape.subsets)
    offsets = s + p * np.arange(ncopies, dtype=np.int64)
    inner = (shape.core.edges[None, :, :] + offsets[:, None, None]).reshape(-1, 2)
    match = np.stack([shape.subsets.ravel(), (offsets[:, None] + np.arange(p)[None, :]).ravel()], axis=1)
    # the first subset is {s_1..s_p}; drop its edge at s_1
    return np.concatenate([inner, match[1:]])


def unequality_gadget_size(c: int) -> tuple[int, int]:
    """``(vertices, edges)`` of ``unequality_gadget(c)`` by counting."""
    core_n, core_m = {2: (2, 1), 3: (7, 7)}[c]
    s = c * (core_n - 1) + 1
    copies = comb(s, core_n)
    return s + core_n * copies, (core_m + core_n) * copies - 1


def unequality_gadget(c: int, roles: bool = True) -> GadgetGraph:
    """Two ports ``a = s_1`` and ``b = s_{p+1}`` that differ in every proper ``c``-coloring.

    The core is ``K_2`` (``c = 2``) or ``C_7`` (``c = 3``) with ``p`` vertices.
    A stable set ``s_1..s_{c(p-1)+1}`` comes first, then one core copy per
    ``p``-subset in lexicographic order, matched by index order, without
    the matching edge at ``s_1`` on the first copy.
    """
    shape = _ug_shape(c)
    p, s = shape.core.n, shape.s_size
    n = s + p * len(shape.subsets)
    g = Graph(n, _ug_edges(shape))
    if roles:
        names = [f"s_{i}" for i in range(1, s + 1)]
        names += [f"copy_{q},{r}" for q in range(len(shape.subsets)) for r in range(1, p + 1)]
        names[0], names[p] = "a", "b"
    else:
        names = [str(i) for i in range(n)]
    meta = {"c": c, "ports": (0, p), "stable": s}
    return GadgetGraph(g, (NONE,) * n, tuple(names), f"ug{c}", meta)


def coloring_reduction(g: Graph, c: int) -> Graph:
    """Replace every edge ``uv`` by a fresh unequality gadget with ports ``u, v``.

    Original vertices keep their indices; gadget vertices other than the
    ports follow, edge by edge in edge-list order.
    """
    shape = _ug_shape(c)
    p = shape.core.n
    base = _ug_edges(shape)
    size = shape.s_size + p * len(shape.subsets)
    inner = size - 2
    # map gadget index -> position among its non-port vertices
    rest = np.ones(size, dtype=bool)
    rest[[0, p]] = False
    local = np.cumsum(rest) - 1
    parts = []
    for e, (u, v) in enumerate(g.edge_list()):
        mapping = g.n + e * inner + local
        mapping[0], mapping[p] = u, v
        parts.append(mapping[base])
    edges = np.concatenate(parts) if parts else np.empty((0, 2), dtype=np.int64)
    return Graph(g.n + g.m * inner, edges)


def verify_stable_forest(g: Graph, s) -> bool:
    """``s`` is stable and ``g - s`` is a forest."""
    mask = to_mask(s)
    masks = g.masks
    stable = all(not masks[v] & mask for v in iter_bits(mask))
    return stable and mask_is_forest(masks, g.full_mask() & ~mask)
