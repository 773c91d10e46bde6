"""graph6, edge list and DIMACS graph formats.

``edge_list``: a header ``n m``, then exactly ``m`` lines ``u v`` (0-indexed).
``dimacs_graph``: ``c`` comment lines, ``p edge n m``, then ``e u v``
lines, 1-indexed; the edge count in the header is not enforced.
``graph6``: McKay's format, header-less on output; a leading
``>>graph6<<`` is accepted on input.  Repeated edges collapse and
self-loops are rejected in every format.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph

FORMATS = ("graph6", "edge_list", "dimacs_graph")
GRAPH6_MAX_BYTES = 1 << 28


class FormatError(ValueError):
    """Malformed input; ``line`` (1-based) or ``offset`` (0-based byte) locates it."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        self.line = line
        self.offset = offset
        where = f"line {line}: " if line is not None else f"byte {offset}: " if offset is not None else ""
        super().__init__(where + message)


def _check_pair(n, u, v, **where):
    if u == v:
        raise FormatError(f"self-loop at vertex {u}", **where)
    if not (0 <= u < n and 0 <= v < n):
        raise FormatError(f"vertex index out of range for n={n}: {u} {v}", **where)


def _int(tok, **where):
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", **where) from None


# -- edge list ---------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise FormatError("empty input, expected header 'n m'", line=1)
    hl, head = lines[0]
    if len(head) != 2:
        raise FormatError("header must be 'n m'", line=hl)
    n, m = (_int(t, line=hl) for t in head)
    if n < 0 or m < 0:
        raise FormatError("negative count in header", line=hl)
    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] if body else hl)
        raise FormatError(f"header announces {m} edges, found {len(body)} lines", line=at)
    edges = []
    for ln, parts in body:
        if len(parts) != 2:
            raise FormatError("edge line must be 'u v'", line=ln)
        u, v = (_int(t, line=ln) for t in parts)
        _check_pair(n, u, v, line=ln)
        edges.append((u, v))
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(rows)


# -- DIMACS ------------------------------------------------------------------

def parse_dimacs_graph(text: str) -> Graph:
    n = None
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise FormatError("second problem line", line=ln)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError("problem line must be 'p edge n m'", line=ln)
            n = _int(parts[2], line=ln)
            _int(parts[3], line=ln)
            if n < 0:
                raise FormatError("negative vertex count", line=ln)
        elif parts[0] == "e":
            if n is None:
                raise FormatError("edge before the problem line", line=ln)
            if len(parts) != 3:
                raise FormatError("edge line must be 'e u v'", line=ln)
            u, v = (_int(t, line=ln) - 1 for t in parts[1:])
            _check_pair(n, u, v, line=ln)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown line type {parts[0]!r}", line=ln)
    if n is None:
        raise FormatError("missing problem line 'p edge n m'", line=1)
    return Graph(n, edges)


def emit_dimacs_graph(g: Graph) -> str:
    rows = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edge_list()]
    return "\n".join(rows)


# -- graph6 ------------------------------------------------------------------

def _graph6_size_prefix(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph6 cannot encode this many vertices")


def graph6_length(n: int) -> int:
    return len(_graph6_size_prefix(n)) + (n * (n - 1) // 2 + 5) // 6


def emit_graph6(g: Graph) -> str:
    n = g.n
    size = graph6_length(n)
    if size > GRAPH6_MAX_BYTES:
        raise ValueError(f"graph6 text for n={n} would take {size} bytes; use edge_list instead")
    nbits = n * (n - 1) // 2
    bits = np.zeros(((nbits + 5) // 6) * 6, dtype=np.uint8)
    if g.m:
        u, v = g.edges[:, 0], g.edges[:, 1]
        # column-major upper triangle: bit index of (i, j), i < j
        bits[v * (v - 1) // 2 + u] = 1
    six = bits.reshape(-1, 6) @ (1 << np.arange(5, -1, -1))
    body = bytes((six + 63).astype(np.uint8).tolist())
    return (_graph6_size_prefix(n) + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    data = s.encode("ascii", errors="replace")
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise FormatError(f"character {chr(data[i])!r} outside the graph6 range", offset=i)
    pos = start
    if pos >= len(data):
        raise FormatError("empty graph6 string", offset=pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        if pos + 8 > len(data):
            raise FormatError("truncated size field", offset=pos)
        n = 0
        for c in data[pos + 2:pos + 8]:
            n = (n << 6) | (c - 63)
        pos += 8
    else:
        if pos + 4 > len(data):
            raise FormatError("truncated size field", offset=pos)
        n = 0
        for c in data[pos + 1:pos + 4]:
            n = (n << 6) | (c - 63)
        pos += 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise FormatError(f"expected {need} data bytes for n={n}, found {len(body)}", offset=pos)
    if not need:
        return Graph(n)
    six = np.frombuffer(body, dtype=np.uint8).astype(np.int64) - 63
    bits = ((six[:, None] >> np.arange(5, -1, -1)) & 1).ravel()
    if bits[nbits:].any():
        raise FormatError("non-zero padding bits", offset=len(data) - 1)
    idx = np.flatnonzero(bits[:nbits])
    # invert k = j(j-1)/2 + i
    j = ((1 + np.sqrt(1 + 8 * idx.astype(np.float64))) // 2).astype(np.int64)
    j -= (j * (j - 1) // 2 > idx)
    j += ((j + 1) * j // 2 <= idx)
    i = idx - j * (j - 1) // 2
    return Graph(n, np.stack([i, j], axis=1))


# -- dispatch ----------------------------------------------------------------

_PARSERS = {"graph6": parse_graph6, "edge_list": parse_edge_list, "dimacs_graph": parse_dimacs_graph}
_EMITTERS = {"graph6": emit_graph6, "edge_list": emit_edge_list, "dimacs_graph": emit_dimacs_graph}


def _fmt(name: str) -> str:
    key = name.lower().replace("-", "_")
    if key in ("dimacs",):
        key = "dimacs_graph"
    if key not in _PARSERS:
        raise ValueError(f"unknown format {name!r}; expected one of {', '.join(FORMATS)}")
    return key


def parse_graph(text: str, fmt: str = "edge_list") -> Graph:
    parser = _PARSERS[_fmt(fmt)]
    try:
        return parser(text)
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def emit_graph(g: Graph, fmt: str = "edge_list") -> str:
    """Canonical text, no trailing newline."""
    return _EMITTERS[_fmt(fmt)](g)
