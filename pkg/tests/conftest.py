import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from zykov import generators, graph as G  # noqa: E402


def random_graph(rng, n, p=None):
    p = rng.uniform(0.15, 0.6) if p is None else p
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return G.Graph(n, pairs)


def random_graphs(count, n_max, seed, n_min=1):
    rng = np.random.default_rng(seed)
    return [random_graph(rng, int(rng.integers(n_min, n_max + 1))) for _ in range(count)]


def gallery_graphs():
    out = {
        "F": generators.gallery("F").graph,
        "F_prime": generators.gallery("F_prime").graph,
        "H": generators.gallery("H").graph,
        "L": generators.gallery("L").graph,
        "tw2": generators.gallery("tw2").graph,
        "petersen": generators.gallery("petersen").graph,
    }
    for n in range(3, 10):
        out[f"C{n}"] = G.cycle(n)
    for n in range(1, 6):
        out[f"P{n}"] = G.path(n)
        out[f"K{n}"] = G.complete(n)
    out["K33"] = G.complete_bipartite(3, 3)
    out["K23"] = G.complete_bipartite(2, 3)
    out["E4"] = G.edgeless(4)
    out["sK4"] = G.subdivide(G.complete(4), 1)
    for k in range(1, 5):
        out[f"Z{k}"] = generators.zykov(k).graph
    out["D2"] = generators.descartes(2).graph
    out["D3"] = generators.descartes(3).graph
    return out


def corpus():
    """Named graphs plus seeded random ones; the shared test corpus."""
    out = dict(gallery_graphs())
    for i, g in enumerate(random_graphs(60, 9, seed=2024)):
        out[f"rand{i}"] = g
    out["empty"] = G.Graph(0)
    return out


@pytest.fixture(scope="session")
def gallery():
    return gallery_graphs()


# -- acceptance report -------------------------------------------------------

ACCEPTANCE: dict[int, str] = {}


def record(num, title, ok, detail):
    line = f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE[num] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
