import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from powergraphs.graphs import SimpleGraph
from powergraphs.groups import make
from powergraphs.powergraph import build_power_graph
from powergraphs.theorems import load_catalog


def power_graph_of(spec: str):
    return build_power_graph(make(spec)).graph


def naive_power_edges(g):
    """Edges by repeated multiplication: y ~ x iff y = x^k for some 1 <= k <= n."""
    n = g.order
    edges = set()
    for x in range(n):
        p = x
        for _ in range(n):
            if p != x:
                edges.add((min(x, p), max(x, p)))
            p = g.mul(p, x)
    return edges


def quaternion_units():
    """The eight unit quaternions as (w, x, y, z) tuples; 1 comes first."""
    units = []
    for i in range(4):
        for s in (1, -1):
            v = [0, 0, 0, 0]
            v[i] = s
            units.append(tuple(v))
    return units


def quat_mul(a, b):
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return (
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


def element_order_by_powers(mul, identity, x):
    k, p = 1, x
    while p != identity:
        p = mul(p, x)
        k += 1
    return k


@pytest.fixture(scope="session")
def catalog():
    return load_catalog("default")


@pytest.fixture(scope="session")
def fast_catalog_groups(catalog):
    return [(str(e.spec), make(e.spec)) for e in catalog.entries if not e.slow]


@st.composite
def graphs(draw, max_vertices=9, max_edges=20, connected=False):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(max_edges, len(pairs)))) if pairs else []
    if connected:
        # splice in a random spanning path so the graph is connected
        order = draw(st.permutations(range(n)))
        path = [tuple(sorted(e)) for e in zip(order, order[1:])]
        chosen = list(set(chosen) | set(path))
    return SimpleGraph.from_edges(n, chosen)


def random_connected_graph(rng: np.random.Generator, max_vertices=10, max_edges=20):
    """Spanning tree plus random extra edges; at most ``max_edges`` edges."""
    n = int(rng.integers(2, max_vertices + 1))
    perm = rng.permutation(n)
    edges = {tuple(sorted((int(perm[i]), int(perm[rng.integers(0, i)])))) for i in range(1, n)}
    pairs = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    extra = int(rng.integers(0, min(max_edges - len(edges), len(pairs)) + 1))
    for idx in rng.choice(len(pairs), size=extra, replace=False) if extra else []:
        edges.add(pairs[int(idx)])
    return SimpleGraph.from_edges(n, edges)
