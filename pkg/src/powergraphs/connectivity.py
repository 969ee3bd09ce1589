"""Vertex and edge connectivity, minimum vertex cuts, and minimality predicates.

Fast routines:

* edge connectivity by Stoer-Wagner on the unit-weight adjacency matrix;
* vertex connectivity by unit-capacity max-flow on the node-split network,
  trying non-neighbours of a minimum-degree vertex ``v`` and non-adjacent
  pairs of its neighbours (every minimum cut either misses ``v`` or separates
  two of its neighbours).

Each has a brute-force twin that removes subsets smallest-first.  The twins
share no code with the fast paths beyond the graph type and are used as
oracles in the tests.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import (
    AnalysisCapExceeded,
    CapExceeded,
    CompleteGraph,
    DisconnectedGraph,
    EmptyGraph,
    TrivialGraph,
)
from .graphs import (
    Edge,
    SimpleGraph,
    articulation_points,
    connected_without,
    delete_edge,
    is_complete,
    is_connected,
    min_degree,
    universal_vertices,
)

DEFAULT_ANALYSIS_CAP = 2048
DEFAULT_ENUMERATION_CAP = 128
DEFAULT_MAX_SUBSETS = 2_000_000
BRUTE_VERTEX_CAP = 12
BRUTE_EDGE_CAP = 20


def _require_vertices(graph: SimpleGraph) -> None:
    if graph.vertex_count == 0:
        raise EmptyGraph("graph has no vertices")


# -- edge connectivity --------------------------------------------------------


def _stoer_wagner(weights: np.ndarray) -> int:
    w = weights.astype(np.int64)
    n = w.shape[0]
    alive = np.ones(n, dtype=bool)
    best = math.inf
    for remaining in range(n, 1, -1):
        in_a = ~alive
        keys = np.zeros(n, dtype=np.int64)
        first = int(np.flatnonzero(alive)[0])
        in_a[first] = True
        keys += w[first]
        prev = last = first
        cut = 0
        for _ in range(remaining - 1):
            masked = np.where(in_a, -1, keys)
            nxt = int(np.argmax(masked))
            cut = int(keys[nxt])
            in_a[nxt] = True
            keys += w[nxt]
            prev, last = last, nxt
        best = min(best, cut)
        if best == 0:
            break
        # merge `last` into `prev`
        w[prev] += w[last]
        w[:, prev] += w[:, last]
        w[prev, prev] = 0
        w[last] = 0
        w[:, last] = 0
        alive[last] = False
    return int(best)


def edge_connectivity(graph: SimpleGraph) -> int:
    """Fewest edges whose removal disconnects the graph (0 if disconnected or n = 1)."""
    _require_vertices(graph)
    if graph.vertex_count == 1 or not is_connected(graph):
        return 0
    return _stoer_wagner(graph.adjacency_matrix())


# -- vertex connectivity ------------------------------------------------------


class _SplitNetwork:
    """Node-split unit-capacity network: ``v`` becomes ``2v -> 2v+1``."""

    def __init__(self, graph: SimpleGraph):
        n = graph.vertex_count
        self.head: list[int] = []
        self.cap0: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(2 * n)]
        for v in range(n):
            self._arc(2 * v, 2 * v + 1)
        for u, v in graph.sorted_edges:
            self._arc(2 * u + 1, 2 * v)
            self._arc(2 * v + 1, 2 * u)

    def _arc(self, a: int, b: int) -> None:
        # arc ids come in pairs: forward k, reverse k ^ 1
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap0.append(1)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap0.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        """Internally vertex-disjoint ``s``-``t`` paths, stopping once ``limit`` are found."""
        cap = list(self.cap0)
        head, out = self.head, self.out
        source, sink = 2 * s + 1, 2 * t
        flow = 0
        while flow < limit:
            pred = {source: -1}
            q = deque([source])
            while q and sink not in pred:
                a = q.popleft()
                for arc in out[a]:
                    if cap[arc] and head[arc] not in pred:
                        pred[head[arc]] = arc
                        q.append(head[arc])
            if sink not in pred:
                break
            node = sink
            while node != source:
                arc = pred[node]
                cap[arc] -= 1
                cap[arc ^ 1] += 1
                node = head[arc ^ 1]
            flow += 1
        return flow


def local_vertex_connectivity(graph: SimpleGraph, s: int, t: int, limit: Optional[int] = None) -> int:
    """Size of a minimum ``s``-``t`` vertex separator for non-adjacent ``s != t``."""
    if s == t or graph.has_edge(s, t):
        raise ValueError("local vertex connectivity needs distinct non-adjacent vertices")
    bound = graph.vertex_count if limit is None else limit
    return _SplitNetwork(graph).max_flow(s, t, bound)


def vertex_connectivity(graph: SimpleGraph) -> int:
    """Fewest vertices whose removal disconnects the graph.

    ``K_n`` gets ``n - 1``; a disconnected graph and the one-vertex graph get 0.
    """
    _require_vertices(graph)
    n = graph.vertex_count
    if n == 1 or not is_connected(graph):
        return 0
    if is_complete(graph):
        return n - 1
    if articulation_points(graph):
        return 1
    best = min(min_degree(graph), n - 2)
    if best <= 2:
        return best
    adj = graph.adjacency
    v = min(range(n), key=lambda u: (graph.degrees[u], u))
    net = _SplitNetwork(graph)
    pairs = [(v, w) for w in range(n) if w != v and w not in adj[v]]
    nbrs = sorted(adj[v])
    pairs += [(x, y) for x, y in combinations(nbrs, 2) if y not in adj[x]]
    for s, t in pairs:
        best = min(best, net.max_flow(s, t, best))
        if best == 2:
            # no articulation point, so 2 is a lower bound
            break
    return best


# -- brute-force oracles --------------------------------------------------------


def brute_force_vertex_connectivity(graph: SimpleGraph, cap: int = BRUTE_VERTEX_CAP) -> int:
    """Remove vertex subsets smallest-first until the remainder falls apart."""
    _require_vertices(graph)
    n = graph.vertex_count
    if n > cap:
        raise CapExceeded(f"brute-force vertex connectivity capped at {cap} vertices, got {n}")
    if n == 1:
        return 0
    for k in range(n - 1):
        for removed in combinations(range(n), k):
            if not connected_without(graph, removed):
                return k
    return n - 1


def _connected_edges(n: int, edges) -> bool:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    parts = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            parts -= 1
    return parts <= 1


def brute_force_edge_connectivity(graph: SimpleGraph, cap: int = BRUTE_EDGE_CAP) -> int:
    """Remove edge subsets smallest-first until the graph falls apart."""
    _require_vertices(graph)
    n, m = graph.vertex_count, graph.edge_count
    if m > cap:
        raise CapExceeded(f"brute-force edge connectivity capped at {cap} edges, got {m}")
    if n == 1:
        return 0
    edges = graph.sorted_edges
    for k in range(m + 1):
        for removed in combinations(range(m), k):
            gone = set(removed)
            if not _connected_edges(n, (e for i, e in enumerate(edges) if i not in gone)):
                return k
    raise AssertionError("removing every edge must disconnect a graph with n >= 2")


def bipartition_edge_connectivity(graph: SimpleGraph, cap: int = BRUTE_VERTEX_CAP) -> int:
    """Smallest number of edges crossing any vertex bipartition, by exhaustion.

    Every inclusion-minimal disconnecting edge set is the set of edges leaving
    some vertex set S, so enumerating all ``2^(n-1) - 1`` bipartitions is exact.
    Usable where edge-subset enumeration is not (dense graphs on <= cap vertices).
    """
    _require_vertices(graph)
    n = graph.vertex_count
    if n > cap:
        raise CapExceeded(f"bipartition edge connectivity capped at {cap} vertices, got {n}")
    if n == 1:
        return 0
    # vertex n-1 always sits on the far side, so each bipartition is seen once
    best = graph.edge_count
    for mask in range(1, 1 << (n - 1)):
        crossing = sum(1 for u, v in graph.edges if ((mask >> u) ^ (mask >> v)) & 1)
        best = min(best, crossing)
    return best


# -- minimum vertex cuts ----------------------------------------------------------


def minimum_vertex_cuts(
    graph: SimpleGraph,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> list[frozenset[int]]:
    """Every vertex cut of size kappa, sorted by their sorted member tuples.

    A vertex adjacent to all others lies in every vertex cut, so only the
    remaining ``kappa - |universal|`` members are enumerated.
    """
    n = graph.vertex_count
    if n > enumeration_cap:
        raise CapExceeded(f"cut enumeration capped at {enumeration_cap} vertices, got {n}")
    _require_vertices(graph)
    if is_complete(graph):
        raise CompleteGraph("a complete graph has no separating set")
    if not is_connected(graph):
        raise DisconnectedGraph("minimum cuts are defined here for connected graphs only")
    k = vertex_connectivity(graph)
    forced = universal_vertices(graph)
    free = [v for v in range(n) if v not in set(forced)]
    need = k - len(forced)
    if need < 0:
        raise AssertionError("universal vertices exceed the connectivity")
    if math.comb(len(free), need) > max_subsets:
        raise CapExceeded(f"C({len(free)}, {need}) candidate cuts exceed {max_subsets}")
    cuts = []
    for extra in combinations(free, need):
        cut = frozenset(forced).union(extra)
        if not connected_without(graph, cut):
            cuts.append(cut)
    cuts.sort(key=sorted)
    return cuts


# -- minimality predicates ----------------------------------------------------------


@dataclass(frozen=True)
class MinimalityVerdict:
    """``verdict`` is ``None`` when the predicate does not apply (see ``reason``)."""

    verdict: Optional[bool]
    witness_edge: Optional[Edge] = None
    reason: Optional[str] = None
    before: Optional[int] = None
    after: Optional[int] = None

    def to_dict(self, labels=None) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.witness_edge is not None:
            u, v = self.witness_edge
            out["witnessEdge"] = [labels[u], labels[v]] if labels is not None else [u, v]
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _check_minimality_pre(graph: SimpleGraph) -> None:
    if graph.vertex_count < 2:
        raise TrivialGraph("minimality needs at least two vertices")
    if not is_connected(graph):
        raise DisconnectedGraph("minimality is defined for connected graphs")


def _minimality(graph: SimpleGraph, measure) -> MinimalityVerdict:
    _check_minimality_pre(graph)
    base = measure(graph)
    for edge in graph.sorted_edges:
        after = measure(delete_edge(graph, edge))
        if not base - 1 <= after <= base:
            raise AssertionError(f"deleting {edge} moved connectivity from {base} to {after}")
        if after != base - 1:
            # edges are scanned in sorted order, so this is the smallest failing edge
            return MinimalityVerdict(False, edge, before=base, after=after)
    return MinimalityVerdict(True, before=base)


def is_minimally_connected(graph: SimpleGraph) -> MinimalityVerdict:
    """Whether every edge deletion lowers kappa by exactly one."""
    return _minimality(graph, vertex_connectivity)


def is_minimally_edge_connected(graph: SimpleGraph) -> MinimalityVerdict:
    """Whether every edge deletion lowers kappa' by exactly one."""
    return _minimality(graph, edge_connectivity)


# -- aggregated report ----------------------------------------------------------------


@dataclass(frozen=True)
class ConnectivityReport:
    vertex_count: int
    edge_count: int
    min_degree: int
    vertex_connectivity: int
    edge_connectivity: int
    is_connected: bool
    minimally_connected: MinimalityVerdict
    minimally_edge_connected: MinimalityVerdict
    labels: tuple = field(default=(), repr=False, compare=False)

    def to_dict(self) -> dict:
        labels = self.labels or None
        return {
            "vertexCount": self.vertex_count,
            "edgeCount": self.edge_count,
            "minDegree": self.min_degree,
            "vertexConnectivity": self.vertex_connectivity,
            "edgeConnectivity": self.edge_connectivity,
            "isConnected": self.is_connected,
            "minimallyConnected": self.minimally_connected.to_dict(labels),
            "minimallyEdgeConnected": self.minimally_edge_connected.to_dict(labels),
        }


def _guarded(graph: SimpleGraph, predicate) -> MinimalityVerdict:
    if graph.vertex_count < 2:
        return MinimalityVerdict(None, reason="not-applicable: fewer than two vertices")
    if not is_connected(graph):
        return MinimalityVerdict(None, reason="not-applicable: graph is disconnected")
    return predicate(graph)


def analyze(graph: SimpleGraph, max_vertices: int = DEFAULT_ANALYSIS_CAP) -> ConnectivityReport:
    _require_vertices(graph)
    if graph.vertex_count > max_vertices:
        raise AnalysisCapExceeded(f"analysis capped at {max_vertices} vertices, got {graph.vertex_count}")
    return ConnectivityReport(
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        min_degree=min_degree(graph),
        vertex_connectivity=vertex_connectivity(graph),
        edge_connectivity=edge_connectivity(graph),
        is_connected=is_connected(graph),
        minimally_connected=_guarded(graph, is_minimally_connected),
        minimally_edge_connected=_guarded(graph, is_minimally_edge_connected),
        labels=graph.labels,
    )
