"""Plain undirected simple graphs and the structural queries used on power graphs.

Vertices are ``0..n-1``.  Each graph also carries a tuple of labels that
survives surgery: deleting vertices renumbers the survivors but keeps their
original labels, so a cut found in ``G - S`` can be mapped back to group
elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Optional, Sequence

import numpy as np

from .errors import EmptyGraph, MissingEdge, MissingVertex

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[Edge]
    labels: tuple[Hashable, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels: Optional[Sequence[Hashable]] = None) -> "SimpleGraph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            norm.add(_norm(u, v))
        labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(labels) != n:
            raise ValueError("label count does not match vertex count")
        return cls(n, frozenset(norm), labels)

    @classmethod
    def from_matrix(cls, adj: np.ndarray, labels: Optional[Sequence[Hashable]] = None) -> "SimpleGraph":
        adj = np.asarray(adj, dtype=bool)
        us, vs = np.nonzero(np.triu(adj, 1))
        return cls.from_edges(adj.shape[0], zip(us.tolist(), vs.tolist()), labels)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> "SimpleGraph":
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    def __repr__(self) -> str:
        return f"<SimpleGraph n={self.vertex_count} m={self.edge_count}>"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
        if self.edges:
            e = np.array(self.sorted_edges)
            m[e[:, 0], e[:, 1]] = True
            m[e[:, 1], e[:, 0]] = True
        return m

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def index_of(self, label: Hashable) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise MissingVertex(f"no vertex labelled {label!r}") from None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise MissingVertex(f"vertex {v} not in graph on {self.vertex_count} vertices")


# -- degrees and global shape ---------------------------------------------


def degree(graph: SimpleGraph, v: int) -> int:
    graph._check_vertex(v)
    return graph.degrees[v]


def min_degree(graph: SimpleGraph) -> int:
    if graph.vertex_count == 0:
        raise EmptyGraph("minimum degree of a graph with no vertices")
    return min(graph.degrees)


def is_complete(graph: SimpleGraph) -> bool:
    n = graph.vertex_count
    return graph.edge_count == n * (n - 1) // 2


def is_regular(graph: SimpleGraph) -> bool:
    return len(set(graph.degrees)) <= 1


def universal_vertices(graph: SimpleGraph) -> list[int]:
    """Vertices adjacent to every other vertex."""
    n = graph.vertex_count
    return [v for v in range(n) if graph.degrees[v] == n - 1]


def is_star(graph: SimpleGraph) -> bool:
    """A tree with one centre joined to all other vertices (at least 3 vertices)."""
    n = graph.vertex_count
    if n < 3 or graph.edge_count != n - 1:
        return False
    return sorted(graph.degrees) == [1] * (n - 1) + [n - 1]


# -- traversal ---------------------------------------------------------------


def connected_components(graph: SimpleGraph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = [False] * graph.vertex_count
    adj = graph.adjacency
    comps = []
    for s in range(graph.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(graph: SimpleGraph) -> bool:
    """True for graphs with one component; the empty graph counts as connected."""
    return len(connected_components(graph)) <= 1


def connected_without(graph: SimpleGraph, removed: Iterable[int]) -> bool:
    """Whether ``graph - removed`` is connected (vacuously true below 2 vertices)."""
    removed = set(removed)
    n = graph.vertex_count
    start = next((v for v in range(n) if v not in removed), None)
    if start is None:
        return True
    adj = graph.adjacency
    seen = set(removed)
    seen.add(start)
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _biconnected(graph: SimpleGraph) -> tuple[list[frozenset[int]], set[int]]:
    """Iterative Hopcroft-Tarjan low-point search: blocks and cut vertices."""
    n = graph.vertex_count
    adj = [sorted(a) for a in graph.adjacency]
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, u):
                        break
                blocks.append(frozenset(block))
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=sorted)
    return blocks, cuts


def blocks(graph: SimpleGraph) -> list[frozenset[int]]:
    """Biconnected components as vertex sets; a bridge is a 2-vertex block.

    Isolated vertices carry no edges and form no block.
    """
    return _biconnected(graph)[0]


def articulation_points(graph: SimpleGraph) -> list[int]:
    return sorted(_biconnected(graph)[1])


# -- surgery -----------------------------------------------------------------


def delete_edge(graph: SimpleGraph, edge: Sequence[int]) -> SimpleGraph:
    u, v = edge
    e = _norm(int(u), int(v))
    if e not in graph.edges:
        raise MissingEdge(f"edge {e} not in graph")
    return SimpleGraph(graph.vertex_count, graph.edges - {e}, graph.labels)


def induced_subgraph(graph: SimpleGraph, keep: Iterable[int]) -> SimpleGraph:
    """Subgraph on ``keep`` renumbered in increasing order; labels follow."""
    keep = sorted(set(keep))
    for v in keep:
        graph._check_vertex(v)
    new = {v: i for i, v in enumerate(keep)}
    edges = [(new[u], new[v]) for u, v in graph.edges if u in new and v in new]
    return SimpleGraph.from_edges(len(keep), edges, [graph.labels[v] for v in keep])


def delete_vertices(graph: SimpleGraph, removed: Iterable[int]) -> SimpleGraph:
    removed = set(removed)
    for v in removed:
        graph._check_vertex(v)
    return induced_subgraph(graph, (v for v in range(graph.vertex_count) if v not in removed))


# -- text exports ------------------------------------------------------------


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph: SimpleGraph, names: Optional[Sequence[str]] = None, title: str = "") -> str:
    """DOT text; vertices are identified by index and carry a display label."""
    lines = [f"graph {_quote(title)} {{" if title else "graph {"]
    for v in range(graph.vertex_count):
        name = str(names[v] if names is not None else graph.labels[v])
        lines.append(f"  {v};" if name == str(v) else f"  {v} [label={_quote(name)}];")
    for u, v in graph.sorted_edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_adjacency(graph: SimpleGraph) -> str:
    """One line per vertex, ``"label: nbr nbr ..."`` using labels and sorted neighbours."""
    lines = []
    for v in range(graph.vertex_count):
        nbrs = " ".join(str(graph.labels[w]) for w in sorted(graph.adjacency[v]))
        lines.append(f"{graph.labels[v]}: {nbrs}".rstrip())
    return "\n".join(lines) + "\n"
