"""Power graphs of finite groups.

Two distinct elements are joined when one is a positive power of the other.
Vertex ``i`` of the graph is element ``i`` of the group, and the graph labels
are the element indices, so vertex surgery keeps the identification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .graphs import SimpleGraph, delete_vertices, export_adjacency, export_dot
from .groups import FiniteGroup


@dataclass(frozen=True, eq=False)
class PowerGraph:
    base: FiniteGroup
    graph: SimpleGraph

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def element_names(self) -> list[str]:
        return [self.base.label(x) for x in range(self.base.order)]


def power_adjacency(g: FiniteGroup) -> np.ndarray:
    """``A[x, y]`` iff ``x != y`` and one of them lies in the other's cyclic subgroup."""
    m = g.power_matrix
    adj = m | m.T
    np.fill_diagonal(adj, False)
    return adj


def build_power_graph(g: FiniteGroup) -> PowerGraph:
    return PowerGraph(g, SimpleGraph.from_matrix(power_adjacency(g)))


def reduced_graph(pg: PowerGraph) -> SimpleGraph:
    """The power graph with the identity vertex removed; labels keep element indices."""
    return delete_vertices(pg.graph, [0])


def graph_of(obj: Union[PowerGraph, SimpleGraph]) -> SimpleGraph:
    return obj.graph if isinstance(obj, PowerGraph) else obj


def power_graph_dot(pg: PowerGraph, reduced: bool = False) -> str:
    names = pg.element_names()
    if reduced:
        sub = reduced_graph(pg)
        return export_dot(sub, [names[lab] for lab in sub.labels], title=pg.base.name)
    return export_dot(pg.graph, names, title=pg.base.name)


def power_graph_adjacency_text(pg: PowerGraph, reduced: bool = False) -> str:
    return export_adjacency(reduced_graph(pg) if reduced else pg.graph)
