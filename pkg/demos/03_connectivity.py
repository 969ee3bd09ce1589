"""
Vertex and edge connectivity
============================

Fast algorithms (max-flow for kappa, Stoer-Wagner for kappa') next to the
exhaustive oracles, then the per-edge minimality predicates.
"""

from powergraphs.connectivity import (
    analyze,
    brute_force_edge_connectivity,
    brute_force_vertex_connectivity,
    edge_connectivity,
    minimum_vertex_cuts,
    vertex_connectivity,
)
from powergraphs.graphs import delete_edge
from powergraphs.groups import make
from powergraphs.powergraph import build_power_graph

z6 = build_power_graph(make("cyclic 6"))
g = z6.graph

# kappa and kappa' both equal the minimum degree here.
print("fast  kappa, kappa':", vertex_connectivity(g), edge_connectivity(g))
print("brute kappa, kappa':", brute_force_vertex_connectivity(g), brute_force_edge_connectivity(g))

# The only minimum vertex cut is {e, x, x^5}: the identity plus the generators.
for cut in minimum_vertex_cuts(g):
    print("cut:", sorted(z6.base.labels[v] for v in cut))

# Z6 is not minimally connected: some edge can go without lowering kappa.
report = analyze(g)
u, v = report.minimally_connected.witness_edge
print("witness edge:", z6.base.labels[u], z6.base.labels[v],
      "kappa after removal:", vertex_connectivity(delete_edge(g, (u, v))))

# Elementary abelian 3-group: minimally edge-connected but not minimally connected.
e32 = analyze(build_power_graph(make("elementary_abelian 3 2")).graph)
print(e32.to_dict())
