"""
Power graphs and their reduced versions
=======================================

Two elements are adjacent when one is a power of the other.  Deleting the
identity gives the reduced graph.
"""

from powergraphs.graphs import blocks, connected_components, is_complete, is_regular
from powergraphs.groups import make
from powergraphs.powergraph import build_power_graph, power_graph_dot, reduced_graph

# A cyclic group of prime order gives a complete graph.
z5 = build_power_graph(make("cyclic 5"))
print("Z5 complete:", is_complete(z5.graph), "edges:", z5.graph.edge_count)

# Z6 is not complete: x^2 and x^3 generate different subgroups of coprime order.
z6 = build_power_graph(make("cyclic 6"))
print("Z6 complete:", is_complete(z6.graph))
print(power_graph_dot(z6))

# Prime exponent: the graph is a bouquet of p-cliques glued at the identity.
h3 = build_power_graph(make("heisenberg 3"))
print("H3 blocks:", len(blocks(h3.graph)), "sizes:", sorted({len(b) for b in blocks(h3.graph)}))

# Removing the identity leaves 13 disjoint edges, a 1-regular graph.
red = reduced_graph(h3)
print("reduced components:", len(connected_components(red)), "regular:", is_regular(red))

# Q_8 is a 2-group but not of prime exponent, and its reduced graph is irregular.
q8 = reduced_graph(build_power_graph(make("quaternion 8")))
print("Q8 reduced degrees:", sorted(q8.degrees))
