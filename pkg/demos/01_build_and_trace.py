"""Build 4-regular multigraphs and trace their circuit partitions.

Every vertex of a 4-regular multigraph has four half-edge slots, 0..3.
An edge pairs two slots; loops (both slots on one vertex) and parallel
edges are ordinary citizens.  Choosing one of the three possible
pairings of the four slots at every vertex cuts the edge set into
edge-disjoint closed walks: a circuit partition.
"""

from interlacement import (
    HalfEdge,
    TRANSITIONS,
    TransitionSystem,
    build_graph,
    connected_components,
    trace_partition,
)

# two vertices, a loop on each, and a double edge between them
g = build_graph(
    ("x", "y"),
    [
        (HalfEdge("x", 0), HalfEdge("x", 1)),
        (HalfEdge("y", 0), HalfEdge("y", 1)),
        (HalfEdge("x", 2), HalfEdge("y", 2)),
        (HalfEdge("x", 3), HalfEdge("y", 3)),
    ],
)
print("graph:", ", ".join(f"{a.vertex}.{a.slot}-{b.vertex}.{b.slot}" for a, b in g.edges))
print("components:", connected_components(g))
print()

# the three transitions, as slot pairings
print("available transitions per vertex:", [t.value for t in TRANSITIONS])
print()

# sweep all 9 transition systems of this graph and show the partitions
for cx in range(3):
    for cy in range(3):
        ts = TransitionSystem((cx, cy))
        p = trace_partition(g, ts)
        walks = []
        for circ in p.circuits:
            verts = [g.vertices[h >> 2] for h, _ in circ.crossings]
            walks.append("(" + " ".join(verts) + ")")
        print(
            f"x:{TRANSITIONS[cx].value} y:{TRANSITIONS[cy].value}"
            f" -> {p.size} circuit(s) {' '.join(walks)}"
        )
