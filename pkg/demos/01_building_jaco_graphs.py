# Building J_n(1) and looking at its shape.
#
# Vertex v_i sends arcs forward to every v_j with i < j <= 2i - indeg(v_i),
# clipped at n.  Early vertices barely reach ahead, later ones reach far, so
# the tail of the graph fills up into a clique.

from jaco import build_jaco, hope_graph, prime_jaconian

jg = build_jaco(10)
print("arcs of J_10:")
for i in range(1, jg.n + 1):
    print(f"  v{i:<2} in={jg.indeg(i)} out={jg.outdeg(i)} ->", jg.out_neighbors(i))

# Degree grows like the index until the arcs hit the end of the graph.
print("degrees:", jg.underlying.degrees())

# The first vertex of maximum degree splits the graph.  Everything after it
# is complete, which is what makes the closed forms below work.
i = prime_jaconian(jg)
h, labels = hope_graph(jg)
print(f"prime Jaconian vertex v{i}; tail {labels} is K_{h.n}: {len(h.edges) == h.n * (h.n - 1) // 2}")

# The in-degree of v_i never depends on n, so larger graphs extend smaller ones.
small, big = build_jaco(12), build_jaco(30)
print("J_12 is a prefix of J_30:", small.in_degree[1:] == big.in_degree[1:13])

print()
print(jg.to_dot(directed=True))
