# Dominating sets, private neighbours and the murtage number.
#
# The murtage number m(G) is the fewest edges whose addition lowers gamma.
# It can be read off a well-chosen minimum dominating set: give every
# vertex to a dominator, find the smallest cell, and count.

from jaco import analyze_gamma_set, compact_gamma_sets, murtage_exact, murtage_via_theorem
from jaco.graph import add_edges, path_graph
from jaco.domination import gamma
from jaco.jacograph import build_jaco

p4 = path_graph(4)
for x in ([1, 3], [2, 3]):
    a = analyze_gamma_set(p4, x)
    print(f"P_4 with {x}: partition {a.partition}  sequence {a.dom_sequence}  theta {a.theta}")

p5 = path_graph(5)
best = compact_gamma_sets(p5)[0]
print("compact set of P_5:", best.gamma_set, "partition", best.partition)

g = build_jaco(9).underlying
res = murtage_via_theorem(g)
print(f"m(J_9) = {res.value}; adding {list(res.witness_edges)} drops gamma "
      f"from {gamma(g)} to {gamma(add_edges(g, res.witness_edges))}")

print("m(J_n), n = 1..20:", [murtage_exact(build_jaco(n).underlying).value for n in range(1, 21)])
