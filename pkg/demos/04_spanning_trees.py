# Spanning trees that keep max degree, gamma and m.
#
# Each cell of the partition becomes a star around its dominator, and the
# stars are glued into a tree.  Trees and all J_n behave; arbitrary graphs
# sometimes do not.

from jaco import spanning_tree_preserving
from jaco.graph import cycle_graph
from jaco.jacograph import build_jaco
from jaco.verify import random_connected_graphs

for name, g in [("J_6", build_jaco(6).underlying), ("J_13", build_jaco(13).underlying),
                ("C_7", cycle_graph(7))]:
    r = spanning_tree_preserving(g)
    print(f"{name}: tree {r.tree.sorted_edges()}")
    print(f"     Delta {r.host_max_degree}->{r.tree_max_degree}  gamma {r.host_gamma}->{r.tree_gamma}"
          f"  m {r.host_murtage}->{r.tree_murtage}  via {r.branch}")

lost = 0
for g in random_connected_graphs(100, seed=3):
    if not spanning_tree_preserving(g).preserved:
        lost += 1
print(f"random graphs where the tree loses something: {lost} of 100")
