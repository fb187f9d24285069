# Comparing published values with computed ones.
#
# Each check yields a record with a verdict.  DISAGREE means a published
# number could not be reproduced; the record carries a witness so the
# discrepancy can be checked by hand.

from jaco import disjoint_union_check, verify
from jaco.graph import path_graph, remove_edges
from jaco.domination import gamma
from jaco.jacograph import build_jaco

for r in verify.claim_table_records(1, 13):
    if r.verdict == verify.AGREE:
        continue
    w = r.witness or {}
    extra = w.get("unlisted") or w.get("extra") or w.get("partition")
    print(f"{r.claim_id:<22} {r.graph:<5} claimed {r.paper_value}")
    print(f"{'':<28} found {str(extra)[:70]}")

print()
recs = verify.verify_range(2, 12, ("bondage",))
for r in recs:
    if r.verdict == verify.DISAGREE:
        g = build_jaco(int(r.graph[2:])).underlying
        # no single edge removal raises gamma, but this pair does
        h = remove_edges(g, [tuple(e) for e in r.witness])
        print(f"{r.graph}: claimed bondage 1, found {r.computed['oracle']}; "
              f"removing {r.witness} takes gamma from {gamma(g)} to {gamma(h)}")

# m of a disjoint union is not the sum of the parts.
u = disjoint_union_check([path_graph(4), path_graph(4)])
print(f"2P_4: gamma {u.gamma_union} = {u.gamma_sum}, m {u.murtage_union} vs sum {u.murtage_sum}")
