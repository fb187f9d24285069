# Independence, covering, chromatic and domination numbers without search.
#
# Each closed form is printed next to a brute-force value so the two can be
# compared by eye.

from jaco import oracles
from jaco.closed_forms import (
    chromatic_closed_form,
    covering_number,
    gamma_recursion,
    independence_trace,
)
from jaco.jacograph import build_jaco

print(" n  trace           alpha  oracle  beta  chi  oracle  gamma  oracle")
for n in range(1, 19):
    jg = build_jaco(n)
    g = jg.underlying
    tr = independence_trace(jg)
    print(f"{n:>2}  {str(list(tr.chosen)):<15} {tr.alpha:>5}  {oracles.alpha_oracle(g):>6}"
          f"  {covering_number(jg):>4}  {chromatic_closed_form(jg):>3}  {oracles.chi_oracle(g):>6}"
          f"  {gamma_recursion(n):>5}  {oracles.gamma_oracle(g):>6}")

# The recursion keeps working long after the oracles become too slow.
print("gamma(J_n) for n = 100, 500, 1000:", [gamma_recursion(n) for n in (100, 500, 1000)])
