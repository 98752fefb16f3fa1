"""
Reading the dimension off finite jets
=====================================

The length of the order-n jet of a d-dimensional algebra grows like
e n^d / d!.  Comparing the lengths at order n and n/2 therefore estimates d
without ever leaving exact arithmetic -- and a certified bound on the
normalized defect says exactly when rounding the estimate is safe.
"""

from fractions import Fraction

from jetmetric import (
    delta0_at_order,
    jet,
    length_model,
    parse_presentation,
    quasi_dimension,
    rho,
    slope_trace,
)

space = parse_presentation("ring Q[x, y, z]\ngraded\nideal: ;")

# the length model evaluates jet lengths at any order in O(1) once the
# growth polynomial is certified
m = length_model(space)
print("lengths at 10, 100, 1000:", [m.length(n) for n in (10, 100, 1000)])

for n in (10, 50, 200):
    v = delta0_at_order(m, n)
    print(f"order {n}: ratio {v.ratio} ~ 2^{v.rounded()}")

# the defect sup rho controls how soon the rounding locks on
r = rho(space)
print("rho =", r.value, "attained at n =", r.argmax_n,
      "with tail limit", r.tail_limit)

qd, cert = quasi_dimension(space)
print("quasi-dimension:", qd, cert)

# for a curve germ the same machinery needs no grading at all
cusp = parse_presentation("ring Q[x, y]\nlocal\nideal: y^2 - x^3")
print("cusp:", quasi_dimension(cusp))
print("cusp rho:", rho(cusp).value)

# slope traces show the convergence order by order
tr = slope_trace(space, "delta0", [8, 16, 32, 64])
print("trace:", [str(v.ratio) for v in tr.values], "->", tr.limit_claim)

# sanity: the ratio at a modest order already matches a literally-built jet
assert delta0_at_order(m, 20).ratio == Fraction(jet(space, 20, capacity=3000).dim,
                                                jet(space, 10).dim)
print("ratio cross-checked against explicit jets")
