"""Deciding isomorphism of Artinian algebras, with certificates both ways."""

from jetmetric import (
    SearchBudget,
    decide_isomorphism,
    invariant_signature,
    jet,
    parse_presentation,
    verify_witness,
)

budget = SearchBudget(ext_degree_max=2, effort=500_000)

# Two quadrics over F_3 that only become equivalent after passing to F_9:
# x^2 + y^2 is irreducible over F_3 but splits as a product of two linear
# forms once a square root of -1 exists.
a = jet(parse_presentation("ring F_3[x, y]\ngraded\nideal: x^2 + y^2"), 3)
b = jet(parse_presentation("ring F_3[x, y]\ngraded\nideal: x*y"), 3)

v = decide_isomorphism(a, b, budget)
print("status:", v.status)
print("base-change multiple:", v.witness.ext_multiple)
print("witness verifies:", verify_witness(a, b, v.witness))

# A pair that is genuinely different gets a separator instead: a named
# invariant with the two (distinct) values attached.
c = jet(parse_presentation("ring Q[x, y]\ngraded\nideal: x^2, x*y, y^2"), 4)
d = jet(parse_presentation("ring Q[x, y]\ngraded\nideal: x^2, y^2"), 4)
w = decide_isomorphism(c, d)
print()
print("status:", w.status)
name, va, vb = w.separator
print(f"separator: {name} = {va} vs {vb}")

# The separator re-evaluates from scratch -- nothing is taken on faith.
print("recheck:", getattr(invariant_signature(c), name),
      getattr(invariant_signature(d), name))

# And when neither a witness nor a separator is found inside the budget the
# answer is an honest UNKNOWN with the searched bounds attached.
e = jet(parse_presentation("ring Q[x, y]\nlocal\nideal: y^2 - x^3"), 5)
f = jet(parse_presentation("ring Q[x, y]\nlocal\nideal: y^2 - x^3 - x^4"), 5)
u = decide_isomorphism(e, f, SearchBudget(ext_degree_max=1, effort=50))
print()
print("tight budget gives:", u.status, u.search_bounds)
