"""Minimal free resolutions, Betti numbers, and the ring-theoretic flags
(regular / Cohen-Macaulay / Gorenstein) they decide."""

from jetmetric import (
    betti_residue_field,
    depth_and_classify,
    minimal_resolution_of_quotient,
    parse_presentation,
)

fat = parse_presentation("ring Q[x, y]\ngraded\nideal: x^2, x*y, y^2")

# resolution of the quotient ring: 0 <- R/I <- R <- R(-2)^3 <- R(-3)^2 <- 0
res = minimal_resolution_of_quotient(fat)
print("ranks:", [res.rank(i) for i in range(res.pd + 1)])
print("graded Betti numbers:", dict(sorted(res.betti.items())))
print("complete:", res.complete, " pd:", res.pd)

# resolution of the residue field over the quotient: infinite for singular
# rings, and the truncated table says so honestly (complete = False)
k_res = betti_residue_field(fat, 8)
print("\nresidue-field Betti numbers:", [k_res.rank(i) for i in range(9)])
print("claimed finite?", k_res.complete)

# over the double point the pattern is periodic instead of exponential
double = parse_presentation("ring Q[x]\ngraded\nideal: x^2")
print("over k[x]/x^2:", [betti_residue_field(double, 6).rank(i) for i in range(7)])

print()
for text in [
    "ring Q[x, y]\ngraded\nideal: ;",
    "ring Q[x, y, z]\ngraded\nideal: x^4 + y^4 + z^4",
    "ring Q[x, y]\ngraded\nideal: x^2, x*y",
    "ring Q[x, y]\ngraded\nideal: x^2, y^3",
]:
    p = parse_presentation(text)
    c = depth_and_classify(p)
    flags = []
    if c.regular:
        flags.append("regular")
    if c.cohen_macaulay:
        flags.append("CM")
    if c.gorenstein:
        flags.append("Gorenstein")
    elif c.gorenstein is None:
        flags.append("Gorenstein?")
    print(f"{text.splitlines()[-1]:40s} depth {c.depth} dim {c.dim}  "
          + " ".join(flags))
