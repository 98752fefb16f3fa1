"""
Distance between algebras = how long their jets stay isomorphic
===============================================================

d(R, S) = 2^(-b) where b is the last order at which the jets agree.  The
computed answer is an interval [lower, upper]; it collapses to a point when
the first disagreeing order is found right after the last agreeing one.
"""

from jetmetric import ball_descriptor, jet, jet_distance, parse_presentation

x2 = parse_presentation("ring Q[x]\ngraded\nideal: x^2")
x3 = parse_presentation("ring Q[x]\ngraded\nideal: x^3")

v = jet_distance(x2, x3, 6)
print("d(k[x]/x^2, k[x]/x^3) in [%s, %s], exact=%s" % (v.lower, v.upper, v.exact))
for n, s in v.per_order:
    print("  order", n, "->", s.status)

# Different numbers of variables separate at order 2 already:
line = parse_presentation("ring Q[x]\ngraded\nideal: ;")
plane = parse_presentation("ring Q[x, y]\ngraded\nideal: ;")
w = jet_distance(line, plane, 5)
print("d(line, plane) =", w.upper, "exact =", w.exact)

# comparing a presentation with itself: every order certifies ISO, so the
# upper bound keeps halving but the lower bound stays 0 -- finite evidence
# never proves two algebras are literally the same point of the space
cusp = parse_presentation("ring Q[x, y]\nlocal\nideal: y^2 - x^3")
u = jet_distance(cusp, cusp, 6)
print("self-distance interval:", u.lower, "to", u.upper)

# every Artinian local ring also names a ball of the space: all algebras
# whose jets factor through it; the radius comes from the nilpotency index
B = ball_descriptor(jet(cusp, 4))
print("ball around the order-4 jet has radius", B.radius)
