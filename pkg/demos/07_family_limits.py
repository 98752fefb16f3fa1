"""A 1-parameter family degenerating to a double line.

y^2 - x^w for growing w: once w reaches the jet order, the x^w term falls
below the truncation and the jets freeze.  limit_jets detects the freezing
point and certifies the limit.
"""

from jetmetric import (
    FamilyTemplate,
    decide_isomorphism,
    instantiate_template,
    jet,
    limit_jets,
    parse_presentation,
)

tpl = FamilyTemplate("ring Q[x, y]\nlocal\nideal: y^2 - x^w", 1, 10)

for w in (1, 2, 3, 6):
    p = instantiate_template(tpl, w)
    print(f"w = {w}: order-4 jet length {jet(p, 4).dim}")

for order in (3, 4, 5):
    last, w0 = limit_jets(tpl, order)
    print(f"order {order}: jets stabilize from w = {w0}")

# the limit is the jet of the double line y^2 = 0
target = jet(parse_presentation("ring Q[x, y]\nlocal\nideal: y^2"), 5)
last, _ = limit_jets(tpl, 5)
print("limit matches y^2:", decide_isomorphism(last, target).status)
