"""Graded dimension counts: rational series, growth polynomials, and the
Euler characteristic of a projective curve read off its section ring."""

from jetmetric import euler_characteristic, hilbert_series, parse_presentation
from jetmetric.hilbert import poly_eval

quartic = parse_presentation("ring Q[x, y, z]\ngraded\nideal: x^4 + y^4 + z^4")

hd = hilbert_series(quartic)
print("series prefix:", hd.series_prefix[:8])
print("numerator Q(t):", hd.numerator)          # after cancelling (1 - t)'s
print("pole order (Krull dimension):", hd.pole_order)
print("multiplicity e = Q(1):", hd.mult)

# beyond the numerator degree the dimensions follow a polynomial exactly
print("degreewise polynomial:", hd.degreewise)
checks = [(n, poly_eval(hd.degreewise, n), hd.series_prefix[n])
          for n in range(4, 9)]
print("polynomial vs count:", checks)

# chi = 1 - g for a curve, so the smooth plane quartic (genus 3) gives -2
chi, genus = euler_characteristic(quartic)
print("Euler characteristic:", chi, " genus:", genus)

for d in (3, 5):
    p = parse_presentation(f"ring Q[x, y, z]\ngraded\nideal: x^{d} + y^{d} + z^{d}")
    print(f"degree {d}: chi, genus = {euler_characteristic(p)}")
