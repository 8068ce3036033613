"""
Iterated saturation depends on the order of the sequence
=========================================================

The toric ring R4 = k[s^4, s^3 t, s t^3, t^4] is a domain of dimension 2
that is not Cohen-Macaulay. Saturating along a and then d gives a
different ideal than saturating along d and then a, yet both have the
same colength, and that colength is the multiplicity of (a, d).
"""

from closurelab import QQ, colength, ideal, infty_ideal, mult_hs, mult_param, toric_ring

R = toric_ring(QQ, [[4, 0], [3, 1], [1, 3], [0, 4]], "abcd", name="R4")
a, b, c, d = R.gens
print(R)

# the two orders
ad = infty_ideal(R, [a, d])
da = infty_ideal(R, [d, a])
print("a then d:", ad.closure)
print("d then a:", da.closure)
print("same ideal?", ad.closure == da.closure)

# both colengths agree with the multiplicity
print("colengths:", colength(ad.closure), colength(da.closure))
print("e via parameters:", mult_param(R, [a, d]).value)
print("e via Hilbert-Samuel:", mult_hs(ideal(R, a, d)).value)

# the parameter ideal itself is smaller
print("colength of (a, d):", colength(ideal(R, a, d)))
