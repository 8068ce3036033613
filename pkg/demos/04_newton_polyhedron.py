"""
Integral closure of monomial ideals
====================================

In a polynomial ring the integral closure of a monomial ideal is spanned
by the monomials in the convex hull of its exponents plus the orthant.
Here we compare that with the brute force definition on one example.
"""

from closurelab import QQ, ideal, in_newton_polyhedron, monomial_integral_closure, polynomial_ring

P = polynomial_ring(QQ, "xy")
x, y = P.gens

A = ideal(P, x ** 4, y ** 3)
C = monomial_integral_closure(A).closure
print("closure of", A, "is", C)

# x^2 y^2 lies on the far side of the segment from (4,0) to (0,3)
print(in_newton_polyhedron((2, 2), [(4, 0), (0, 3)]))
print(in_newton_polyhedron((2, 1), [(4, 0), (0, 3)]))

# brute force: f is integral iff f^k lies in A^k for some k
f = x ** 2 * y ** 2
print(any((f ** k) in A ** k for k in range(1, 5)))
