"""
Closed ideals with multiplicity below colength
===============================================

R2 = k[x,y,z]/(xy, xz) glues a line to a plane, so its components have
different dimensions. The ideals (x^n, y, z) are integrally closed, their
multiplicity stays at 1, and their colength grows with n. The inequality
detector notices that the ring is not equidimensional.
"""

from closurelab import (QQ, check_inequality, colength, ideal, make_ring, mult_hs,
                        stanley_reisner_closure)

R = make_ring(QQ, "xyz", relations=[lambda x, y, z: x * y, lambda x, y, z: x * z], name="R2")
x, y, z = R.gens

for n in range(1, 6):
    A = ideal(R, x ** n, y, z)
    closed = stanley_reisner_closure(A).closure == A
    print(f"n={n}  closed={closed}  e={mult_hs(A).value}  colength={colength(A)}")

# the detector explains the failure
report = check_inequality(ideal(R, x ** 3, y, z))
print(report.summary())
print(report.hypotheses)
