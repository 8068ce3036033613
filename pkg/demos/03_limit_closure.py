"""
Limit closure and the Cohen-Macaulay test
==========================================

R3 = k[a,b,c,d]/(a,b)∩(c,d) is two planes meeting in a point. For the
parameters a+c, b+d the limit closure is already the maximal ideal, while
the multiplicity is 2. A Cohen-Macaulay ring would have colength of the
limit closure equal to e, so R3 is not Cohen-Macaulay.
"""

from closurelab import (QQ, check_chain, check_cm_via_lim, colength, limit_closure, make_ring,
                        maximal_ideal, mult_param)

R = make_ring(QQ, "abcd", relations=[lambda a, b, c, d: a * c, lambda a, b, c, d: a * d,
                                     lambda a, b, c, d: b * c, lambda a, b, c, d: b * d], name="R3")
a, b, c, d = R.gens
seq = [a + c, b + d]

lim = limit_closure(R, seq)
print("limit closure:", lim.closure, " equal to m?", lim.closure == maximal_ideal(R))
print("stabilised at n =", lim.diagnostics["stabilized_at"])
print("colength:", colength(lim.closure), " e:", mult_param(R, seq).value)

print(check_cm_via_lim(R, seq).summary())

# J, J^lim, closure of J sit in a chain
print(check_chain(R, seq).summary())
