"""
Equivariant products in H_T(Gr(k, N))
=====================================

Schubert classes are represented by factorial Schur polynomials, and a
product is read off by expanding s_lam(x|t) * s_mu(x|t) back in that basis.
"""

from eqrimhook.eqlr import classical_eqlr, classical_pieri
from eqrimhook.facschur import factorial_schur_ssyt, jacobi_trudi, localization_point
from eqrimhook.partitions import Partition, partitions_in_box

# s_(2)(x|t) in two variables, from its tableaux and from Jacobi-Trudi
s2 = factorial_schur_ssyt(Partition((2,)), 2)
print("s_2(x|t) =", s2)
print("Jacobi-Trudi agrees:", jacobi_trudi(Partition((2,)), 2) == s2)

# dropping the weights leaves the ordinary Schur polynomial
print("t -> 0:", s2.specialize_t_zero())

# the class vanishes at every fixed point that does not contain (2)
for mu in partitions_in_box(2, 4):
    print("  s_2 at fixed point %-4s = %s" % (mu, s2.evaluate(localization_point(mu, 2))))

# sigma_2 * sigma_2 in Gr(2,4) and in Gr(2,6): the larger Grassmannian keeps
# three labels that do not fit in the 2 x 2 box
print()
print("Gr(2,4):", classical_eqlr(Partition((2,)), Partition((2,)), 2, 4))
print("Gr(2,6):", classical_eqlr(Partition((2,)), Partition((2,)), 2, 6))

# multiplying by the divisor class only adds boxes, plus a diagonal term
print()
for lam in partitions_in_box(2, 4):
    print("sigma_1 * sigma_%-4s = %s" % (lam, classical_pieri(lam, 2, 4)))
