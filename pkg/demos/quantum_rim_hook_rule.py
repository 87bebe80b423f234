"""
Quantum products by the equivariant rim hook rule
=================================================

sigma_lam * sigma_mu in QH_T(Gr(k, n)) is computed in the classical ring of
Gr(k, 2n-1) and pushed down: weights are reduced mod n, and every label
loses its n-rim hooks, each hook of height h contributing (-1)^(h-k) q.
"""

from eqrimhook.eqlr import classical_eqlr
from eqrimhook.partitions import Partition, partitions_in_box
from eqrimhook.qh import phi_contributions, quantum_mult, quantum_pieri

lam = mu = Partition((2,))
k, n = 2, 4

# the lifted product in Gr(2,7)
lifted = classical_eqlr(lam, mu, k, 2 * n - 1)
print("in Gr(2,7):", lifted)

# what each label becomes; (3,1) and (4) both reduce to q * sigma_empty with
# opposite signs, and (3) has a 4-core outside the box
for c in phi_contributions(lifted, n):
    if c.reduction is None:
        print("  %-4s -> 0" % (c.gamma,))
    else:
        r = c.reduction
        print("  %-4s -> %+d q^%d sigma_%s   (hook heights %s)" % (c.gamma, r.sign, r.d, r.core, list(r.heights)))

print("quantum product:", quantum_mult(lam, mu, k, n))

# products with sigma_1 agree with the quantum Pieri rule
print()
for nu in partitions_in_box(k, n):
    p = quantum_mult(Partition((1,)), nu, k, n)
    print("sigma_1 * sigma_%-4s = %-40s %s" % (nu, p, "ok" if p == quantum_pieri(nu, k, n) else "MISMATCH"))

# the full multiplication table of QH_T(Gr(2,4)), upper triangle
print()
box = partitions_in_box(k, n)
for i, a in enumerate(box):
    for b in box[i:]:
        print("%-4s * %-4s = %s" % (a, b, quantum_mult(a, b, k, n)))
