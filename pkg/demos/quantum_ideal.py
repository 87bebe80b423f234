"""
Relations in the quantum ideal
==============================

A symmetric polynomial in x with torus weights is brought to normal form by
reducing weights mod n, expanding in factorial Schur polynomials and reducing
each label.  Complete homogeneous polynomials show the ideal relations.
"""

import random

from eqrimhook.facschur import WeightSeq, factorial_h
from eqrimhook.identities import verify_lemmas_sec5
from eqrimhook.qh import normal_form, schur_normal_form_at

k, n = 2, 4
for m in range(0, 11):
    print("h_%-2d(x|t) -> %s" % (m, normal_form(factorial_h(m, k), k, n)))

# the relation h_n = -(-1)^k q does not depend on a shift of the weights
print()
for s in range(n + 1):
    print("h_4(x|tau^-%d t) -> %s" % (s, normal_form(factorial_h(n, k, WeightSeq(-s)), k, n)))

# large degrees in Gr(3,6) are compared at random integer weights
rng = random.Random(0)
values = [rng.randrange(-100, 100) for _ in range(6)]
print()
print("weights:", values)
for m in (12, 13, 17):
    print("h_%d in QH_T(Gr(3,6)) at these weights: %s" % (m, schur_normal_form_at((m,), 3, 6, values)))

# measured signs of h_{nd+j} = e_d q^d h_j
print()
for k, n in [(2, 4), (2, 5), (3, 6)]:
    rep = verify_lemmas_sec5(k, n, schur=False)
    print("(%d,%d): h_n/q = %s, sign for d=1: %+d, d=2: %+d"
          % (k, n, rep.measured["h_n_over_q"], rep.measured["h_nd_sign_d1"], rep.measured["h_nd_sign_d2"]))
