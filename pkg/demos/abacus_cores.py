"""
n-cores on the abacus
=====================

Beads sit on the beta-numbers of a partition.  Sliding beads up their
runners removes n-rim hooks; when no bead can move the abacus is flush and
the remaining partition is the n-core.
"""

from eqrimhook.abacus import abacus_from_partition, abacus_to_partition, canonical_abacus, make_flush
from eqrimhook.partitions import Partition, strip_rim_hooks

lam = Partition((2, 1))
a = abacus_from_partition(lam, 2, 3)
print("abacus of (2,1) on 3 runners (beads in parentheses):")
print(a)

flush, moves = make_flush(a)
print("\nafter %d move(s):" % moves)
print(flush)
print("3-core:", abacus_to_partition(flush))

# the same answer from beta-number stripping, with hook heights and sign
for gamma in [Partition((3, 1)), Partition((4,)), Partition((6, 3)), Partition((5, 5, 2))]:
    k = len(gamma)
    red = strip_rim_hooks(gamma, 4, k)
    flush, moves = make_flush(abacus_from_partition(gamma, k, 4))
    print(
        "%-6s 4-core %-4s d=%d heights=%s sign=%+d   abacus: %s after %d moves"
        % (gamma, red.core, red.d, list(red.heights), red.sign, abacus_to_partition(flush), moves)
    )

# every class of QH_T(Gr(2,4)) has a normalized abacus in the top row
print("\ncanonical abacus of (2,1) in Gr(2,4):")
print(canonical_abacus(Partition((2, 1)), 2, 4).render(rows=range(0, 1)))
