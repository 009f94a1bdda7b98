"""
Vanishing sets and detecting monomorphisms
==========================================

The set of ``λ`` killing a space determines its super-dimension. A map is a
monomorphism exactly when every Schur functor that kills it kills its
source; when it is not, a witness shape proves it.
"""

from superschur.calculus import (
    check_property_S,
    check_property_S_op,
    minimal_vanishing_partition,
    schur_vanishes,
    superdim_from_vanishing,
    vanishing_set,
)
from superschur.supervec import SuperMap, SuperSpace

vs = vanishing_set(SuperSpace(1, 1), 5)
print([str(lam) for lam in vs.sorted()], vs.is_sieve())

###############################################################################
# Reading the super-dimension back off the vanishing predicate

for m, n in ((2, 0), (1, 2), (0, 0)):
    space = SuperSpace(m, n)
    print(space.dim, "->", superdim_from_vanishing(lambda lam: schur_vanishes(lam, space), 8))
print(minimal_vanishing_partition(SuperSpace(2, 2)))

###############################################################################
# An endomorphism of 2|1 of rank 1|1 is not mono; the witness is the minimal
# vanishing shape of its isomorphism part, here 1|1

f = SuperMap.from_blocks(SuperSpace(2, 1), SuperSpace(2, 1), [[1, 2], [2, 4]], [[1]])
v = check_property_S(f)
print(v.is_mono, v.witness, v.consistent, v.status, v.details["iso_part"])

###############################################################################
# The dual statement detects epimorphisms

print(check_property_S_op(f).witness)

###############################################################################
# A bound below the witness size is reported, never silently passed

print(check_property_S(f, bound=2).status)
