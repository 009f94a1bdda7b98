"""
Schur functors by Young symmetrizers
====================================

``S_λ(V)`` is the image of the Young idempotent acting on ``V^{⊗n}``. Its
super-dimension can be read three ways: row reduction of the idempotent,
counting hook tableaux, and the trace of the idempotent.
"""

from superschur.partitions import partitions_up_to
from superschur.schur import (
    graded_dimension,
    idempotent_rank,
    rectangle_orientation,
    schur_apply_map,
    schur_apply_space,
    vanishing_rectangle,
)
from superschur.supervec import SuperDim, SuperMap, SuperSpace
from superschur.symgroup import young_symmetrizer

e = young_symmetrizer((2, 1))
print(e * e == e, len(e))

###############################################################################
# Three routes to the same super-dimension

v = SuperSpace(2, 1)
for lam in partitions_up_to(4):
    print(f"{str(lam):>8}", schur_apply_space(lam, v).dim, graded_dimension(lam, v.dim), idempotent_rank(lam, v.dim))

###############################################################################
# The exterior square of an even line vanishes, so the vanishing rectangle of
# ``m|n`` has ``m+1`` rows and ``n+1`` columns

print(rectangle_orientation())
for d in (SuperDim(1, 0), SuperDim(1, 1), SuperDim(2, 1)):
    print(d, vanishing_rectangle(d))

###############################################################################
# Functoriality: S_λ(g ∘ f) = S_λ(g) ∘ S_λ(f)

f = SuperMap.from_blocks(SuperSpace(1, 1), SuperSpace(2, 1), [[1], [2]], [[3]])
g = SuperMap.from_blocks(SuperSpace(2, 1), SuperSpace(1, 1), [[1, -1]], [[1]])
lam = (2, 1)
print(schur_apply_map(lam, g @ f) == schur_apply_map(lam, g) @ schur_apply_map(lam, f))
