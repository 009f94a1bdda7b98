"""
Super vector spaces and their duality
=====================================

Spaces are pairs ``m|n``; maps are even, so they are a pair of rational
matrices. The braiding picks up a sign when two odd vectors cross.
"""

from fractions import Fraction

from superschur.supervec import (
    SuperMap,
    SuperSpace,
    braiding,
    categorical_trace,
    cokernel,
    kernel,
    map_to_json,
    name,
    split_iso_zero,
    supertrace,
    tensor,
)

v = SuperSpace(1, 1)
print(tensor(v, v).dim)  # 2|2
print(braiding(SuperSpace(0, 1), SuperSpace(0, 1)).full())  # the odd line squares with a sign

###############################################################################
# The trace coming from the rigid structure is the supertrace

f = SuperMap.from_blocks(SuperSpace(2, 1), SuperSpace(2, 1), [[1, 2], [0, 3]], [[5]])
print(supertrace(f), categorical_trace(f))
print(supertrace(SuperMap.identity(SuperSpace(3, 1))))  # m - n

###############################################################################
# Kernels, cokernels and the splitting of a map as an isomorphism plus zero

g = SuperMap.from_blocks(SuperSpace(2, 1), SuperSpace(2, 1), [[1, 2], [2, 4]], [[0]])
print("kernel", kernel(g).domain.dim, "cokernel", cokernel(g).codomain.dim)
split = split_iso_zero(g)
print("iso part on", split.iso_source.dim)

###############################################################################
# A map is determined by its name, a vector of M^∨ ⊗ N

h = g.scale(Fraction(1, 2))
print(name(g) == name(h), name(g).full().T)

###############################################################################
# Maps travel as JSON with rationals written as strings

print(map_to_json(h))
