"""
Dimension counts and exactness
==============================

For ``0 -> M' -> M -> M'' -> 0`` with ``i`` mono and ``p`` epi, the middle
term is at least as big as the ends, with equality exactly when the sequence
is exact.
"""

from superschur.calculus import check_p4_inequality, check_schur_of_sum, check_theorem_p2b, dim_exact_report
from superschur.corpus import right_exact_sequences, zero_sequences
from superschur.supervec import SuperMap, SuperSpace, ZeroSequence

i = SuperMap.from_blocks(SuperSpace(1, 0), SuperSpace(3, 0), [[1], [0], [0]], [])
p = SuperMap.from_blocks(SuperSpace(3, 0), SuperSpace(1, 0), [[0, 0, 1]], [])
print(dim_exact_report(ZeroSequence(i, p)))

###############################################################################
# Over a seeded corpus dimension equality and exactness coincide

reports = [dim_exact_report(s) for s in zero_sequences(seed=7, count=100)]
print(sum(r.dim_exact for r in reports), "dim-exact,", sum(r.dim_exact == r.exact for r in reports), "agree")
print(all(check_theorem_p2b(s) for s, r in zip(zero_sequences(7, 100), reports) if r.dim_exact))

###############################################################################
# Right-exact sequences satisfy the reverse inequality

print(all(check_p4_inequality(s) for s in right_exact_sequences(seed=7, count=100)))

###############################################################################
# Schur functors of a direct sum expand by Littlewood-Richardson coefficients

print(check_schur_of_sum((2, 2), SuperSpace(1, 0), SuperSpace(0, 1)))
