"""
Partitions, tableaux and Littlewood-Richardson coefficients
===========================================================

The combinatorics underneath every Schur functor: Young diagrams, the hook
length formula and the multiplicities of a product of two Schur functors.
"""

from superschur.partitions import (
    Partition,
    conjugate,
    count_standard_tableaux,
    lr_coefficient,
    partitions_of,
    rectangle,
)

# enumeration order is by size, then lexicographically descending
for lam in partitions_of(4):
    print(f"{str(lam):>8}  conjugate {str(conjugate(lam)):>8}  f = {count_standard_tableaux(lam)}")

###############################################################################
# The squares of the standard tableau counts add up to n!

print(sum(count_standard_tableaux(lam) ** 2 for lam in partitions_of(5)))

###############################################################################
# A rectangle with 3 rows and 2 columns, and what it contains

box = rectangle(3, 2)
print(box, box.contains((2, 1)), Partition((3,)).contains(box))

###############################################################################
# s_(2,1) * s_(2,1) expanded in Schur functions of degree 6

for lam in partitions_of(6):
    c = lr_coefficient(lam, (2, 1), (2, 1))
    if c:
        print(f"{c} x s_{lam}")
