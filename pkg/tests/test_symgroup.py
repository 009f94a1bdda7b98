from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superschur.errors import CapExceeded
from superschur.partitions import Partition, count_standard_tableaux, partitions_of, partitions_up_to
from superschur.schur import permutation_action
from superschur.supervec import SuperMap, SuperSpace
from superschur.symgroup import (
    GroupAlgebraElement,
    column_group,
    compose,
    cycle_type,
    identity_perm,
    inverse,
    koszul_sign,
    row_group,
    sign,
    symmetrizer_class_sums,
    young_symmetrizer,
)

perms = st.integers(1, 5).flatmap(lambda n: st.permutations(range(n)).map(tuple))


def perm_pairs(n):
    return st.tuples(st.permutations(range(n)).map(tuple), st.permutations(range(n)).map(tuple))


@given(st.integers(1, 5).flatmap(perm_pairs))
def test_group_laws(pair):
    s, t = pair
    assert compose(s, inverse(s)) == identity_perm(len(s))
    assert sign(compose(s, t)) == sign(s) * sign(t)
    assert sorted(cycle_type(s)) == sorted(cycle_type(compose(t, compose(s, inverse(t)))))


@given(perms, st.data())
def test_koszul_sign_counts_odd_crossings(s, data):
    odd = data.draw(st.lists(st.booleans(), min_size=len(s), max_size=len(s)))
    # brute force: pairs of odd factors whose order gets reversed
    crossings = sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if odd[i] and odd[j] and s[i] > s[j])
    assert koszul_sign(s, odd) == (-1) ** crossings
    if all(odd):
        assert koszul_sign(s, odd) == sign(s)


@pytest.mark.parametrize("space", [SuperSpace(1, 1), SuperSpace(0, 2), SuperSpace(2, 0)])
def test_action_on_tensors_is_a_homomorphism(space):
    n = 3
    for s in permutations(range(n)):
        for t in permutations(range(n)):
            lhs = permutation_action(compose(s, t), space)
            rhs = permutation_action(s, space) @ permutation_action(t, space)
            assert lhs == rhs


def test_transposition_on_odd_square():
    odd = SuperSpace(0, 1)
    assert permutation_action((0, 1), odd) == SuperMap.identity(permutation_action((0, 1), odd).domain)
    swap = permutation_action((1, 0), odd)
    assert swap.domain.dim.even == 1
    assert swap == SuperMap.identity(swap.domain).scale(-1)


def test_row_and_column_groups():
    lam = Partition((2, 1))
    assert len(row_group(lam)) == 2 and len(column_group(lam)) == 2
    assert set(row_group(lam)) & set(column_group(lam)) == {identity_perm(3)}


def test_small_symmetrizers():
    assert young_symmetrizer((2,)) == GroupAlgebraElement(2, {(0, 1): Fraction(1, 2), (1, 0): Fraction(1, 2)})
    assert young_symmetrizer((1, 1)) == GroupAlgebraElement(2, {(0, 1): Fraction(1, 2), (1, 0): Fraction(-1, 2)})
    e = young_symmetrizer((2, 1))
    assert e * e == e
    assert count_standard_tableaux((2, 1)) == 2


@pytest.mark.parametrize("lam", partitions_up_to(5))
def test_symmetrizers_are_idempotent(lam):
    e = young_symmetrizer(lam)
    assert e * e == e
    # e_λ generates a copy of the irreducible module: the identity coefficient is f^λ/n!
    assert e.coefficient(identity_perm(lam.size)) == Fraction(count_standard_tableaux(lam), factorial(lam.size))


@pytest.mark.parametrize("n", range(2, 5))
def test_symmetrizers_of_different_shapes_are_orthogonal(n):
    shapes = partitions_of(n)
    for a in shapes:
        for b in shapes:
            if a != b:
                assert len(young_symmetrizer(a) * young_symmetrizer(b)) == 0 or len(young_symmetrizer(b) * young_symmetrizer(a)) == 0


def test_degree_cap():
    with pytest.raises(CapExceeded, match="7"):
        young_symmetrizer((8,))
    with pytest.raises(CapExceeded):
        symmetrizer_class_sums((11,))


@pytest.mark.parametrize("lam", partitions_up_to(5))
def test_class_sums_match_the_group_algebra_element(lam):
    e = young_symmetrizer(lam)
    expected = Counter()
    for p, c in e.terms.items():
        expected[cycle_type(p)] += c
    assert symmetrizer_class_sums(lam) == {k: v for k, v in expected.items() if v}
