from collections import Counter
from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superschur.errors import CapExceeded
from superschur.partitions import (
    Partition,
    conjugate,
    contains,
    count_standard_tableaux,
    hook_lengths,
    lr_coefficient,
    partitions_of,
    partitions_up_to,
    rectangle,
    subdiagrams,
)

partitions = st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_partition_normalises_and_validates():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition.parse("3,1") == (3, 1)
    assert Partition.parse("-") == () == Partition.parse("")
    assert str(Partition(())) == "-"
    assert str(Partition((2, 1))) == "2,1"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


@pytest.mark.parametrize(
    "lam, mu, expected",
    [((2, 2), (2, 1), True), ((3, 1), (2, 2), False), ((3, 2, 1), (), True), ((), (1,), False)],
)
def test_contains(lam, mu, expected):
    assert contains(lam, mu) is expected


@pytest.mark.parametrize("lam, conj", [((3, 1), (2, 1, 1)), ((2, 2), (2, 2)), ((), ())])
def test_conjugate(lam, conj):
    assert conjugate(lam) == conj


@pytest.mark.parametrize("rows, cols, expected", [(2, 2, (2, 2)), (1, 3, (3,)), (3, 1, (1, 1, 1))])
def test_rectangle(rows, cols, expected):
    assert rectangle(rows, cols) == expected


def test_rectangle_rejects_empty_sides():
    with pytest.raises(ValueError):
        rectangle(0, 2)


def test_partitions_up_to():
    assert partitions_up_to(0) == []
    assert partitions_up_to(2) == [(1,), (2,), (1, 1)]
    assert len(partitions_up_to(3)) == 6
    # partition numbers p(1..6)
    assert [len(partitions_of(n)) for n in range(1, 7)] == [1, 2, 3, 5, 7, 11]
    with pytest.raises(CapExceeded, match="8"):
        partitions_up_to(9)


def test_standard_tableaux_counts():
    assert count_standard_tableaux((4,)) == 1
    assert count_standard_tableaux((1, 1, 1)) == 1
    assert count_standard_tableaux((2, 1)) == 2
    assert hook_lengths((2, 1)) == [3, 1, 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_formula_sums_to_group_order(n):
    assert sum(count_standard_tableaux(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def _brute_standard(lam):
    """Count standard fillings by trying every placement order."""
    lam = Partition(lam)
    cells = list(lam.boxes())

    def rec(placed):
        if len(placed) == len(cells):
            return 1
        total = 0
        for r, c in cells:
            if (r, c) in placed:
                continue
            if (c == 0 or (r, c - 1) in placed) and (r == 0 or (r - 1, c) in placed):
                total += rec(placed | {(r, c)})
        return total

    return rec(frozenset())


@given(partitions)
def test_hook_formula_matches_brute_force(lam):
    assert count_standard_tableaux(lam) == _brute_standard(lam)


@given(partitions)
def test_conjugation_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert Partition(lam).conjugate().size == Partition(lam).size


@given(partitions, partitions)
def test_containment_is_preserved_by_conjugation(lam, mu):
    assert contains(lam, mu) == contains(conjugate(lam), conjugate(mu))


@given(partitions)
def test_subdiagrams_are_exactly_the_contained_partitions(lam):
    lam = Partition(lam)
    subs = set(subdiagrams(lam))
    expected = {mu for n in range(lam.size + 1) for mu in ([Partition(())] if n == 0 else partitions_of(n)) if contains(lam, mu)}
    assert subs == expected


# -- Littlewood-Richardson ------------------------------------------------------------


def _ssyt_contents(shape, letters):
    """Multiset of contents of semistandard tableaux of ``shape`` in ``letters`` letters."""
    shape = Partition(shape)
    cells = list(shape.boxes())
    out = Counter()
    for fill in product(range(letters), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if all(t[(r, c)] <= t[(r, c + 1)] for r, c in cells if (r, c + 1) in t) and all(
            t[(r, c)] < t[(r + 1, c)] for r, c in cells if (r + 1, c) in t
        ):
            out[tuple(fill.count(i) for i in range(letters))] += 1
    return out


def _schur_poly(shape, letters):
    return _ssyt_contents(shape, letters) if shape else Counter({(0,) * letters: 1})


def _poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def _lr_via_polynomials(lam, mu, nu):
    """Coefficient of s_λ in s_μ·s_ν, peeled off dominant monomials in enough variables."""
    n = Partition(lam).size
    letters = max(n, 1)
    prod = _poly_mul(_schur_poly(mu, letters), _schur_poly(nu, letters))
    coeffs = {}
    for shape in partitions_of(n):
        key = tuple(shape) + (0,) * (letters - len(shape))
        coeffs[shape] = prod.get(key, 0)
    # triangularity: s_ρ has leading monomial x^ρ and only dominance-smaller ones
    for shape in sorted(coeffs, reverse=True):
        c = coeffs[shape]
        if c:
            for e, v in _schur_poly(shape, letters).items():
                sh = Partition(sorted(e, reverse=True))
                if tuple(sorted(e, reverse=True)) == e and sh != shape and sh in coeffs:
                    coeffs[sh] -= c * v
    return coeffs[Partition(lam)]


@pytest.mark.parametrize(
    "lam, mu, nu, expected",
    [((1, 1), (1,), (1,), 1), ((2, 1), (2,), (1,), 1), ((2, 1), (1,), (1,), 0), ((2, 1), (1,), (1, 1), 1), ((3, 2, 1), (2, 1), (2, 1), 2)],
)
def test_lr_examples(lam, mu, nu, expected):
    assert lr_coefficient(lam, mu, nu) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_lr_matches_polynomial_multiplication(n):
    for lam in partitions_of(n):
        for k in range(n + 1):
            for mu in partitions_of(k) if k else [Partition(())]:
                for nu in partitions_of(n - k) if n - k else [Partition(())]:
                    assert lr_coefficient(lam, mu, nu) == _lr_via_polynomials(lam, mu, nu), (lam, mu, nu)


@settings(max_examples=60, deadline=None)
@given(partitions, partitions)
def test_lr_symmetry_and_dimension_count(mu, nu):
    mu, nu = Partition(mu), Partition(nu)
    n = mu.size + nu.size
    if n == 0 or n > 7:
        return
    total = 0
    for lam in partitions_of(n):
        c = lr_coefficient(lam, mu, nu)
        assert c == lr_coefficient(lam, nu, mu)
        assert c == lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu))
        total += c * count_standard_tableaux(lam)
    # induction from S_a × S_b to S_n multiplies dimensions by the binomial coefficient
    binom = factorial(n) // (factorial(mu.size) * factorial(nu.size))
    assert total == binom * count_standard_tableaux(mu) * count_standard_tableaux(nu)
