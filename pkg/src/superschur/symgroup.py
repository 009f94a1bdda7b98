"""Permutations, the rational group algebra of S_n, and Young symmetrizers.

A permutation of ``{0, ..., n-1}`` is a tuple ``s`` with ``s[i]`` the image of
``i``. Products compose right to left: ``(s * t)(i) = s(t(i))``.

On tensors the permutation ``s`` moves the factor in position ``i`` to
position ``s(i)``, with the Koszul sign picked up by odd factors that cross.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded
from .partitions import Partition, count_standard_tableaux

__all__ = [
    "MAX_SYMMETRIZER_DEGREE",
    "MAX_CLASS_DEGREE",
    "identity_perm",
    "compose",
    "inverse",
    "sign",
    "cycle_type",
    "act_on_indices",
    "koszul_sign",
    "GroupAlgebraElement",
    "canonical_tableau",
    "row_group",
    "column_group",
    "young_symmetrizer",
    "symmetrizer_class_sums",
]

MAX_SYMMETRIZER_DEGREE = 7
MAX_CLASS_DEGREE = 10

Perm = tuple


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[i] for i in t)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def cycle_type(s: Perm) -> tuple[int, ...]:
    seen = [False] * len(s)
    lengths = []
    for i in range(len(s)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = s[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def sign(s: Perm) -> int:
    return -1 if (len(s) - len(cycle_type(s))) % 2 else 1


def koszul_sign(s: Perm, odd: Sequence[bool]) -> int:
    """Sign of moving factors by ``s`` when ``odd[i]`` marks the odd factors."""
    return _koszul_sign(tuple(s), tuple(bool(x) for x in odd))


@lru_cache(maxsize=1 << 16)
def _koszul_sign(s: Perm, odd: tuple[bool, ...]) -> int:
    positions = [s[i] for i in range(len(s)) if odd[i]]
    inversions = sum(1 for a in range(len(positions)) for b in range(a + 1, len(positions)) if positions[a] > positions[b])
    return -1 if inversions % 2 else 1


def act_on_indices(s: Perm, t: Sequence[int], odd: Sequence[bool]) -> tuple[int, tuple[int, ...]]:
    """Action on a pure tensor of basis vectors ``t``: returns ``(sign, new_indices)``."""
    out = [0] * len(t)
    for i, x in enumerate(t):
        out[s[i]] = x
    return _koszul_sign(s, tuple(odd)), tuple(out)


class GroupAlgebraElement:
    """A finitely supported rational combination of permutations of a fixed degree."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Perm, Fraction] | None = None):
        self.n = n
        clean = {}
        for p, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(p) != n:
                    raise ValueError(f"permutation {p} has degree {len(p)}, expected {n}")
                clean[tuple(p)] = c
        self.terms: dict[Perm, Fraction] = clean

    @classmethod
    def identity(cls, n: int) -> GroupAlgebraElement:
        return cls(n, {identity_perm(n): Fraction(1)})

    @classmethod
    def from_perm(cls, p: Perm, coeff=1) -> GroupAlgebraElement:
        return cls(len(p), {tuple(p): Fraction(coeff)})

    def _check(self, other: GroupAlgebraElement):
        if self.n != other.n:
            raise ValueError("group algebra elements of different degrees")

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return GroupAlgebraElement(self.n, {p: c * Fraction(other) for p, c in self.terms.items()})
        self._check(other)
        out: dict[Perm, Fraction] = defaultdict(Fraction)
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                out[compose(s, t)] += a * b
        return GroupAlgebraElement(self.n, out)

    __rmul__ = __mul__

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        self._check(other)
        out = defaultdict(Fraction, self.terms)
        for p, c in other.terms.items():
            out[p] += c
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + other * -1

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, p: Perm) -> Fraction:
        return self.terms.get(tuple(p), Fraction(0))

    def act(self, t: Sequence[int], odd_letter: Sequence[bool]) -> dict[tuple[int, ...], Fraction]:
        """Apply to the pure tensor with basis indices ``t``; ``odd_letter[i]`` gives the parity of basis vector ``i``."""
        odd = [odd_letter[x] for x in t]
        out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        for p, c in self.terms.items():
            sg, u = act_on_indices(p, t, odd)
            out[u] += c if sg > 0 else -c
        return {u: c for u, c in out.items() if c}

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{p}" for p, c in sorted(self.terms.items()))
        return f"GroupAlgebraElement(n={self.n}: {body or '0'})"


def canonical_tableau(lam: Iterable[int]) -> list[list[int]]:
    """Row-reading filling of ``lam`` with ``0..n-1``."""
    lam = Partition(lam)
    rows, k = [], 0
    for r in lam:
        rows.append(list(range(k, k + r)))
        k += r
    return rows


def _stabilizer(blocks: list[list[int]], n: int) -> list[Perm]:
    """All permutations preserving each block (as sets)."""
    out = []
    for choice in product(*(permutations(b) for b in blocks)):
        p = list(range(n))
        for b, img in zip(blocks, choice):
            for x, y in zip(b, img):
                p[x] = y
        out.append(tuple(p))
    return out


@lru_cache(maxsize=None)
def row_group(lam: Partition) -> tuple[Perm, ...]:
    return tuple(_stabilizer(canonical_tableau(lam), lam.size))


@lru_cache(maxsize=None)
def column_group(lam: Partition) -> tuple[Perm, ...]:
    tab = canonical_tableau(lam)
    cols = [[row[c] for row in tab if c < len(row)] for c in range(lam[0] if lam else 0)]
    return tuple(_stabilizer(cols, lam.size))


@lru_cache(maxsize=None)
def symmetrizer_terms(lam: Partition) -> tuple[tuple[Perm, int], ...]:
    """``a_λ b_λ`` as ``(permutation, ±1)`` pairs; the unnormalised Young symmetrizer."""
    # R ∩ C = {e}, so every product r*c is distinct.
    return tuple((compose(r, c), sign(c)) for c in column_group(lam) for r in row_group(lam))


def symmetrizer_scale(lam: Partition) -> Fraction:
    """``f^λ / n!``, the factor turning ``a_λ b_λ`` into an idempotent."""
    return Fraction(count_standard_tableaux(lam), factorial(lam.size))


@lru_cache(maxsize=None)
def _young_symmetrizer(lam: Partition) -> GroupAlgebraElement:
    scale = symmetrizer_scale(lam)
    return GroupAlgebraElement(lam.size, {p: scale * s for p, s in symmetrizer_terms(lam)})


def young_symmetrizer(lam: Iterable[int], max_degree: int = MAX_SYMMETRIZER_DEGREE) -> GroupAlgebraElement:
    """Normalised Young idempotent ``(f^λ/n!) a_λ b_λ`` of the canonical tableau.

    ``a_λ`` sums the row group, ``b_λ`` is the signed sum over the column
    group; ``b`` acts first. With this convention ``(1,1)`` gives the
    antisymmetrizer.
    """
    lam = Partition(lam)
    if lam.size < 1:
        raise ValueError("young_symmetrizer needs a nonempty partition")
    if lam.size > max_degree:
        raise CapExceeded("symmetrizer degree", lam.size, max_degree)
    return _young_symmetrizer(lam)


@lru_cache(maxsize=None)
def _class_sums(lam: Partition) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    n = lam.size
    sums: dict[tuple[int, ...], int] = defaultdict(int)
    rows = row_group(lam)
    for c in column_group(lam):
        sc = sign(c)
        for r in rows:
            sums[cycle_type(compose(r, c))] += sc
    scale = Fraction(count_standard_tableaux(lam), factorial(n))
    return tuple(sorted((ct, scale * v) for ct, v in sums.items() if v))


def symmetrizer_class_sums(lam: Iterable[int], max_degree: int = MAX_CLASS_DEGREE) -> dict[tuple[int, ...], Fraction]:
    """Coefficients of the Young idempotent summed over each cycle type.

    Enumerates ``r*c`` over row and column groups without materialising the
    group algebra element, so it reaches higher degrees than
    :func:`young_symmetrizer`.
    """
    lam = Partition(lam)
    if lam.size > max_degree:
        raise CapExceeded("symmetrizer degree", lam.size, max_degree)
    if not lam:
        return {(): Fraction(1)}
    return dict(_class_sums(lam))
