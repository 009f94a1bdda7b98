"""Partitions, Young diagrams and Littlewood-Richardson coefficients.

A partition is stored as its sequence of row lengths, so ``Partition((3, 1))``
is the diagram with a row of three boxes on top of a row of one box.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import CapExceeded

__all__ = [
    "Partition",
    "MAX_ENUMERATION_SIZE",
    "contains",
    "conjugate",
    "rectangle",
    "partitions_of",
    "partitions_up_to",
    "count_standard_tableaux",
    "lr_coefficient",
    "lr_tableaux",
    "subdiagrams",
]

MAX_ENUMERATION_SIZE = 8


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def contains(self, other: Iterable[int]) -> bool:
        return contains(self, other)

    def part(self, i: int) -> int:
        """Row length ``i`` (0-based), zero past the last row."""
        return self[i] if i < len(self) else 0

    def boxes(self) -> Iterator[tuple[int, int]]:
        for r, row in enumerate(self):
            for c in range(row):
                yield r, c

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the textual form ``"3,1"``; ``"-"`` (or an empty string) is the empty partition."""
        text = text.strip()
        if text in ("", "-"):
            return cls()
        try:
            return cls(int(p) for p in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}: {exc}") from None

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def contains(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    lam, mu = tuple(lam), tuple(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def rectangle(rows: int, cols: int) -> Partition:
    """The partition with ``rows`` parts, each equal to ``cols``."""
    if rows < 1 or cols < 1:
        raise ValueError(f"rectangle needs rows >= 1 and cols >= 1, got {rows}x{cols}")
    return Partition((cols,) * rows)


@lru_cache(maxsize=None)
def _partitions_of(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """Partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions_of(n, n)]


def partitions_up_to(bound: int, max_size: int = MAX_ENUMERATION_SIZE) -> list[Partition]:
    """All partitions of sizes 1..bound, ordered by size then lexicographically descending."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if bound > max_size:
        raise CapExceeded("partition size bound", bound, max_size)
    return [p for n in range(1, bound + 1) for p in partitions_of(n)]


def subdiagrams(lam: Iterable[int]) -> list[Partition]:
    """Every partition whose diagram is contained in ``lam`` (including ``()`` and ``lam``)."""
    lam = tuple(lam)

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        yield ()
        for p in range(min(cap, lam[i]), 0, -1):
            for rest in rec(i + 1, p):
                yield (p,) + rest

    return sorted({Partition(p) for p in rec(0, lam[0] if lam else 0)}, key=lambda p: (p.size, [-x for x in p]))


def hook_lengths(lam: Iterable[int]) -> list[int]:
    lam = Partition(lam)
    conj = lam.conjugate()
    return [lam[r] - c + conj[c] - r - 1 for r, c in lam.boxes()]


def count_standard_tableaux(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    lam = Partition(lam)
    return factorial(lam.size) // prod(hook_lengths(lam))


def lr_tableaux(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> Iterator[dict[tuple[int, int], int]]:
    """Yield the Littlewood-Richardson tableaux of shape lam/mu and weight nu.

    Each tableau is a dict ``{(row, col): entry}`` with entries ``1..len(nu)``:
    semistandard (rows weak, columns strict) and with reverse reading word
    (rows top to bottom, each read right to left) a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not contains(lam, mu):
        return
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r] - 1, mu.part(r) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)

    def rec(k: int) -> Iterator[dict[tuple[int, int], int]]:
        if k == len(cells):
            yield dict(filling)
            return
        r, c = cells[k]
        hi = filling.get((r, c + 1), len(nu))
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            yield from rec(k + 1)
            counts[v] -= 1
            del filling[(r, c)]

    yield from rec(0)


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    return sum(1 for _ in lr_tableaux(lam, mu, nu))


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Littlewood-Richardson coefficient by direct enumeration of LR tableaux.

    Returns 0 when ``|mu| + |nu| != |lam|`` or ``mu`` is not inside ``lam``.
    """
    return _lr(Partition(lam), Partition(mu), Partition(nu))
