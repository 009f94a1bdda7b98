"""Seeded random spaces, maps and sequences for the property suites.

All randomness comes from a :class:`random.Random` built from an explicit
seed, so a corpus is a pure function of its arguments.
"""

from __future__ import annotations

import random

from .linalg import QMatrix
from .supervec import SuperDim, SuperMap, SuperSpace, ZeroSequence, direct_sum, kernel

ENTRIES = (-2, -1, 0, 1, 2)


def rng_for(seed: int, stream: str) -> random.Random:
    """Independent generator per named stream, so corpora do not shift when others change."""
    return random.Random(f"{seed}:{stream}")


def random_matrix(rng: random.Random, nrows: int, ncols: int, entries=ENTRIES) -> QMatrix:
    return QMatrix.from_rows([[rng.choice(entries) for _ in range(ncols)] for _ in range(nrows)], ncols)


def random_invertible(rng: random.Random, n: int) -> QMatrix:
    while True:
        m = random_matrix(rng, n, n)
        if m.rank() == n:
            return m


def random_space(rng: random.Random, max_dim: SuperDim, min_dim: SuperDim = SuperDim(0, 0)) -> SuperSpace:
    return SuperSpace(rng.randint(min_dim.even, max_dim.even), rng.randint(min_dim.odd, max_dim.odd))


def random_map(rng: random.Random, dom: SuperSpace, cod: SuperSpace) -> SuperMap:
    return SuperMap(dom, cod, random_matrix(rng, cod.even, dom.even), random_matrix(rng, cod.odd, dom.odd))


def random_low_rank_map(rng: random.Random, dom: SuperSpace, cod: SuperSpace) -> SuperMap:
    """A random map factoring through a random smaller space."""
    mid = SuperSpace(rng.randint(0, min(dom.even, cod.even)), rng.randint(0, min(dom.odd, cod.odd)))
    return random_map(rng, mid, cod) @ random_map(rng, dom, mid)


def map_corpus(seed: int, count: int, max_dim: SuperDim = SuperDim(3, 2)) -> list[SuperMap]:
    """Maps between random spaces of dimension at most ``max_dim``; a third are forced low rank."""
    rng = rng_for(seed, "maps")
    out = []
    for _ in range(count):
        dom, cod = random_space(rng, max_dim), random_space(rng, max_dim)
        make = random_low_rank_map if rng.random() < 1 / 3 else random_map
        out.append(make(rng, dom, cod))
    return out


def composable_pairs(seed: int, count: int, max_dim: SuperDim = SuperDim(2, 2)) -> list[tuple[SuperMap, SuperMap]]:
    rng = rng_for(seed, "composable")
    out = []
    for _ in range(count):
        a, b, c = (random_space(rng, max_dim) for _ in range(3))
        out.append((random_map(rng, a, b), random_map(rng, b, c)))
    return out


def parallel_pairs(seed: int, count: int, max_dim: SuperDim = SuperDim(2, 2)) -> list[tuple[SuperMap, SuperMap]]:
    """Pairs of distinct parallel maps; half differ in a single entry."""
    rng = rng_for(seed, "parallel")
    out = []
    while len(out) < count:
        dom, cod = random_space(rng, max_dim), random_space(rng, max_dim)
        f = random_map(rng, dom, cod)
        if rng.random() < 0.5:
            g = random_map(rng, dom, cod)
        else:
            g = f + _unit_bump(rng, dom, cod)
        if f != g:
            out.append((f, g))
    return out


def _unit_bump(rng: random.Random, dom: SuperSpace, cod: SuperSpace) -> SuperMap:
    z = SuperMap.zero(dom, cod)
    choices = [(0, i, j) for i in range(cod.even) for j in range(dom.even)]
    choices += [(1, i, j) for i in range(cod.odd) for j in range(dom.odd)]
    if not choices:
        return z
    parity, i, j = rng.choice(choices)
    blk = z.block(parity)
    rows = [list(r) for r in blk.rows]
    rows[i][j] += 1
    new = QMatrix.from_rows(rows, blk.ncols)
    return SuperMap(dom, cod, new, z.odd_block) if parity == 0 else SuperMap(dom, cod, z.even_block, new)


def maps_from_lines(seed: int, count: int, max_dim: SuperDim = SuperDim(3, 2)) -> list[SuperMap]:
    """Nonzero maps out of ``1|0`` or ``0|1``."""
    rng = rng_for(seed, "lines")
    out = []
    while len(out) < count:
        line = rng.choice((SuperSpace(1, 0), SuperSpace(0, 1)))
        f = random_map(rng, line, random_space(rng, max_dim))
        if not f.is_zero():
            out.append(f)
    return out


def _change_of_basis(rng: random.Random, space: SuperSpace) -> SuperMap:
    return SuperMap(space, space, random_invertible(rng, space.even), random_invertible(rng, space.odd))


def _coordinate_maps(a: SuperSpace, b: SuperSpace, c: SuperSpace) -> tuple[SuperMap, SuperMap]:
    """Inclusion of ``a`` and projection onto ``c`` for ``M = a ⊕ b ⊕ c``."""
    m = direct_sum(direct_sum(a, b), c)
    inc = QMatrix.identity
    ie = QMatrix.from_columns([inc(m.even).column(k) for k in range(a.even)], m.even)
    io = QMatrix.from_columns([inc(m.odd).column(k) for k in range(a.odd)], m.odd)
    pe = QMatrix.from_rows([inc(m.even).rows[k] for k in range(a.even + b.even, m.even)], m.even)
    po = QMatrix.from_rows([inc(m.odd).rows[k] for k in range(a.odd + b.odd, m.odd)], m.odd)
    return SuperMap(a, m, ie, io), SuperMap(m, c, pe, po)


def zero_sequences(seed: int, count: int, max_piece: SuperDim = SuperDim(2, 1)) -> list[ZeroSequence]:
    """``0 -> M' -> M -> M'' -> 0`` with ``i`` mono, ``p`` epi and ``p ∘ i = 0``.

    ``M = M' ⊕ G ⊕ M''`` in a random basis; the sequence is exact iff the gap
    ``G`` is zero, which happens for roughly half of them.
    """
    rng = rng_for(seed, "zero-sequences")
    out = []
    for _ in range(count):
        left, right = random_space(rng, max_piece), random_space(rng, max_piece)
        gap = SuperSpace(0, 0) if rng.random() < 0.5 else random_space(rng, max_piece, SuperDim(0, 0))
        i0, p0 = _coordinate_maps(left, gap, right)
        t = _change_of_basis(rng, i0.codomain)
        t_inv = SuperMap(t.codomain, t.domain, t.even_block.inverse(), t.odd_block.inverse())
        twist = _change_of_basis(rng, right)
        out.append(ZeroSequence(t @ i0, twist @ p0 @ t_inv))
    return out


def right_exact_sequences(seed: int, count: int, max_dim: SuperDim = SuperDim(3, 2)) -> list[ZeroSequence]:
    """Exact ``M' -> M -> M'' -> 0`` where the first map need not be injective."""
    rng = rng_for(seed, "right-exact")
    out = []
    for _ in range(count):
        mid = random_space(rng, max_dim)
        right = SuperSpace(rng.randint(0, mid.even), rng.randint(0, mid.odd))
        while True:
            p = random_map(rng, mid, right)
            if p.rank() == right.dim:
                break
        k = kernel(p)
        kd = k.domain
        left = SuperSpace(kd.even + rng.randint(0, 1), kd.odd + rng.randint(0, 1))
        while True:
            onto = random_map(rng, left, kd)
            if onto.rank() == kd.dim:
                break
        out.append(ZeroSequence(k @ onto, p))
    return out
