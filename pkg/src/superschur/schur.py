"""Schur functors on super vector spaces, realised inside tensor powers.

``S_λ(V)`` is the image of the Young idempotent ``e_λ`` acting on ``V^{⊗n}``
through the Koszul-signed permutation action. Three independent routes to
its super-dimension are provided:

* :func:`schur_apply_space` -- explicit row reduction of ``e_λ`` on
  ``V^{⊗n}`` (the rank oracle; also yields embedding and projection maps);
* :func:`idempotent_rank` -- the trace of ``e_λ`` on ``V^{⊗n}``, which equals
  its rank because ``e_λ`` is idempotent;
* :func:`graded_dimension` -- counting hook semistandard tableaux.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterable, Mapping

from .errors import CapExceeded, ShapeError
from .linalg import QMatrix
from .partitions import Partition, contains, rectangle
from .supervec import SuperDim, SuperMap, SuperSpace, split_iso_zero, tensor, tensor_basis
from .symgroup import (
    MAX_CLASS_DEGREE,
    MAX_SYMMETRIZER_DEGREE,
    _koszul_sign,
    act_on_indices,
    inverse,
    symmetrizer_class_sums,
    symmetrizer_scale,
    symmetrizer_terms,
)

__all__ = [
    "MAX_SPACE_DIM",
    "SchurObject",
    "permutation_action",
    "schur_apply_space",
    "schur_apply_map",
    "schur_dimension",
    "graded_dimension",
    "hook_tableaux",
    "schur_trace",
    "idempotent_rank",
    "map_rank",
    "rectangle_orientation",
    "vanishing_rectangle",
    "dim_of_rectangle",
    "rectangle_criterion",
]

MAX_SPACE_DIM = 4


def _check_caps(n: int, space: SuperSpace, max_degree: int, max_space_dim: int):
    if n > max_degree:
        raise CapExceeded("partition size", n, max_degree)
    if space.total > max_space_dim:
        raise CapExceeded(f"dimension of {space}", space.total, max_space_dim)


def _odd_letters(space: SuperSpace) -> tuple[bool, ...]:
    return tuple(space.parity(i) == 1 for i in range(space.total))


def permutation_action(sigma, space: SuperSpace, n: int | None = None) -> SuperMap:
    """The map on ``V^{⊗n}`` moving factor ``i`` to position ``sigma[i]`` with Koszul signs."""
    sigma = tuple(sigma)
    n = len(sigma) if n is None else n
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"{sigma} is not a permutation of 0..{n - 1}")
    factors = (space,) * n
    basis = tensor_basis(factors)
    pos = {t: k for k, t in enumerate(basis)}
    odd = _odd_letters(space)
    amb = tensor(*factors) if n else SuperSpace(1, 0)
    rows = [[Fraction(0)] * amb.total for _ in range(amb.total)]
    for j, t in enumerate(basis):
        sg, u = act_on_indices(sigma, t, [odd[x] for x in t])
        rows[pos[u]][j] = Fraction(sg)
    return SuperMap.from_full(amb, amb, QMatrix.from_rows(rows, amb.total))


@dataclass(frozen=True)
class SchurObject:
    """``S_λ(V)`` as a subspace of ``V^{⊗n}``.

    ``project ∘ embed`` is the identity of ``space`` and ``embed ∘ project``
    is ``e_λ`` acting on ``ambient``.
    """

    lam: Partition
    base: SuperSpace
    ambient: SuperSpace
    space: SuperSpace
    embed: SuperMap
    project: SuperMap
    # basis tuples of the ambient tensor power, in basis order
    ambient_basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> SuperDim:
        return self.space.dim

    def idempotent(self) -> SuperMap:
        return self.embed @ self.project


def _weight_blocks(space: SuperSpace, n: int) -> list[list[tuple[int, ...]]]:
    """Basis tuples of ``V^{⊗n}`` grouped by content; ``e_λ`` preserves each group."""
    blocks: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for t in product(range(space.total), repeat=n):
        blocks[tuple(sorted(t))].append(t)
    return [blocks[k] for k in sorted(blocks)]


@lru_cache(maxsize=2048)
def _schur_object(lam: Partition, space: SuperSpace) -> SchurObject:
    n = lam.size
    scale = symmetrizer_scale(lam)
    terms = [(inverse(p), p, sg) for p, sg in symmetrizer_terms(lam)]
    odd = _odd_letters(space)
    factors = (space,) * n
    amb = tensor(*factors)
    basis = tensor_basis(factors)
    pos = {t: k for k, t in enumerate(basis)}
    n_even = amb.even

    # columns of embed / rows of project, per parity, as sparse dicts on ambient positions
    embed_cols: tuple[list, list] = ([], [])
    proj_rows: tuple[list, list] = ([], [])
    for block in _weight_blocks(space, n):
        parity = sum(odd[x] for x in block[0]) % 2
        local = {t: k for k, t in enumerate(block)}
        cols = []
        for t in block:
            pattern = tuple(odd[x] for x in t)
            col = [0] * len(block)
            for pinv, p, sg in terms:
                u = tuple(t[k] for k in pinv)
                col[local[u]] += sg * _koszul_sign(p, pattern)
            cols.append([scale * x for x in col])
        mat = QMatrix.from_columns(cols, len(block))
        red, pivots = mat.rref()
        for i, p in enumerate(pivots):
            embed_cols[parity].append({pos[block[k]]: x for k, x in enumerate(cols[p]) if x})
            proj_rows[parity].append({pos[block[k]]: x for k, x in enumerate(red.rows[i]) if x})

    s = SuperSpace(len(embed_cols[0]), len(embed_cols[1]))
    offsets = (0, n_even)
    sizes = (amb.even, amb.odd)
    emb_blocks, proj_blocks = [], []
    for parity in (0, 1):
        size, off = sizes[parity], offsets[parity]
        emb = [[Fraction(0)] * len(embed_cols[parity]) for _ in range(size)]
        for j, col in enumerate(embed_cols[parity]):
            for k, x in col.items():
                emb[k - off][j] = x
        emb_blocks.append(QMatrix.from_rows(emb, len(embed_cols[parity])))
        prj = [[Fraction(0)] * size for _ in proj_rows[parity]]
        for i, row in enumerate(proj_rows[parity]):
            for k, x in row.items():
                prj[i][k - off] = x
        proj_blocks.append(QMatrix.from_rows(prj, size))
    embed = SuperMap(s, amb, *emb_blocks)
    project = SuperMap(amb, s, *proj_blocks)
    return SchurObject(lam, space, amb, s, embed, project, basis)


def schur_apply_space(
    lam: Iterable[int],
    space: SuperSpace,
    max_degree: int = MAX_SYMMETRIZER_DEGREE,
    max_space_dim: int = MAX_SPACE_DIM,
) -> SchurObject:
    """Realise ``S_λ(V)`` by exact row reduction of ``e_λ`` on ``V^{⊗n}``.

    The ambient space is split into content blocks (tensors with the same
    multiset of basis indices), which ``e_λ`` preserves, and each block is
    reduced separately.
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("schur_apply_space needs a nonempty partition")
    _check_caps(lam.size, space, max_degree, max_space_dim)
    return _schur_object(lam, space)


def schur_dimension(lam: Iterable[int], space: SuperSpace, **caps) -> SuperDim:
    """Super-dimension of ``S_λ(V)`` by the rank oracle; ``S_∅`` is the unit."""
    lam = Partition(lam)
    if not lam:
        return SuperDim(1, 0)
    return schur_apply_space(lam, space, **caps).dim


def _tensor_power_apply(f: SuperMap, vec: Mapping[tuple[int, ...], Fraction]) -> dict[tuple[int, ...], Fraction]:
    """Apply ``f^{⊗n}`` to a sparse vector indexed by basis tuples (no signs: ``f`` is even)."""
    full = f.full()
    images = [
        [(i, full.rows[i][j]) for i in range(f.codomain.total) if full.rows[i][j]] for j in range(f.domain.total)
    ]
    out = dict(vec)
    n = len(next(iter(vec))) if vec else 0
    for slot in range(n):
        nxt: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        for t, c in out.items():
            for i, a in images[t[slot]]:
                nxt[t[:slot] + (i,) + t[slot + 1 :]] += c * a
        out = {t: c for t, c in nxt.items() if c}
    return out


def schur_apply_map(
    lam: Iterable[int],
    f: SuperMap,
    max_degree: int = MAX_SYMMETRIZER_DEGREE,
    max_space_dim: int = MAX_SPACE_DIM,
) -> SuperMap:
    """``S_λ(f) = project_N ∘ f^{⊗n} ∘ embed_M``."""
    lam = Partition(lam)
    src = schur_apply_space(lam, f.domain, max_degree, max_space_dim)
    tgt = schur_apply_space(lam, f.codomain, max_degree, max_space_dim)
    src_full = src.embed.full()
    tgt_pos = {t: k for k, t in enumerate(tgt.ambient_basis)}
    proj = tgt.project.full()
    cols = []
    for j in range(src.space.total):
        vec = {src.ambient_basis[k]: src_full.rows[k][j] for k in range(src.ambient.total) if src_full.rows[k][j]}
        img = _tensor_power_apply(f, vec)
        nz = [(tgt_pos[t], c) for t, c in img.items()]
        cols.append([sum((row[k] * c for k, c in nz), Fraction(0)) for row in proj.rows])
    m = QMatrix.from_columns(cols, tgt.space.total)
    return SuperMap.from_full(src.space, tgt.space, m)


# -- hook tableaux ----------------------------------------------------------------


def hook_tableaux(lam: Iterable[int], d: SuperDim):
    """Yield ``(m|n)``-semistandard tableaux of shape ``λ`` as tuples of rows.

    Letters ``0..m-1`` are even and ``m..m+n-1`` odd, ordered as integers.
    Even letters are weakly increasing along rows and strictly down columns;
    odd letters are strictly increasing along rows and weakly down columns.
    """
    lam = Partition(lam)
    m, k = d.even, d.total
    cells = list(lam.boxes())
    fill: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield tuple(tuple(fill[(r, c)] for c in range(lam[r])) for r in range(len(lam)))
            return
        r, c = cells[idx]
        left, up = fill.get((r, c - 1)), fill.get((r - 1, c))
        for v in range(k):
            if left is not None and (v < left or (v == left and v >= m)):
                continue
            if up is not None and (v < up or (v == up and v < m)):
                continue
            fill[(r, c)] = v
            yield from rec(idx + 1)
            del fill[(r, c)]

    yield from rec(0)


@lru_cache(maxsize=None)
def _graded_dimension(lam: Partition, d: SuperDim) -> SuperDim:
    counts = [0, 0]
    for tab in hook_tableaux(lam, d):
        odd = sum(1 for row in tab for v in row if v >= d.even)
        counts[odd % 2] += 1
    return SuperDim(*counts)


def graded_dimension(lam: Iterable[int], d: SuperDim) -> SuperDim:
    """Super-dimension of ``S_λ(V)`` for ``dim V = d``, by counting hook tableaux.

    ``S_∅`` is the unit object, of dimension ``1|0``.
    """
    lam = Partition(lam)
    if not lam:
        return SuperDim(1, 0)
    return _graded_dimension(lam, d)


# -- trace route ---------------------------------------------------------------------


def _power_traces(h: SuperMap, n: int) -> list[tuple[Fraction, Fraction]]:
    """``(tr h_even^k, tr h_odd^k)`` for ``k = 0..n``."""
    out = []
    pe = QMatrix.identity(h.domain.even)
    po = QMatrix.identity(h.domain.odd)
    for _ in range(n + 1):
        out.append((pe.trace(), po.trace()))
        pe, po = pe @ h.even_block, po @ h.odd_block
    return out


def schur_trace(lam: Iterable[int], h: SuperMap, max_degree: int = MAX_CLASS_DEGREE) -> tuple[Fraction, Fraction]:
    """Trace of ``S_λ(h)`` on the even and odd parts of ``S_λ(V)``.

    Uses ``tr S_λ(h) = tr(h^{⊗n} ∘ e_λ)`` on ``V^{⊗n}``. For a permutation with
    given cycle type, a cycle of length ``k`` contributes
    ``tr(h_even^k) + (-1)^(k-1) tr(h_odd^k)``, the odd part carrying ``k`` odd
    tensor factors.
    """
    if h.domain != h.codomain:
        raise ShapeError("schur_trace needs an endomorphism")
    lam = Partition(lam)
    sums = symmetrizer_class_sums(lam, max_degree=max_degree)
    pt = _power_traces(h, lam.size)
    total_even, total_odd = Fraction(0), Fraction(0)
    for ctype, coeff in sums.items():
        poly = (Fraction(1), Fraction(0))  # coefficients of x^0, x^1 with x^2 = 1
        for k in ctype:
            te, to = pt[k]
            factor = (te - to, Fraction(0)) if k % 2 == 0 else (te, to)
            poly = (poly[0] * factor[0] + poly[1] * factor[1], poly[0] * factor[1] + poly[1] * factor[0])
        total_even += coeff * poly[0]
        total_odd += coeff * poly[1]
    return total_even, total_odd


def _as_int(x: Fraction) -> int:
    if x.denominator != 1 or x < 0:
        raise ShapeError(f"idempotent trace {x} is not a non-negative integer")
    return int(x)


def idempotent_rank(lam: Iterable[int], d: SuperDim, max_degree: int = MAX_CLASS_DEGREE) -> SuperDim:
    """Rank of ``e_λ`` on ``V^{⊗n}`` per parity, computed as its trace."""
    lam = Partition(lam)
    if not lam:
        return SuperDim(1, 0)
    te, to = schur_trace(lam, SuperMap.identity(SuperSpace(d.even, d.odd)), max_degree)
    return SuperDim(_as_int(te), _as_int(to))


def map_rank(lam: Iterable[int], f: SuperMap, max_degree: int = MAX_CLASS_DEGREE) -> SuperDim:
    """Rank of ``S_λ(f)`` per parity, without building any tensor power.

    With ``g`` a generalised inverse (``f g f = f``), ``S_λ(gf)`` is an
    idempotent whose rank equals that of ``S_λ(f)``; its rank is its trace.
    """
    lam = Partition(lam)
    if not lam:
        return SuperDim(1, 0)
    pi = split_iso_zero(f).idempotent()
    te, to = schur_trace(lam, pi, max_degree)
    return SuperDim(_as_int(te), _as_int(to))


# -- rectangle orientation -----------------------------------------------------------


@lru_cache(maxsize=None)
def rectangle_orientation() -> str:
    """Which way round the vanishing rectangle sits, decided by the rank oracle.

    On the even line ``Q^{1|0}`` exactly one of ``S_(2)``, ``S_(1,1)`` vanishes.
    If it is ``S_(1,1)`` (one column, two rows) then for ``dim V = m|n`` the
    rectangle has ``m+1`` rows and ``n+1`` columns: returns ``"even-rows"``.
    Otherwise returns ``"odd-rows"`` (``n+1`` rows, ``m+1`` columns).
    """
    line = SuperSpace(1, 0)
    col = schur_dimension((1, 1), line)
    row = schur_dimension((2,), line)
    if col.total == 0 and row.total == 1:
        return "even-rows"
    if row.total == 0 and col.total == 1:
        return "odd-rows"
    raise ShapeError(f"unexpected Schur dimensions on a line: S_(2)={row}, S_(1,1)={col}")


def vanishing_rectangle(d: SuperDim) -> Partition:
    """The smallest rectangle ``λ`` with ``S_λ(V) = 0`` for ``dim V = d``."""
    if rectangle_orientation() == "even-rows":
        return rectangle(d.even + 1, d.odd + 1)
    return rectangle(d.odd + 1, d.even + 1)


def dim_of_rectangle(rows: int, cols: int) -> SuperDim:
    """Inverse of :func:`vanishing_rectangle`."""
    if rectangle_orientation() == "even-rows":
        return SuperDim(rows - 1, cols - 1)
    return SuperDim(cols - 1, rows - 1)


def rectangle_criterion(lam: Iterable[int], d: SuperDim) -> bool:
    """``True`` when ``λ`` contains the vanishing rectangle of ``d``."""
    return contains(Partition(lam), vanishing_rectangle(d))
