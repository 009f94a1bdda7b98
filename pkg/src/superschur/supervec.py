"""Finite-dimensional super vector spaces over Q and their even linear maps.

Basis conventions
-----------------
A space of dimension ``m|n`` has basis vectors ``0..m-1`` (even) followed by
``m..m+n-1`` (odd). The basis of ``A_1 ⊗ ... ⊗ A_k`` is the set of index
tuples ``(i_1, ..., i_k)``, listed lexicographically and then stably
partitioned so that the even tuples come first. Tensor products of more than
two factors are built in one step from the flat list of factors; the result of
``tensor(tensor(a, b), c)`` instead uses the basis of ``tensor(a, b)`` as its
first factor, and the two are related by :func:`associator`.

Maps are strictly even: a :class:`SuperMap` carries one block per parity and
no cross terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from typing import Iterable, Sequence

from .errors import PreconditionError, ShapeError
from .linalg import QMatrix, to_fraction

__all__ = [
    "SuperDim",
    "SuperSpace",
    "SuperMap",
    "ZeroSequence",
    "Split",
    "UNIT",
    "direct_sum",
    "tensor",
    "tensor_basis",
    "braiding",
    "associator",
    "dual",
    "dual_map",
    "evaluation",
    "coevaluation",
    "unit_map",
    "counit_map",
    "name",
    "coname",
    "supertrace",
    "categorical_trace",
    "is_mono",
    "is_epi",
    "is_iso",
    "kernel",
    "cokernel",
    "image",
    "image_factorization",
    "split_iso_zero",
    "is_invertible",
    "InterchangeError",
    "space_to_json",
    "space_from_json",
    "map_to_json",
    "map_from_json",
]


@dataclass(frozen=True)
class SuperDim:
    """A super-dimension ``m|n``, ordered componentwise."""

    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"super-dimension components must be non-negative: {self.even}|{self.odd}")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __add__(self, other: SuperDim) -> SuperDim:
        return SuperDim(self.even + other.even, self.odd + other.odd)

    def __mul__(self, other: SuperDim) -> SuperDim:
        a, b, c, d = self.even, self.odd, other.even, other.odd
        return SuperDim(a * c + b * d, a * d + b * c)

    def scale(self, k: int) -> SuperDim:
        return SuperDim(k * self.even, k * self.odd)

    def __le__(self, other: SuperDim) -> bool:
        return self.even <= other.even and self.odd <= other.odd

    def __ge__(self, other: SuperDim) -> bool:
        return other <= self

    def __lt__(self, other: SuperDim) -> bool:
        return self <= other and self != other

    def __gt__(self, other: SuperDim) -> bool:
        return other < self

    def __bool__(self) -> bool:
        return self.total > 0

    def __str__(self) -> str:
        return f"{self.even}|{self.odd}"

    @classmethod
    def parse(cls, text: str) -> SuperDim:
        try:
            m, n = text.strip().split("|")
            return cls(int(m), int(n))
        except ValueError:
            raise ValueError(f"malformed super-dimension {text!r}; expected 'm|n'") from None


@dataclass(frozen=True)
class SuperSpace:
    """The space ``Q^{m|n}`` with its standard homogeneous basis."""

    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"dimensions must be non-negative: {self.even}|{self.odd}")

    @classmethod
    def of(cls, d: SuperDim | str) -> SuperSpace:
        if isinstance(d, str):
            d = SuperDim.parse(d)
        return cls(d.even, d.odd)

    @property
    def dim(self) -> SuperDim:
        return SuperDim(self.even, self.odd)

    @property
    def total(self) -> int:
        return self.even + self.odd

    def parity(self, i: int) -> int:
        """0 for even basis vectors, 1 for odd ones."""
        return 0 if i < self.even else 1

    def identity(self) -> SuperMap:
        return SuperMap.identity(self)

    def __str__(self) -> str:
        return str(self.dim)


UNIT = SuperSpace(1, 0)


@dataclass(frozen=True)
class SuperMap:
    """An even linear map, stored as one rational matrix per parity."""

    domain: SuperSpace
    codomain: SuperSpace
    even_block: QMatrix
    odd_block: QMatrix

    def __post_init__(self):
        if self.even_block.shape != (self.codomain.even, self.domain.even):
            raise ShapeError(
                f"even block has shape {self.even_block.shape}, expected {(self.codomain.even, self.domain.even)}"
            )
        if self.odd_block.shape != (self.codomain.odd, self.domain.odd):
            raise ShapeError(
                f"odd block has shape {self.odd_block.shape}, expected {(self.codomain.odd, self.domain.odd)}"
            )

    @classmethod
    def from_blocks(cls, domain: SuperSpace, codomain: SuperSpace, even_rows, odd_rows) -> SuperMap:
        return cls(
            domain,
            codomain,
            QMatrix.from_rows(even_rows, domain.even),
            QMatrix.from_rows(odd_rows, domain.odd),
        )

    @classmethod
    def identity(cls, space: SuperSpace) -> SuperMap:
        return cls(space, space, QMatrix.identity(space.even), QMatrix.identity(space.odd))

    @classmethod
    def zero(cls, domain: SuperSpace, codomain: SuperSpace) -> SuperMap:
        return cls(domain, codomain, QMatrix.zeros(codomain.even, domain.even), QMatrix.zeros(codomain.odd, domain.odd))

    @classmethod
    def from_full(cls, domain: SuperSpace, codomain: SuperSpace, m: QMatrix) -> SuperMap:
        """Split a matrix on the full bases; refuses maps with odd (parity-changing) parts."""
        if m.shape != (codomain.total, domain.total):
            raise ShapeError(f"full matrix has shape {m.shape}, expected {(codomain.total, domain.total)}")
        ce, de = codomain.even, domain.even
        for i in range(codomain.total):
            for j in range(domain.total):
                if m.rows[i][j] and (i < ce) != (j < de):
                    raise ShapeError("matrix mixes parities; only even maps are supported")
        return cls(
            domain,
            codomain,
            m.select(range(ce), range(de)),
            m.select(range(ce, codomain.total), range(de, domain.total)),
        )

    def full(self) -> QMatrix:
        return QMatrix.block_diag(self.even_block, self.odd_block)

    def block(self, parity: int) -> QMatrix:
        return self.odd_block if parity else self.even_block

    def __matmul__(self, other: SuperMap) -> SuperMap:
        """Composition: ``(g @ f)(x) = g(f(x))``."""
        if other.codomain != self.domain:
            raise ShapeError(f"cannot compose: codomain {other.codomain} != domain {self.domain}")
        return SuperMap(other.domain, self.codomain, self.even_block @ other.even_block, self.odd_block @ other.odd_block)

    def _check_parallel(self, other: SuperMap):
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise ShapeError("maps are not parallel")

    def __add__(self, other: SuperMap) -> SuperMap:
        self._check_parallel(other)
        return SuperMap(self.domain, self.codomain, self.even_block + other.even_block, self.odd_block + other.odd_block)

    def __sub__(self, other: SuperMap) -> SuperMap:
        self._check_parallel(other)
        return SuperMap(self.domain, self.codomain, self.even_block - other.even_block, self.odd_block - other.odd_block)

    def scale(self, c) -> SuperMap:
        return SuperMap(self.domain, self.codomain, self.even_block.scale(c), self.odd_block.scale(c))

    def is_zero(self) -> bool:
        return self.even_block.is_zero() and self.odd_block.is_zero()

    def rank(self) -> SuperDim:
        return SuperDim(self.even_block.rank(), self.odd_block.rank())

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Apply to a coordinate vector on the full basis of the domain."""
        v = tuple(to_fraction(x) for x in v)
        if len(v) != self.domain.total:
            raise ShapeError("vector length does not match the domain")
        de = self.domain.even
        return self.even_block.apply(v[:de]) + self.odd_block.apply(v[de:])


@dataclass(frozen=True)
class ZeroSequence:
    """``M' --i--> M --p--> M''`` with ``p ∘ i = 0``."""

    i: SuperMap
    p: SuperMap

    def __post_init__(self):
        if self.i.codomain != self.p.domain:
            raise ShapeError("i and p are not composable")
        if not (self.p @ self.i).is_zero():
            raise PreconditionError("p ∘ i is not the zero map")

    @property
    def left(self) -> SuperSpace:
        return self.i.domain

    @property
    def middle(self) -> SuperSpace:
        return self.i.codomain

    @property
    def right(self) -> SuperSpace:
        return self.p.codomain


# -- direct sums ---------------------------------------------------------------


def direct_sum(a, b):
    """Direct sum of two spaces, or block-diagonal sum of two maps.

    The basis of ``A ⊕ B`` is: even part of A, even part of B, odd part of A,
    odd part of B.
    """
    if isinstance(a, SuperSpace) and isinstance(b, SuperSpace):
        return SuperSpace(a.even + b.even, a.odd + b.odd)
    if isinstance(a, SuperMap) and isinstance(b, SuperMap):
        return SuperMap(
            direct_sum(a.domain, b.domain),
            direct_sum(a.codomain, b.codomain),
            QMatrix.block_diag(a.even_block, b.even_block),
            QMatrix.block_diag(a.odd_block, b.odd_block),
        )
    raise TypeError("direct_sum expects two SuperSpaces or two SuperMaps")


def inclusions(a: SuperSpace, b: SuperSpace) -> tuple[SuperMap, SuperMap]:
    """Canonical inclusions ``A -> A ⊕ B`` and ``B -> A ⊕ B``."""
    s = direct_sum(a, b)
    ia = direct_sum(SuperMap.identity(a), SuperMap.zero(SuperSpace(0, 0), b))
    ib = direct_sum(SuperMap.zero(SuperSpace(0, 0), a), SuperMap.identity(b))
    return (
        SuperMap(a, s, ia.even_block, ia.odd_block),
        SuperMap(b, s, ib.even_block, ib.odd_block),
    )


def projections(a: SuperSpace, b: SuperSpace) -> tuple[SuperMap, SuperMap]:
    """Canonical projections ``A ⊕ B -> A`` and ``A ⊕ B -> B``."""
    ia, ib = inclusions(a, b)
    return dual_map_plain(ia), dual_map_plain(ib)


def dual_map_plain(f: SuperMap) -> SuperMap:
    """Transpose of ``f`` as a map ``codomain -> domain`` (no dualisation of spaces)."""
    return SuperMap(f.codomain, f.domain, f.even_block.T, f.odd_block.T)


# -- tensor products -------------------------------------------------------------


@lru_cache(maxsize=None)
def tensor_basis(spaces: tuple[SuperSpace, ...]) -> tuple[tuple[int, ...], ...]:
    """Index tuples of the basis of ``spaces[0] ⊗ ... ⊗ spaces[-1]`` in basis order."""
    tuples = list(product(*(range(s.total) for s in spaces)))
    parity = [sum(s.parity(i) for s, i in zip(spaces, t)) % 2 for t in tuples]
    return tuple(t for t, p in zip(tuples, parity) if p == 0) + tuple(t for t, p in zip(tuples, parity) if p == 1)


@lru_cache(maxsize=None)
def _tensor_position(spaces: tuple[SuperSpace, ...]) -> dict[tuple[int, ...], int]:
    return {t: k for k, t in enumerate(tensor_basis(spaces))}


def _tensor_space(spaces: Sequence[SuperSpace]) -> SuperSpace:
    d = reduce(lambda x, y: x * y, (s.dim for s in spaces), SuperDim(1, 0))
    return SuperSpace(d.even, d.odd)


def tensor(*factors):
    """Tensor product of spaces, or of maps (no signs: all maps are even)."""
    if not factors:
        return UNIT
    if all(isinstance(f, SuperSpace) for f in factors):
        return _tensor_space(factors)
    if all(isinstance(f, SuperMap) for f in factors):
        doms = tuple(f.domain for f in factors)
        cods = tuple(f.codomain for f in factors)
        dom, cod = _tensor_space(doms), _tensor_space(cods)
        fulls = [f.full() for f in factors]
        dbasis, cbasis = tensor_basis(doms), tensor_basis(cods)
        rows = []
        for ct in cbasis:
            frows = [m.rows[i] for m, i in zip(fulls, ct)]
            row = []
            for dt in dbasis:
                x = Fraction(1)
                for r, j in zip(frows, dt):
                    x *= r[j]
                    if not x:
                        break
                row.append(x)
            rows.append(tuple(row))
        return SuperMap.from_full(dom, cod, QMatrix(cod.total, dom.total, tuple(rows)))
    raise TypeError("tensor expects only SuperSpaces or only SuperMaps")


def _permutation_map(domain: SuperSpace, codomain: SuperSpace, images: dict[int, tuple[int, int]]) -> SuperMap:
    """Map sending basis vector ``j`` to ``sign * e_k`` for ``images[j] = (k, sign)``."""
    rows = [[Fraction(0)] * domain.total for _ in range(codomain.total)]
    for j, (k, sign) in images.items():
        rows[k][j] = Fraction(sign)
    return SuperMap.from_full(domain, codomain, QMatrix.from_rows(rows, domain.total))


def braiding(a: SuperSpace, b: SuperSpace) -> SuperMap:
    """The symmetry ``a ⊗ b -> b ⊗ a``, ``v ⊗ w |-> (-1)^{|v||w|} w ⊗ v``."""
    src = tensor_basis((a, b))
    tgt = _tensor_position((b, a))
    images = {}
    for j, (i, k) in enumerate(src):
        sign = -1 if a.parity(i) and b.parity(k) else 1
        images[j] = (tgt[(k, i)], sign)
    return _permutation_map(tensor(a, b), tensor(b, a), images)


def associator(a: SuperSpace, b: SuperSpace, c: SuperSpace) -> SuperMap:
    """``(a ⊗ b) ⊗ c -> a ⊗ (b ⊗ c)`` between the two iterated bases."""
    ab, bc = tensor(a, b), tensor(b, c)
    ab_basis, bc_pos = tensor_basis((a, b)), _tensor_position((b, c))
    src = tensor_basis((ab, c))
    tgt = _tensor_position((a, bc))
    images = {}
    for j, (p, k) in enumerate(src):
        i, jj = ab_basis[p]
        images[j] = (tgt[(i, bc_pos[(jj, k)])], 1)
    return _permutation_map(tensor(ab, c), tensor(a, bc), images)


# -- duality ---------------------------------------------------------------------


def dual(a: SuperSpace) -> SuperSpace:
    """The dual space; the dual basis keeps the parities of the original."""
    return SuperSpace(a.even, a.odd)


def dual_map(f: SuperMap) -> SuperMap:
    """``f^∨ : N^∨ -> M^∨`` (precomposition with ``f``; blockwise transpose)."""
    return SuperMap(dual(f.codomain), dual(f.domain), f.even_block.T, f.odd_block.T)


def evaluation(a: SuperSpace) -> SuperMap:
    """``ev : a^∨ ⊗ a -> 1``, ``φ_i ⊗ v_j |-> δ_ij``."""
    src = tensor_basis((dual(a), a))
    rows = [[Fraction(1 if i == j else 0) for (i, j) in src]]
    return SuperMap.from_full(tensor(dual(a), a), UNIT, QMatrix.from_rows(rows, a.total**2))


def coevaluation(a: SuperSpace) -> SuperMap:
    """``coev : 1 -> a ⊗ a^∨``, ``1 |-> Σ_i v_i ⊗ φ_i``."""
    tgt = tensor_basis((a, dual(a)))
    rows = [[Fraction(1 if i == j else 0)] for (i, j) in tgt]
    return SuperMap.from_full(UNIT, tensor(a, dual(a)), QMatrix.from_rows(rows, 1))


def unit_map(a: SuperSpace) -> SuperMap:
    """``1 -> a^∨ ⊗ a``: the coevaluation followed by the braiding."""
    return braiding(a, dual(a)) @ coevaluation(a)


def counit_map(a: SuperSpace) -> SuperMap:
    """``a ⊗ a^∨ -> 1``: the braiding followed by the evaluation."""
    return evaluation(a) @ braiding(a, dual(a))


def name(f: SuperMap) -> SuperMap:
    """The adjoint ``1 -> M^∨ ⊗ N`` of ``f : M -> N``."""
    m = f.domain
    return tensor(SuperMap.identity(dual(m)), f) @ unit_map(m)


def coname(f: SuperMap) -> SuperMap:
    """The adjoint ``M ⊗ N^∨ -> 1`` of ``f : M -> N``."""
    n = f.codomain
    return counit_map(n) @ tensor(f, SuperMap.identity(dual(n)))


def supertrace(f: SuperMap) -> Fraction:
    if f.domain != f.codomain:
        raise ShapeError("supertrace needs an endomorphism")
    return f.even_block.trace() - f.odd_block.trace()


def categorical_trace(f: SuperMap) -> Fraction:
    """``ev ∘ braiding ∘ (f ⊗ id) ∘ coev``, read off as a scalar."""
    if f.domain != f.codomain:
        raise ShapeError("trace needs an endomorphism")
    a = f.domain
    t = evaluation(a) @ braiding(a, dual(a)) @ tensor(f, SuperMap.identity(dual(a))) @ coevaluation(a)
    return t.even_block[0, 0]


# -- kernels, cokernels, images ----------------------------------------------------


def is_mono(f: SuperMap) -> bool:
    return f.even_block.rank() == f.domain.even and f.odd_block.rank() == f.domain.odd


def is_epi(f: SuperMap) -> bool:
    return f.even_block.rank() == f.codomain.even and f.odd_block.rank() == f.codomain.odd


def is_iso(f: SuperMap) -> bool:
    return is_mono(f) and is_epi(f)


def kernel(f: SuperMap) -> SuperMap:
    """Inclusion ``K -> M`` of the kernel; its columns are an exact nullspace basis."""
    ke, ko = f.even_block.nullspace(), f.odd_block.nullspace()
    return SuperMap(SuperSpace(ke.ncols, ko.ncols), f.domain, ke, ko)


def cokernel(f: SuperMap) -> SuperMap:
    """Quotient ``N -> C`` by the image; rows span the left nullspace of ``f``."""
    qe, qo = f.even_block.left_nullspace(), f.odd_block.left_nullspace()
    return SuperMap(f.codomain, SuperSpace(qe.nrows, qo.nrows), qe, qo)


def image_factorization(f: SuperMap) -> tuple[SuperMap, SuperMap]:
    """``(e, m)`` with ``f = m ∘ e``, ``e`` epi onto the image, ``m`` mono into the codomain."""
    ce, re = f.even_block.column_basis()
    co, ro = f.odd_block.column_basis()
    im = SuperSpace(ce.ncols, co.ncols)
    return SuperMap(f.domain, im, re, ro), SuperMap(im, f.codomain, ce, co)


def image(f: SuperMap) -> SuperMap:
    """Inclusion of the image of ``f`` into its codomain."""
    return image_factorization(f)[1]


def _extend_to_basis(c: QMatrix) -> QMatrix:
    """Standard basis vectors completing the columns of ``c`` to a basis."""
    n = c.nrows
    chosen = [c.column(j) for j in range(c.ncols)]
    extra = []
    rank = c.ncols
    for i in range(n):
        e = tuple(Fraction(int(k == i)) for k in range(n))
        if QMatrix.from_columns(chosen + [e], n).rank() > rank:
            chosen.append(e)
            extra.append(e)
            rank += 1
        if rank == n:
            break
    return QMatrix.from_columns(extra, n)


@dataclass(frozen=True)
class Split:
    """``f`` decomposed as an isomorphism plus a zero map.

    With ``M = M' ⊕ M''`` (``M''`` the kernel) and ``N = N' ⊕ N''`` (``N'`` the
    image), ``target_iso ∘ f ∘ source_iso⁻¹ = iso ⊕ zero``.
    """

    f: SuperMap
    source_iso: SuperMap
    target_iso: SuperMap
    iso: SuperMap
    zero: SuperMap

    @property
    def iso_source(self) -> SuperSpace:
        return self.iso.domain

    def generalized_inverse(self) -> SuperMap:
        """``g`` with ``f ∘ g ∘ f = f``."""
        inv_src = _invert(self.source_iso)
        iso_inv = _invert(self.iso)
        mid = direct_sum(iso_inv, SuperMap.zero(self.zero.codomain, self.zero.domain))
        return inv_src @ mid @ self.target_iso

    def idempotent(self) -> SuperMap:
        """``g ∘ f``: an idempotent on the source with the same rank as ``f``."""
        return self.generalized_inverse() @ self.f

    def verify(self) -> bool:
        lhs = self.target_iso @ self.f
        rhs = direct_sum(self.iso, self.zero) @ self.source_iso
        return lhs == rhs and is_iso(self.iso) and self.zero.is_zero()


def _invert(f: SuperMap) -> SuperMap:
    return SuperMap(f.codomain, f.domain, f.even_block.inverse(), f.odd_block.inverse())


def split_iso_zero(f: SuperMap) -> Split:
    """Split ``f`` as (iso) ⊕ (zero) by choosing complements of kernel and image per parity."""
    parts = []
    for blk in (f.even_block, f.odd_block):
        c, r = blk.column_basis()
        _, pivots = blk.rref()
        k = len(pivots)
        ker = blk.nullspace()
        coker_comp = _extend_to_basis(c)
        src_cols = [tuple(Fraction(int(i == p)) for i in range(blk.ncols)) for p in pivots]
        src_cols += [ker.column(j) for j in range(ker.ncols)]
        src_inv = QMatrix.from_columns(src_cols, blk.ncols)
        tgt_cols = [c.column(j) for j in range(c.ncols)] + [coker_comp.column(j) for j in range(coker_comp.ncols)]
        tgt_inv = QMatrix.from_columns(tgt_cols, blk.nrows)
        parts.append((k, ker.ncols, blk.nrows - k, src_inv.inverse(), tgt_inv.inverse()))
    (ke, kke, cke, pe, qe), (ko, kko, cko, po, qo) = parts
    m1, m2 = SuperSpace(ke, ko), SuperSpace(kke, kko)
    n1, n2 = SuperSpace(ke, ko), SuperSpace(cke, cko)
    source_iso = SuperMap(f.domain, direct_sum(m1, m2), pe, po)
    target_iso = SuperMap(f.codomain, direct_sum(n1, n2), qe, qo)
    transported = target_iso @ f @ _invert(source_iso)
    iso = SuperMap(m1, n1, transported.even_block.select(range(ke), range(ke)), transported.odd_block.select(range(ko), range(ko)))
    split = Split(f, source_iso, target_iso, iso, SuperMap.zero(m2, n2))
    if not split.verify():
        raise ShapeError("iso ⊕ zero splitting failed to verify")
    return split


def is_invertible(a: SuperSpace) -> bool:
    """Whether ``a`` is ⊗-invertible with inverse ``a^∨``.

    Checks that evaluation and coevaluation are isomorphisms and that
    ``ev ∘ unit`` is a unit of ``End(1) = Q`` (it equals ``m - n``).
    """
    if not (is_iso(evaluation(a)) and is_iso(coevaluation(a))):
        return False
    loop = evaluation(a) @ unit_map(a)
    return loop.even_block[0, 0] != 0


# -- JSON interchange --------------------------------------------------------------


class InterchangeError(ValueError):
    """Malformed JSON input; ``location`` is a JSON-pointer-like path."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


def _rational(x, loc: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InterchangeError(loc, f"expected an integer or 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise InterchangeError(loc, f"malformed rational {x!r}") from None


def space_to_json(a: SuperSpace) -> dict:
    return {"even": a.even, "odd": a.odd}


def space_from_json(obj, loc: str = "$") -> SuperSpace:
    if not isinstance(obj, dict):
        raise InterchangeError(loc, "a space must be an object with 'even' and 'odd'")
    out = []
    for key in ("even", "odd"):
        v = obj.get(key)
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise InterchangeError(f"{loc}.{key}", f"expected a non-negative integer, got {v!r}")
        out.append(v)
    return SuperSpace(*out)


def map_to_json(f: SuperMap) -> dict:
    return {
        "domain": space_to_json(f.domain),
        "codomain": space_to_json(f.codomain),
        "even_block": f.even_block.to_strings(),
        "odd_block": f.odd_block.to_strings(),
    }


def map_from_json(obj, loc: str = "$") -> SuperMap:
    if not isinstance(obj, dict):
        raise InterchangeError(loc, "a map must be a JSON object")
    for key in ("domain", "codomain", "even_block", "odd_block"):
        if key not in obj:
            raise InterchangeError(loc, f"missing key {key!r}")
    dom = space_from_json(obj["domain"], f"{loc}.domain")
    cod = space_from_json(obj["codomain"], f"{loc}.codomain")
    blocks = []
    for key, nrows, ncols in (("even_block", cod.even, dom.even), ("odd_block", cod.odd, dom.odd)):
        rows = obj[key]
        bloc = f"{loc}.{key}"
        if not isinstance(rows, list) or len(rows) != nrows:
            raise InterchangeError(bloc, f"expected a list of {nrows} rows")
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != ncols:
                raise InterchangeError(f"{bloc}[{i}]", f"expected a row of {ncols} entries")
            parsed.append([_rational(x, f"{bloc}[{i}][{j}]") for j, x in enumerate(row)])
        blocks.append(QMatrix.from_rows(parsed, ncols))
    return SuperMap(dom, cod, *blocks)
