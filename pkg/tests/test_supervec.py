import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superschur.corpus import map_corpus, random_map, rng_for
from superschur.errors import PreconditionError, ShapeError
from superschur.linalg import QMatrix
from superschur.supervec import (
    UNIT,
    InterchangeError,
    SuperDim,
    SuperMap,
    SuperSpace,
    ZeroSequence,
    associator,
    braiding,
    categorical_trace,
    coevaluation,
    cokernel,
    coname,
    counit_map,
    direct_sum,
    dual,
    dual_map,
    evaluation,
    image,
    image_factorization,
    inclusions,
    is_epi,
    is_invertible,
    is_iso,
    is_mono,
    kernel,
    map_from_json,
    map_to_json,
    name,
    projections,
    space_from_json,
    split_iso_zero,
    supertrace,
    tensor,
    unit_map,
)

spaces = st.builds(SuperSpace, st.integers(0, 2), st.integers(0, 2))
seeds = st.integers(0, 2**32)


def maps_between(dom, cod):
    return seeds.map(lambda s: random_map(random.Random(s), dom, cod))


maps = st.tuples(spaces, spaces).flatmap(lambda dc: maps_between(*dc))
endos = spaces.flatmap(lambda s: maps_between(s, s))


def sm(dom, cod, even, odd):
    return SuperMap.from_blocks(SuperSpace(*dom), SuperSpace(*cod), even, odd)


# -- dimensions, sums, tensors ---------------------------------------------------------


def test_superdim_arithmetic_and_parsing():
    assert SuperDim(1, 0) + SuperDim(0, 1) == SuperDim(1, 1)
    assert SuperDim(1, 1) * SuperDim(1, 1) == SuperDim(2, 2)
    assert SuperDim(0, 1) * SuperDim(0, 1) == SuperDim(1, 0)
    assert SuperDim(3, 2) * SuperDim(1, 0) == SuperDim(3, 2)
    assert SuperDim.parse("2|1") == SuperDim(2, 1) and str(SuperDim(2, 1)) == "2|1"
    assert SuperDim(1, 1) <= SuperDim(2, 1) and not SuperDim(2, 0) <= SuperDim(1, 1)
    for bad in ("2", "a|b", "-1|0", "1|1|1"):
        with pytest.raises(ValueError):
            SuperDim.parse(bad)


def test_direct_sum_examples():
    assert direct_sum(SuperSpace(1, 0), SuperSpace(0, 1)).dim == SuperDim(1, 1)
    assert direct_sum(SuperSpace(2, 1), SuperSpace(0, 0)).dim == SuperDim(2, 1)
    f = sm((1, 1), (1, 1), [[3]], [[-1]])
    s = direct_sum(f, SuperMap.zero(SuperSpace(1, 0), SuperSpace(0, 1)))
    assert s.rank() == SuperDim(1, 1)


def test_tensor_examples():
    assert tensor(SuperSpace(1, 1), SuperSpace(1, 1)).dim == SuperDim(2, 2)
    assert tensor(SuperSpace(0, 1), SuperSpace(0, 1)).dim == SuperDim(1, 0)
    assert tensor(SuperSpace(3, 2), UNIT).dim == SuperDim(3, 2)


def test_braiding_signs():
    even = SuperSpace(1, 0)
    odd = SuperSpace(0, 1)
    assert braiding(even, even).full() == QMatrix.identity(1)
    assert braiding(odd, odd).full() == QMatrix.identity(1).scale(-1)
    assert braiding(even, odd).full() == QMatrix.identity(1)


@given(spaces, spaces)
def test_braiding_is_symmetric(a, b):
    assert braiding(b, a) @ braiding(a, b) == SuperMap.identity(tensor(a, b))


@settings(max_examples=40)
@given(spaces, spaces, spaces)
def test_hexagon(a, b, c):
    # (a⊗b)⊗c -> a⊗(b⊗c) -> (b⊗c)⊗a -> b⊗(c⊗a) equals the route through a swap of a,b then a,c
    left = associator(b, c, a) @ braiding(a, tensor(b, c)) @ associator(a, b, c)
    right = (
        tensor(SuperMap.identity(b), braiding(a, c))
        @ associator(b, a, c)
        @ tensor(braiding(a, b), SuperMap.identity(c))
    )
    assert left == right


@settings(max_examples=40)
@given(maps, maps)
def test_braiding_is_natural(f, g):
    lhs = braiding(f.codomain, g.codomain) @ tensor(f, g)
    rhs = tensor(g, f) @ braiding(f.domain, g.domain)
    assert lhs == rhs


@settings(max_examples=40)
@given(maps, maps, maps)
def test_tensor_is_functorial(f, g, h):
    k = random_map(random.Random(1), g.codomain, h.domain)
    assert tensor(f, h @ k) @ tensor(SuperMap.identity(f.domain), g) == tensor(f, h @ k @ g)


# -- duality -------------------------------------------------------------------------


def assoc_inv(a, b, c):
    """``a ⊗ (b ⊗ c) -> (a ⊗ b) ⊗ c``."""
    f = associator(a, b, c)
    return SuperMap.from_full(f.codomain, f.domain, f.full().inverse())


@given(spaces)
def test_triangle_identities(a):
    d = dual(a)
    ida, idd = SuperMap.identity(a), SuperMap.identity(d)
    # a -> (a⊗a^∨)⊗a -> a⊗(a^∨⊗a) -> a
    first = tensor(ida, evaluation(a)) @ associator(a, d, a) @ tensor(coevaluation(a), ida)
    assert first == ida
    # a^∨ -> a^∨⊗(a⊗a^∨) -> (a^∨⊗a)⊗a^∨ -> a^∨
    second = tensor(evaluation(a), idd) @ assoc_inv(d, a, d) @ tensor(idd, coevaluation(a))
    assert second == idd


def test_dual_examples():
    assert dual(SuperSpace(2, 1)).dim == SuperDim(2, 1)
    assert (evaluation(SuperSpace(2, 1)) @ unit_map(SuperSpace(2, 1))).even_block[0, 0] == 1


@settings(max_examples=60)
@given(endos)
def test_supertrace_is_the_categorical_trace(f):
    assert supertrace(f) == categorical_trace(f)


@pytest.mark.parametrize("m, n", [(2, 1), (1, 1), (3, 1), (0, 2), (0, 0)])
def test_supertrace_of_identity(m, n):
    assert supertrace(SuperMap.identity(SuperSpace(m, n))) == m - n
    assert categorical_trace(SuperMap.identity(SuperSpace(m, n))) == m - n


def test_supertrace_rejects_non_endomorphisms():
    assert supertrace(SuperMap.zero(SuperSpace(1, 1), SuperSpace(1, 1))) == 0
    with pytest.raises(ShapeError):
        supertrace(SuperMap.zero(SuperSpace(1, 0), SuperSpace(2, 0)))


def test_name_examples():
    line = SuperSpace(1, 0)
    n = name(SuperMap.identity(line))
    assert n.domain == UNIT and not n.is_zero()
    assert name(SuperMap.zero(SuperSpace(2, 1), SuperSpace(1, 1))).is_zero()
    one = sm((1, 0), (1, 0), [[1]], [])
    two = sm((1, 0), (1, 0), [[2]], [])
    assert name(one) != name(two)


@settings(max_examples=60)
@given(maps)
def test_name_and_coname_recover_the_map(f):
    m, n = f.domain, f.codomain
    idm, idn = SuperMap.identity(m), SuperMap.identity(n)
    # m -> m⊗(m^∨⊗n) -> (m⊗m^∨)⊗n -> n
    recovered = tensor(counit_map(m), idn) @ assoc_inv(m, dual(m), n) @ tensor(idm, name(f))
    assert recovered.full() == f.full()
    # m -> m⊗(n^∨⊗n) -> (m⊗n^∨)⊗n -> n
    back = tensor(coname(f), idn) @ assoc_inv(m, dual(n), n) @ tensor(idm, unit_map(n))
    assert back.full() == f.full()
    assert name(f).is_zero() == f.is_zero()


# -- kernels, cokernels, mono/epi ------------------------------------------------------


def test_mono_epi_examples():
    inc = sm((1, 0), (2, 0), [[1], [0]], [])
    assert is_mono(inc) and not is_epi(inc)
    z = SuperMap.zero(SuperSpace(2, 1), SuperSpace(1, 0))
    k = kernel(z)
    assert k.domain == SuperSpace(2, 1) and is_iso(k)
    r1 = sm((2, 0), (2, 0), [[1, 2], [2, 4]], [])
    assert kernel(r1).domain.dim == SuperDim(1, 0)
    assert cokernel(r1).codomain.dim == SuperDim(1, 0)


@settings(max_examples=200)
@given(maps)
def test_rank_nullity_and_universal_maps(f):
    k, q = kernel(f), cokernel(f)
    assert (f @ k).is_zero() and (q @ f).is_zero()
    assert is_mono(k) and is_epi(q)
    assert k.domain.dim + f.rank() == f.domain.dim
    assert q.codomain.dim + f.rank() == f.codomain.dim
    e, m = image_factorization(f)
    assert m @ e == f and is_epi(e) and is_mono(m)
    assert image(f).domain.dim == f.rank()


@settings(max_examples=100)
@given(maps)
def test_mono_epi_swap_under_duality(f):
    g = dual_map(f)
    assert is_mono(f) == is_epi(g)
    assert is_epi(f) == is_mono(g)
    assert dual_map(g) == f


@settings(max_examples=60)
@given(maps, spaces)
def test_kernel_and_cokernel_commute_with_tensoring(f, p):
    idp = SuperMap.identity(p)
    fp = tensor(f, idp)
    assert kernel(fp).domain.dim == kernel(f).domain.dim * p.dim
    assert cokernel(fp).codomain.dim == cokernel(f).codomain.dim * p.dim
    # the tensored kernel inclusion is a kernel of f ⊗ P
    assert (fp @ tensor(kernel(f), idp)).is_zero()
    assert is_mono(tensor(kernel(f), idp))
    assert is_epi(tensor(cokernel(f), idp))


@settings(max_examples=100)
@given(maps)
def test_iso_zero_split(f):
    s = split_iso_zero(f)
    assert s.verify()
    assert s.iso_source.dim == f.rank()
    g = s.generalized_inverse()
    assert f @ g @ f == f
    e = s.idempotent()
    assert e @ e == e and e.rank() == f.rank()


def test_rank_nullity_on_seeded_corpus():
    for f in map_corpus(3, 200):
        assert kernel(f).domain.dim + f.rank() == f.domain.dim


def test_direct_sum_structure_maps():
    a, b = SuperSpace(1, 1), SuperSpace(2, 0)
    i1, i2 = inclusions(a, b)
    p1, p2 = projections(a, b)
    assert p1 @ i1 == SuperMap.identity(a) and p2 @ i2 == SuperMap.identity(b)
    assert (p1 @ i2).is_zero() and (p2 @ i1).is_zero()
    assert i1 @ p1 + i2 @ p2 == SuperMap.identity(direct_sum(a, b))


@pytest.mark.parametrize("m, n, expected", [(1, 0, True), (0, 1, True), (1, 1, False), (2, 0, False), (0, 0, False)])
def test_invertible_objects(m, n, expected):
    assert is_invertible(SuperSpace(m, n)) is expected


def test_maps_are_even():
    with pytest.raises(ShapeError):
        SuperMap.from_full(SuperSpace(1, 1), SuperSpace(1, 1), QMatrix.from_rows([[1, 1], [0, 1]]))
    with pytest.raises(ShapeError):
        SuperMap(SuperSpace(1, 0), SuperSpace(1, 0), QMatrix.identity(2), QMatrix.zeros(0, 0))


def test_zero_sequence_requires_composite_zero():
    i = sm((1, 0), (1, 0), [[1]], [])
    with pytest.raises(PreconditionError):
        ZeroSequence(i, i)
    with pytest.raises(ShapeError):
        ZeroSequence(i, sm((2, 0), (1, 0), [[1, 0]], []))


# -- interchange ---------------------------------------------------------------------


@settings(max_examples=100)
@given(maps, st.integers(1, 5))
def test_json_round_trip(f, q):
    f = f.scale(Fraction(1, q))
    text = json.dumps(map_to_json(f))
    assert map_from_json(json.loads(text)) == f


@pytest.mark.parametrize(
    "obj, location",
    [
        ([], "$"),
        ({"domain": {"even": 1, "odd": 0}}, "$"),
        ({"domain": {"even": -1, "odd": 0}, "codomain": {"even": 1, "odd": 0}, "even_block": [], "odd_block": []}, "$.domain.even"),
        ({"domain": {"even": 1, "odd": 0}, "codomain": {"even": 1, "odd": 0}, "even_block": [[1, 2]], "odd_block": []}, "$.even_block[0]"),
        ({"domain": {"even": 1, "odd": 0}, "codomain": {"even": 1, "odd": 0}, "even_block": [["1/0"]], "odd_block": []}, "$.even_block[0][0]"),
        ({"domain": {"even": 1, "odd": 0}, "codomain": {"even": 1, "odd": 0}, "even_block": [[0.5]], "odd_block": []}, "$.even_block[0][0]"),
    ],
)
def test_malformed_json_reports_location(obj, location):
    with pytest.raises(InterchangeError) as exc:
        map_from_json(obj)
    assert exc.value.location == location


def test_space_json():
    assert space_from_json({"even": 2, "odd": 1}) == SuperSpace(2, 1)
    with pytest.raises(InterchangeError):
        space_from_json({"even": True, "odd": 1})


def test_counit_is_the_dual_of_unit():
    a = SuperSpace(2, 1)
    assert counit_map(a).full() == unit_map(a).full().T
    assert rng_for(1, "x").random() == rng_for(1, "x").random()
