

from charmonoid.cone import (
    cone_from_generators,
    contains_regular_shifts,
    explicit_multiple,
    in_rational_cone,
    is_normal,
    normalize,
    rational_decomposition,
)
from charmonoid.monoid import member, minimal_generators, presentation
from .conftest import A6_DEGREES, SL23_DEGREES, random_generators


def unit(rank, j):
    return tuple(1 if i == j else 0 for i in range(rank))


def test_cone_unit_square():
    cone = cone_from_generators(presentation(2, [(1, 0), (0, 1)]))
    assert sorted(cone.rays_ambient()) == [(0, 1), (1, 0)]
    assert sorted(cone.normals) == [(0, 1), (1, 0)]


def test_cone_interior_generator_dropped():
    cone = cone_from_generators(presentation(2, [(2, 1), (1, 2), (1, 1)]))
    assert sorted(cone.rays_ambient()) == [(1, 2), (2, 1)]


def test_normalize_rank_one_gap():
    result = normalize(presentation(1, [(2,), (3,)]))
    assert result.closure_hilbert_basis == ((1,),)
    assert result.added == ((1,),)
    assert result.witnesses == (2,)


def test_normalize_units_nothing_added():
    result = normalize(presentation(3, [unit(3, j) for j in range(3)]))
    assert result.added == ()
    assert result.closure_hilbert_basis == tuple(unit(3, j) for j in range(3))


def test_normalize_a6_adds_one_element(a6):
    result = normalize(a6)
    assert result.added == ((0, 1, 1, 1, 1, 1, 0),)
    assert len(result.closure_hilbert_basis) == 17
    k = result.witnesses[result.closure_hilbert_basis.index((0, 1, 1, 1, 1, 1, 0))]
    assert k == 2
    assert member((0, 2, 2, 2, 2, 2, 0), a6) is not None


def test_is_normal(sl23, a6):
    assert is_normal(sl23)
    assert not is_normal(a6)
    assert is_normal(presentation(2, [(1, 0), (0, 1)]))


def test_contains_regular_shifts(sl23, a6):
    assert contains_regular_shifts(sl23, SL23_DEGREES)
    assert contains_regular_shifts(a6, A6_DEGREES)
    assert contains_regular_shifts(
        presentation(3, [unit(3, j) for j in range(3)]), (1, 1, 1)
    )


def test_normalize_idempotent_on_random(rng):
    for _ in range(30):
        rank = rng.randint(1, 3)
        m = presentation(rank, random_generators(rng, rank, rng.randint(1, 6)))
        result = normalize(m)
        closure = presentation(rank, result.closure_hilbert_basis)
        again = normalize(closure)
        assert again.added == ()
        assert again.closure_hilbert_basis == result.closure_hilbert_basis
        # original embeds in the closure
        for g in m.generators:
            assert member(g, closure) is not None
        # every witness re-verifies
        for h, k in zip(result.closure_hilbert_basis, result.witnesses):
            assert member(tuple(k * x for x in h), m) is not None
            if k > 1:
                assert member(h, m) is None


def test_closure_elements_irreducible(rng):
    for _ in range(15):
        rank = rng.randint(2, 3)
        m = presentation(rank, random_generators(rng, rank, rng.randint(2, 5)))
        closure = normalize(m).closure_hilbert_basis
        mg = minimal_generators(presentation(rank, closure))
        assert mg.generators == closure


def test_rational_cone_membership(sl23):
    assert in_rational_cone((0, 1, 1, 2, 2, 2, 3), sl23)
    assert not in_rational_cone(unit(7, 3), sl23)  # e4 misses the cone
    assert in_rational_cone((0, 0, 0, 2, 1, 1, 0), sl23)


def test_rational_decomposition_reconstructs(sl23):
    v = (0, 1, 1, 2, 2, 2, 3)
    decomposition = rational_decomposition(v, sl23)
    assert decomposition is not None
    total = [0] * 7
    for idx, q in decomposition.items():
        for j in range(7):
            total[j] += q * sl23.generators[idx][j]
    assert tuple(total) == v


def test_explicit_multiple_certificate(a6):
    v = (0, 1, 1, 1, 1, 1, 0)
    found = explicit_multiple(v, a6)
    assert found is not None
    a, cert = found
    assert cert.expand(a6) == tuple(a * x for x in v)
    # no generator is supported inside {x4} alone, so e4 misses the cone
    assert explicit_multiple(unit(7, 3), a6) is None
