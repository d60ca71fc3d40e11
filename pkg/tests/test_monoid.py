import pytest
from hypothesis import given, settings, strategies as st

from charmonoid.errors import BadDegrees, RankMismatch
from charmonoid.monoid import (
    member,
    minimal_generators,
    minimal_multiple,
    monoid_equal,
    outer_product_monoid,
    presentation,
    regular_vector,
    restrict_support,
)
from .conftest import random_generators


def unit(rank, j):
    return tuple(1 if i == j else 0 for i in range(rank))


def test_presentation_drops_zero_and_duplicates():
    m = presentation(2, [(0, 0), (1, 0), (1, 0), (0, 2)])
    assert m.generators == ((1, 0), (0, 2))


def test_presentation_canonical_order():
    m = presentation(3, [(0, 0, 1), (1, 0, 0), (0, 1, 1), (1, 1, 0)])
    assert m.generators == ((1, 0, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1))


def test_member_zero_vector_empty_certificate(sl23):
    cert = member((0,) * 7, sl23)
    assert cert is not None and cert.multiplicities == {}


def test_member_sl23_examples(sl23):
    cert = member((0, 0, 0, 1, 1, 1, 0), sl23)
    assert cert is not None
    assert cert.expand(sl23) == (0, 0, 0, 1, 1, 1, 0)
    assert member(unit(7, 3), sl23) is None


def test_member_rank_mismatch(sl23):
    with pytest.raises(RankMismatch):
        member((1, 0), sl23)


def test_minimal_generators_examples():
    m = presentation(2, [(1, 0), (0, 1), (1, 1)])
    assert minimal_generators(m).generators == ((1, 0), (0, 1))
    m2 = presentation(1, [(2,), (3,)])
    assert minimal_generators(m2).generators == ((2,), (3,))


def test_minimal_generators_idempotent_and_certified(rng):
    for _ in range(40):
        rank = rng.randint(1, 4)
        m = presentation(rank, random_generators(rng, rank, rng.randint(1, 7)))
        mg = minimal_generators(m)
        assert minimal_generators(mg).generators == mg.generators
        for i, g in enumerate(mg.generators):
            others = presentation(
                rank, [h for j, h in enumerate(mg.generators) if j != i]
            )
            assert member(g, others) is None
        for g in m.generators:
            assert member(g, mg) is not None


def test_monoid_equal_examples():
    a = presentation(1, [(1,)])
    b = presentation(1, [(1,), (2,)])
    assert monoid_equal(a, b)
    assert not monoid_equal(presentation(1, [(2,)]), presentation(1, [(3,)]))
    with pytest.raises(RankMismatch):
        monoid_equal(a, presentation(2, [(1, 0)]))


def test_monoid_equal_is_equivalence(rng):
    for _ in range(25):
        rank = rng.randint(1, 3)
        ms = [
            presentation(rank, random_generators(rng, rank, rng.randint(1, 5)))
            for _ in range(3)
        ]
        for m in ms:
            assert monoid_equal(m, m)
        for x in ms:
            for y in ms:
                assert monoid_equal(x, y) == monoid_equal(y, x)
        a, b, c = ms
        if monoid_equal(a, b) and monoid_equal(b, c):
            assert monoid_equal(a, c)


def test_restrict_support_examples(sl23):
    r = restrict_support(sl23, [0, 1, 2, 6])
    assert r.generators == tuple(unit(4, j) for j in range(4))
    assert restrict_support(sl23, range(7)).generators == sl23.generators
    m = presentation(2, [(1, 1), (1, 0)])
    assert restrict_support(m, [0]).generators == ((1,),)


def test_restrict_support_membership_consistency(rng):
    for _ in range(30):
        rank = rng.randint(2, 4)
        m = presentation(rank, random_generators(rng, rank, rng.randint(2, 6)))
        keep = sorted(rng.sample(range(rank), rng.randint(1, rank)))
        restricted = restrict_support(m, keep)
        for _ in range(5):
            v = [0] * rank
            for k in keep:
                v[k] = rng.randint(0, 4)
            inner = member(tuple(v), m)
            projected = member(tuple(v[k] for k in keep), restricted)
            assert (inner is None) == (projected is None)


def test_outer_product_units():
    u3 = presentation(3, [unit(3, j) for j in range(3)])
    prod = outer_product_monoid(u3, u3)
    assert prod.generators == tuple(sorted((unit(9, j) for j in range(9)), key=lambda v: (sum(v), tuple(-x for x in v))))
    assert outer_product_monoid(
        presentation(1, [(2,)]), presentation(1, [(3,)])
    ).generators == ((6,),)


def test_outer_product_generators_have_rank_one(rng):
    a = presentation(2, random_generators(rng, 2, 3))
    b = presentation(3, random_generators(rng, 3, 3))
    prod = outer_product_monoid(a, b)
    for v in prod.generators:
        rows = [v[i * 3 : (i + 1) * 3] for i in range(2)]
        # every 2x2 minor of the reshaped matrix vanishes
        for c1 in range(3):
            for c2 in range(c1 + 1, 3):
                assert rows[0][c1] * rows[1][c2] == rows[0][c2] * rows[1][c1]


def test_regular_vector():
    assert regular_vector((1, 1, 1, 2, 2, 2, 3)) == (1, 1, 1, 2, 2, 2, 3)
    assert regular_vector((1,)) == (1,)
    with pytest.raises(BadDegrees):
        regular_vector((2, 1))
    with pytest.raises(BadDegrees):
        regular_vector(())


def test_minimal_multiple_examples():
    m = presentation(1, [(2,), (3,)])
    a, cert = minimal_multiple((1,), m)
    assert a == 2 and cert.expand(m) == (2,)
    # outside the cone: no multiple at all
    sl = presentation(2, [(1, 1)])
    assert minimal_multiple((1, 0), sl) is None
    assert minimal_multiple((2, 2), sl) == minimal_multiple((2, 2), sl)
    a, cert = minimal_multiple((3, 3), sl)
    assert a == 1 and cert.multiplicities == {0: 3}


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=6))
@settings(max_examples=30, deadline=None)
def test_minimal_multiple_two_coprime_steps(p, q):
    m = presentation(1, [(p,), (q,)])
    found = minimal_multiple((1,), m)
    assert found is not None
    a, cert = found
    # independent check: smallest a representable as x*p + y*q
    expected = next(
        a0
        for a0 in range(1, p * q + 1)
        if any((a0 - x * p) >= 0 and (a0 - x * p) % q == 0 for x in range(a0 // p + 1))
    )
    assert a == expected
    assert cert.expand(m) == (a,)
