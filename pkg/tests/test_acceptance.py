"""Acceptance suite: one test per criterion, each printing a verdict line.

All integer computations are exact; "match" means exact equality after
canonical ordering.  Run with ``pytest tests/test_acceptance.py -v -s``
to see the per-criterion lines.
"""

import random

import pytest

from charmonoid.classification import (
    aramata,
    classify,
    matrix_am_profile,
    prop24_harness,
    quotient_check,
    product_check,
    remark_rank5_matrix,
    sl2_conjecture_check,
    sl2_conjecture_generators,
    support_cover,
)
from charmonoid.cone import normalize
from charmonoid.dataio import bundled_names, load_bundled
from charmonoid.lattice import (
    IntMatrix,
    lattice_is_full_unimodular,
    minimal_homogeneous_solutions,
)
from charmonoid.monoid import (
    member,
    minimal_generators,
    monoid_equal,
    outer_product_monoid,
    presentation,
)
from charmonoid.supercharacter import (
    c_almost_monomial,
    c_almost_monomial_pairwise,
    classical_theory,
    maximal_theory,
    supertheory,
)
from charmonoid.toric import _enumerate_fiber, fiber_connected, markov_basis
from .conftest import A6_HILBERT, GL23_HILBERT, SL23_HILBERT, random_generators
from .test_lattice import brute_force_minimal


def _report(criterion, detail):
    print(f"ACCEPTANCE {criterion}: PASS ({detail})")


def test_criterion_01_sl23():
    data = load_bundled("sl23")
    hb = data.hilbert()
    assert hb.generators == tuple(sorted(SL23_HILBERT, key=lambda v: (sum(v), tuple(-x for x in v))))
    report = classify(hb, data.degrees)
    assert report.monomial is False
    assert report.almost_monomial is True
    basis = markov_basis(hb)
    assert len(basis) == 1
    assert basis[0].plus == (0, 0, 0, 0, 1, 1, 1, 0)
    assert basis[0].minus == (0, 0, 0, 0, 0, 0, 0, 2)
    _report(1, "SL(2,3): 8 generators, almost monomial, t5t6t7 - t8^2")


def test_criterion_02_gl23():
    data = load_bundled("gl23")
    hb = data.hilbert()
    assert hb.generators == tuple(sorted(GL23_HILBERT, key=lambda v: (sum(v), tuple(-x for x in v))))
    assert len(hb.generators) == 9
    report = classify(hb, data.degrees)
    assert report.almost_monomial is False
    assert support_cover(hb, 7) is None
    basis = markov_basis(hb)
    assert len(basis) == 1
    assert basis[0].plus == (0, 0, 0, 0, 0, 1, 0, 0, 1)
    assert basis[0].minus == (0, 0, 0, 0, 0, 0, 1, 1, 0)
    _report(2, "GL(2,3): 9 generators, not almost monomial, t6t9 - t7t8")


def test_criterion_03_a6():
    data = load_bundled("a6")
    hb = data.hilbert()
    assert set(hb.generators) == set(A6_HILBERT)
    assert len(hb.generators) == 16
    result = normalize(hb)
    assert result.added == ((0, 1, 1, 1, 1, 1, 0),)
    doubled = tuple(2 * x for x in (0, 1, 1, 1, 1, 1, 0))
    assert member(doubled, hb) is not None
    report = classify(hb, data.degrees)
    assert report.almost_monomial is False
    _report(3, "A6: 16 generators, closure adds x2x3x4x5x6, square certified")


def test_criterion_04_brauer_unimodularity():
    names = bundled_names()
    for name in names:
        hb = load_bundled(name).hilbert()
        assert lattice_is_full_unimodular(IntMatrix.from_rows(hb.matrix_rows())), name
    _report(4, f"all {len(names)} bundled datasets generate the full lattice")


def test_criterion_05_quotients():
    sl23 = load_bundled("sl23")
    assert quotient_check(sl23, [0, 1, 2, 6], load_bundled("a4")) is True
    assert quotient_check(sl23, [0, 1, 2], load_bundled("c3")) is True
    _report(5, "SL(2,3) restricts to A4 on {1,2,3,7} and to C3 on {1,2,3}")


def test_criterion_06_products():
    s3 = load_bundled("s3")
    s3xs3 = load_bundled("s3xs3")
    assert product_check(s3, s3, s3xs3) is True
    prod = outer_product_monoid(
        minimal_generators(s3.monoid()), minimal_generators(s3.monoid())
    )
    units = presentation(
        9, [tuple(1 if i == j else 0 for i in range(9)) for j in range(9)]
    )
    assert monoid_equal(prod, units)
    assert product_check(
        load_bundled("sl23"), load_bundled("c2"), load_bundled("sl23xc2")
    ) is True
    _report(6, "S3 x S3 = N^9 and SL(2,3) x C2 verified")


def test_criterion_07_conjecture():
    assert sl2_conjecture_check(1, load_bundled("s3")) is True
    verdict_n2 = sl2_conjecture_check(2, load_bundled("a5"))
    verdict_n3 = sl2_conjecture_check(3, load_bundled("sl28"))
    report = classify(
        minimal_generators(sl2_conjecture_generators(2)), (1, 3, 3, 4, 5)
    )
    assert report.almost_monomial is True
    _report(
        7,
        f"n=1 equal: yes; n=2 equal: {'yes' if verdict_n2 else 'no'}; "
        f"n=3 equal: {'yes' if verdict_n3 else 'no'}; n=2 family almost monomial",
    )


def test_criterion_08_prop24():
    for r in (1, 2, 3, 4):
        assert prop24_harness(r, 3) == []
    profile = matrix_am_profile(remark_rank5_matrix())
    assert profile["det"] == 1
    assert profile["almost_monomial_rows"] is True
    assert profile["permutation"] is False
    _report(8, "no violations for r <= 4 at bound 3; rank-5 example profiled")


def test_criterion_09a_solver_vs_brute_force():
    rng = random.Random(424242)
    box = 40
    for _ in range(200):
        rows = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(3)]
        expected = brute_force_minimal(rows, box)
        got = minimal_homogeneous_solutions(rows)
        assert sorted(s for s in got if max(s) <= box) == expected, rows
    _report("9a", "200 random 3-unknown systems match the box oracle")


def test_criterion_09b_normalization_idempotence():
    rng = random.Random(171717)
    for _ in range(200):
        rank = rng.randint(1, 3)
        m = presentation(rank, random_generators(rng, rank, rng.randint(1, 5)))
        result = normalize(m)
        closure = presentation(rank, result.closure_hilbert_basis)
        assert normalize(closure).added == ()
        for h, k in zip(result.closure_hilbert_basis, result.witnesses):
            assert member(tuple(k * x for x in h), m) is not None
    _report("9b", "200 normalizations idempotent with verified witnesses")


def test_criterion_09c_markov_fibers():
    rng = random.Random(606060)
    cases = 0
    while cases < 200:
        rows = []
        while len(rows) < 3:
            v = tuple(rng.randint(0, 2) for _ in range(5))
            if any(v):
                rows.append(v)
        m = presentation(5, rows)
        moves = [b.vector() for b in markov_basis(m)]
        gens = m.matrix_rows()
        lam = [rng.randint(0, 2) for _ in gens]
        v = tuple(sum(c * g[j] for c, g in zip(lam, gens)) for j in range(5))
        fiber = _enumerate_fiber(gens, v)
        assert fiber_connected(fiber, moves), (rows, v)
        cases += 1
    _report("9c", "200 random fibers connected by the Markov moves")


def test_criterion_09d_pairwise_vs_cover_forms():
    rng = random.Random(92929)
    for _ in range(200):
        rank = rng.randint(2, 4)
        m = minimal_generators(
            presentation(rank, random_generators(rng, rank, rng.randint(2, 6)))
        )
        degrees = (1,) + tuple(rng.randint(1, 3) for _ in range(rank - 1))
        pairwise = classify(m, degrees).almost_monomial
        covers = all(support_cover(m, k) is not None for k in range(rank))
        assert pairwise == covers
    _report("9d", "200 random presentations: pairwise witnesses match covers")


def test_criterion_09e_theory_forms_agree():
    checked = 0
    for name in bundled_names():
        data = load_bundled(name)
        hb = data.hilbert()
        n_classes = len(data.classes) if data.classes else None
        for theory in (
            classical_theory(data.degrees, n_classes),
            maximal_theory(data.degrees, n_classes),
        ):
            product_form, _ = c_almost_monomial(theory, hb)
            pairwise_form = c_almost_monomial_pairwise(theory, hb)
            assert product_form == pairwise_form, (name, theory.name)
            checked += 1
    rng = random.Random(3131)
    while checked < 200:
        rank = rng.randint(2, 4)
        m = presentation(rank, random_generators(rng, rank, rng.randint(2, 6)))
        pieces = list(range(rank))
        rng.shuffle(pieces)
        cut = rng.randint(1, rank - 1)
        blocks = [sorted(pieces[:cut]), sorted(pieces[cut:])]
        if 0 not in blocks[0]:
            blocks.reverse()
        t = supertheory("random", blocks, (1,) * rank)
        product_form, _ = c_almost_monomial(t, m)
        assert product_form == c_almost_monomial_pairwise(t, m)
        checked += 1
    _report("9e", f"{checked} theory instances: pairwise matches product form")


def test_criterion_10_aramata():
    sl23 = load_bundled("sl23")
    hb = sl23.hilbert()
    report = aramata(hb, sl23.degrees)
    assert report.alpha == 1
    expected = tuple(
        d - (1 if j == 0 else 0) for j, d in enumerate(sl23.degrees)
    )
    assert report.certificates[0].expand(hb) == expected
    alphas = {}
    for name in bundled_names():
        data = load_bundled(name)
        r = aramata(data.hilbert(), data.degrees)
        assert all(a >= 1 for a in r.alphas), name
        alphas[name] = r.alpha
    _report(10, f"alpha=1 for SL(2,3); exponents exist everywhere: {alphas}")
