import random

import pytest
from hypothesis import given, settings, strategies as st

from charmonoid.errors import ResourceLimit
from charmonoid.lattice import (
    IntMatrix,
    hermite_normal_form,
    integer_kernel_basis,
    lattice_is_full_unimodular,
    minimal_homogeneous_solutions,
    rank,
)
from .conftest import SL23_HILBERT


def test_hnf_identity_fixed_point():
    h, u = hermite_normal_form(IntMatrix.identity(3))
    assert h == IntMatrix.identity(3)
    assert u == IntMatrix.identity(3)


def test_hnf_gcd_column():
    h, u = hermite_normal_form([[2, 0], [3, 0]])
    assert h.row_list() == [[1, 0], [0, 0]]
    assert (u * IntMatrix.from_rows([[2, 0], [3, 0]])) == h


def test_hnf_sl23_generators_full_lattice():
    h, _ = hermite_normal_form(SL23_HILBERT)
    rows = h.row_list()
    assert rows[:7] == IntMatrix.identity(7).row_list()
    assert rows[7] == [0] * 7


small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda r: st.integers(min_value=1, max_value=4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_hnf_transform_exact_and_canonical(rows):
    m = IntMatrix.from_rows(rows)
    h, u = hermite_normal_form(m)
    assert u * m == h
    # unimodularity of the transform: its HNF must be the identity
    assert lattice_is_full_unimodular(u)
    # canonical: pivots positive, entries above pivots reduced
    pivot_cols = []
    for i in range(h.rows):
        row = h.row(i)
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        p = nz[0]
        if pivot_cols:
            assert p > pivot_cols[-1]
        pivot_cols.append(p)
        assert row[p] > 0
        for above in range(i):
            assert 0 <= h.row(above)[p] < row[p]
    # idempotence: the HNF is its own HNF
    h2, _ = hermite_normal_form(h)
    assert h2 == h


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_kernel_vectors_annihilate(rows):
    m = IntMatrix.from_rows(rows)
    kern = integer_kernel_basis(m)
    assert len(kern) == m.rows - rank(m)
    for c in kern:
        prod = [
            sum(c[i] * m.entries[i * m.cols + j] for i in range(m.rows))
            for j in range(m.cols)
        ]
        assert not any(prod)


def test_kernel_examples():
    assert integer_kernel_basis([[1, 0], [0, 1]]) == []
    assert integer_kernel_basis([[1, 1], [2, 2]]) == [(2, -1)]
    kern = integer_kernel_basis(SL23_HILBERT)
    assert kern == [(0, 0, 0, 0, 1, 1, 1, -2)]


def test_unimodular_examples():
    assert lattice_is_full_unimodular([[0, 1], [1, 0]])
    assert not lattice_is_full_unimodular([[2]])
    assert lattice_is_full_unimodular(SL23_HILBERT)


def test_minimal_solutions_gcd_example():
    assert minimal_homogeneous_solutions([[2], [-3]]) == [(3, 2)]
    assert minimal_homogeneous_solutions([[1], [-1]]) == [(1, 1)]


def test_minimal_solutions_budget():
    with pytest.raises(ResourceLimit):
        minimal_homogeneous_solutions([[2], [-3]], budget=1)


def brute_force_minimal(rows, box):
    """Independent oracle: scan the whole box, then drop dominated.

    The result equals the set of globally minimal solutions whose
    coordinates all stay within the box: anything dominating an in-box
    vector is itself in the box.
    """
    import numpy as np

    arr = np.array(rows, dtype=np.int64)
    n = len(rows)
    grids = np.stack(
        np.meshgrid(*[np.arange(box + 1)] * n, indexing="ij"), axis=-1
    ).reshape(-1, n)
    sums = grids @ arr
    sols = grids[(sums == 0).all(axis=1) & (grids.sum(axis=1) > 0)]
    sols = [tuple(int(x) for x in s) for s in sols]
    minimal = []
    for s in sorted(sols, key=sum):
        if not any(all(a >= b for a, b in zip(s, t)) for t in minimal):
            minimal.append(s)
    return sorted(minimal)


def test_solver_matches_brute_force_small():
    rng = random.Random(99)
    box = 25
    for _ in range(60):
        rows = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(3)]
        expected = brute_force_minimal(rows, box)
        got = minimal_homogeneous_solutions(rows)
        in_box = sorted(s for s in got if max(s) <= box)
        assert in_box == expected, rows


def test_hnf_verified_by_independent_arithmetic():
    """Dual route: sympy re-verifies the transform identity, the
    unimodularity of the transform and the invariant factors, which
    together certify that h is the canonical form of the row lattice."""
    from sympy import Matrix
    from sympy.matrices.normalforms import invariant_factors

    rng = random.Random(13)
    for _ in range(25):
        rows_n = rng.randint(1, 4)
        cols_n = rng.randint(1, 4)
        m = [[rng.randint(-6, 6) for _ in range(cols_n)] for _ in range(rows_n)]
        h, u = hermite_normal_form(m)
        sm = Matrix(m)
        su = Matrix(u.row_list())
        sh = Matrix(h.row_list())
        assert su * sm == sh
        assert abs(su.det()) == 1
        nonzero = [list(h.row(i)) for i in range(h.rows) if any(h.row(i))]
        factors_m = [f for f in invariant_factors(sm) if f != 0]
        factors_h = (
            [f for f in invariant_factors(Matrix(nonzero)) if f != 0] if nonzero else []
        )
        assert factors_m == factors_h
