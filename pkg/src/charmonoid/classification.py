"""Group-level classification and theorem-check harnesses.

Monomial / quasi-monomial / almost-monomial / factorial flags with
witnesses, support covers, minimal Aramata exponents, the small-rank
unimodularity harness, quotient and product verifications, and the
SL(2,2^n) generator family with its equality check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .dataio import GroupCharData
from .errors import IndexMismatch, NoSolution, NotMinimized
from .lattice import DEFAULT_BUDGET, IntMatrix
from .monoid import (
    DecompositionCertificate,
    MonoidPresentation,
    Vec,
    minimal_generators,
    minimal_multiple,
    monoid_equal,
    outer_product_monoid,
    presentation,
    regular_vector,
    restrict_support,
)
from .toric import is_factorial


def _require_minimized(m: MonoidPresentation) -> None:
    if minimal_generators(m).generators != m.generators:
        raise NotMinimized("presentation has redundant generators")


@dataclass(frozen=True)
class ClassificationReport:
    monomial: bool
    quasi_monomial: bool
    quasi_exponents: Vec | None  # scaling exponents (a_1..a_r) when quasi
    almost_monomial: bool
    am_witnesses: dict[tuple[int, int], int]  # (j, k) -> generator index
    factorial: bool
    hilbert_basis_size: int


def classify(m: MonoidPresentation, degrees) -> ClassificationReport:
    """Classification flags of a minimized presentation.

    monomial: generators are exactly the unit vectors; quasi-monomial:
    one positive multiple of each unit vector; almost monomial: for
    every ordered pair ``j != k`` some generator meets ``x_j`` but not
    ``x_k`` (witness recorded); factorial: trivial toric ideal.
    """
    degrees = regular_vector(degrees)
    if len(degrees) != m.rank:
        raise IndexMismatch(f"{len(degrees)} degrees against rank {m.rank}")
    _require_minimized(m)
    r = m.rank
    gens = m.generators
    units = {tuple(1 if i == j else 0 for i in range(r)) for j in range(r)}
    monomial = set(gens) == units

    quasi_exponents: Vec | None = None
    if len(gens) == r:
        exps = [0] * r
        scaled = True
        for g in gens:
            support = [j for j, x in enumerate(g) if x]
            if len(support) != 1:
                scaled = False
                break
            exps[support[0]] = g[support[0]]
        if scaled and all(exps):
            quasi_exponents = tuple(exps)
    quasi = quasi_exponents is not None

    witnesses: dict[tuple[int, int], int] = {}
    almost = True
    for j in range(r):
        for k in range(r):
            if j == k:
                continue
            idx = next(
                (i for i, g in enumerate(gens) if g[j] > 0 and g[k] == 0), None
            )
            if idx is None:
                almost = False
            else:
                witnesses[(j, k)] = idx
    if not almost:
        witnesses = {}

    return ClassificationReport(
        monomial=monomial,
        quasi_monomial=quasi,
        quasi_exponents=quasi_exponents,
        almost_monomial=almost,
        am_witnesses=witnesses,
        factorial=is_factorial(m),
        hilbert_basis_size=len(gens),
    )


def support_cover(m: MonoidPresentation, k: int) -> tuple[int, ...] | None:
    """Generator indices whose supports union to all coordinates but ``k``.

    Picks, for every ``j != k``, the first generator meeting ``x_j`` and
    avoiding ``x_k``; any generator avoiding ``x_k`` keeps the union
    inside the complement, so the greedy choice is exact.  ``None`` when
    some coordinate cannot be covered.
    """
    _require_minimized(m)
    if not 0 <= k < m.rank:
        raise IndexMismatch(f"coordinate {k} outside rank {m.rank}")
    chosen = set()
    for j in range(m.rank):
        if j == k:
            continue
        idx = next(
            (i for i, g in enumerate(m.generators) if g[j] > 0 and g[k] == 0), None
        )
        if idx is None:
            return None
        chosen.add(idx)
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class AramataReport:
    """Minimal exponents alpha_j >= 1 with alpha_j*(Reg - e_j) in M."""

    alpha: int
    alphas: tuple[int, ...]
    certificates: tuple[DecompositionCertificate, ...]


def aramata(m: MonoidPresentation, degrees, budget: int = DEFAULT_BUDGET) -> AramataReport:
    """Exact minimal Aramata exponents.

    ``alpha_j`` is the least ``a >= 1`` with ``a * (Reg - e_j)`` in the
    monoid.  Multiples inside the monoid are closed under addition, so
    the upward membership scan inside ``minimal_multiple`` returns the
    exact minimum; the completion solver handles the (theorem-excluded)
    empty case, which therefore signals corrupt data.
    """
    reg = regular_vector(degrees)
    if len(reg) != m.rank:
        raise IndexMismatch(f"{len(reg)} degrees against rank {m.rank}")
    alphas = []
    certificates = []
    for j in range(m.rank):
        target = tuple(x - (1 if i == j else 0) for i, x in enumerate(reg))
        found = minimal_multiple(target, m)
        if found is None:
            raise NoSolution(
                f"no positive multiple of Reg - e{j + 1} lies in the monoid"
            )
        a, cert = found
        alphas.append(a)
        certificates.append(cert)
    return AramataReport(alphas[0], tuple(alphas), tuple(certificates))


def _det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        total += term if j % 2 == 0 else -term
    return total


def _am_rows_condition(rows: list[tuple[int, ...]], r: int) -> bool:
    for j in range(r):
        for k in range(r):
            if j == k:
                continue
            if not any(row[j] > 0 and row[k] == 0 for row in rows):
                return False
    return True


def is_permutation_matrix(rows) -> bool:
    n = len(rows)
    for row in rows:
        if sum(row) != 1 or any(x not in (0, 1) for x in row):
            return False
    return all(sum(row[j] for row in rows) == 1 for j in range(n))


def prop24_harness(r: int, entry_bound: int) -> list[IntMatrix]:
    """Exhaustive small-rank harness: returns every ``r x r`` matrix with
    first row ``e_1``, entries in ``0..entry_bound``, almost-monomial row
    condition and ``|det| = 1`` that is NOT a permutation matrix.

    An empty list reproduces the expected theorem behaviour for
    ``r <= 4``.  The determinant only involves the minor on rows and
    columns ``2..r``, so first-column entries are enumerated separately
    and only affect the row condition.
    """
    if r < 1:
        raise IndexMismatch("rank must be >= 1")
    if r > 4:
        raise IndexMismatch("exhaustive harness is limited to rank <= 4")
    if entry_bound < 1:
        raise IndexMismatch("entry bound must be >= 1")
    first_row = tuple(1 if j == 0 else 0 for j in range(r))
    if r == 1:
        return []
    violations = []
    span = range(entry_bound + 1)
    n = r - 1
    for minor_flat in iter_product(span, repeat=n * n):
        minor = [list(minor_flat[i * n : (i + 1) * n]) for i in range(n)]
        if abs(_det(minor)) != 1:
            continue
        # pairs (j, k) with j, k >= 1 are decided by the minor alone
        stripped = [tuple([0] + list(row)) for row in minor]
        if not _am_rows_condition([first_row] + stripped, r):
            continue
        minor_perm = is_permutation_matrix(minor)
        for col1 in iter_product(span, repeat=n):
            rows = [first_row] + [
                tuple([col1[i]] + minor[i]) for i in range(n)
            ]
            if not _am_rows_condition(rows, r):
                continue
            if minor_perm and not any(col1):
                continue  # genuine permutation matrix
            violations.append(IntMatrix.from_rows(rows, cols=r))
    return violations


def remark_rank5_matrix() -> IntMatrix:
    """The 5x5 example showing the small-rank argument stops at rank 4."""
    return IntMatrix.from_rows(
        [
            (1, 0, 0, 0, 0),
            (0, 2, 0, 1, 0),
            (0, 0, 1, 0, 1),
            (0, 1, 1, 0, 0),
            (0, 0, 0, 1, 1),
        ]
    )


def matrix_am_profile(m: IntMatrix) -> dict:
    """Determinant, row condition and permutation flags for a candidate."""
    rows = [m.row(i) for i in range(m.rows)]
    return {
        "det": _det([list(r) for r in rows]),
        "almost_monomial_rows": _am_rows_condition(rows, m.cols),
        "permutation": is_permutation_matrix(rows),
    }


def _check_degree_map(g: GroupCharData, indices, q: GroupCharData) -> None:
    if len(indices) != q.rank:
        raise IndexMismatch(
            f"{len(indices)} quotient indices against rank {q.rank} dataset"
        )
    if len(set(indices)) != len(indices):
        raise IndexMismatch("quotient indices repeat")
    for pos, idx in enumerate(indices):
        if not 0 <= idx < g.rank:
            raise IndexMismatch(f"index {idx} outside rank {g.rank}")
        if g.irr[idx].degree != q.irr[pos].degree:
            raise IndexMismatch(
                f"degree mismatch at position {pos}: "
                f"{g.irr[idx].degree} != {q.irr[pos].degree}"
            )


def quotient_check(g: GroupCharData, quotient_indices, q: GroupCharData) -> bool:
    """Whether restricting ``M(G)`` to the quotient coordinates gives ``M(G/N)``.

    ``quotient_indices`` are the 0-based positions of the irreducibles of
    ``G`` trivial on ``N``, listed in the order of ``q``'s irreducibles.
    """
    indices = list(quotient_indices)
    _check_degree_map(g, indices, q)
    restricted = restrict_support(minimal_generators(g.monoid()), indices)
    ascending = sorted(indices)
    if ascending != indices:
        # restrict_support re-indexes ascending; permute into q's order
        pos_of = {idx: ascending.index(idx) for idx in indices}
        perm = [pos_of[idx] for idx in indices]
        restricted = presentation(
            len(indices),
            [tuple(v[p] for p in perm) for v in restricted.generators],
        )
    return monoid_equal(restricted, q.monoid())


def product_check(a: GroupCharData, b: GroupCharData, ab: GroupCharData) -> bool:
    """Whether ``M(G1) x M(G2)`` (outer products) equals ``M(G1 x G2)``.

    ``ab``'s irreducibles must be ordered as the row-major pairing of
    ``a``'s and ``b``'s orderings.
    """
    if ab.rank != a.rank * b.rank:
        raise IndexMismatch(f"rank {ab.rank} != {a.rank} * {b.rank}")
    for s in range(a.rank):
        for t in range(b.rank):
            expected = a.irr[s].degree * b.irr[t].degree
            got = ab.irr[s * b.rank + t].degree
            if got != expected:
                raise IndexMismatch(
                    f"degree mismatch at pair ({s}, {t}): {got} != {expected}"
                )
    left = outer_product_monoid(
        minimal_generators(a.monoid()), minimal_generators(b.monoid())
    )
    return monoid_equal(left, ab.monoid())


def sl2_conjecture_generators(n: int) -> MonoidPresentation:
    """Conjectured generator family for SL(2, 2^n) in rank ``2^n + 1``.

    Coordinates (0-based): 0 the trivial character, ``1 .. 2^(n-1)`` the
    (q-1)-degree block, ``2^(n-1)+1`` the q-degree character, the rest
    the (q+1)-degree block.
    """
    if n < 1:
        raise IndexMismatch("n must be >= 1")
    q = 2**n
    r = q + 1
    half = 2 ** (n - 1)
    steinberg = half + 1  # 0-based position of the degree-q character

    def unit(j):
        return tuple(1 if i == j else 0 for i in range(r))

    vectors = [unit(0)]
    vectors.append(tuple(1 if i in (0, steinberg) else 0 for i in range(r)))
    for j in range(steinberg + 1, r):
        vectors.append(unit(j))
    full = tuple(1 if 1 <= i <= r - 1 else 0 for i in range(r))  # x2..x_{q+1}
    for k in range(1, half + 1):
        vectors.append(tuple(x - (1 if i == k else 0) for i, x in enumerate(full)))
    v = tuple(1 if 1 <= i <= half else 0 for i in range(r))
    vectors.append(v)
    vectors.append(tuple(x + (1 if i == steinberg else 0) for i, x in enumerate(v)))
    return presentation(r, vectors)


def _sl2_block_permutation(n: int, data: GroupCharData) -> list[int]:
    """Positions of data irreducibles in conjecture order (stable by block)."""
    q = 2**n
    expected = {1: 1, q - 1: 2 ** (n - 1), q: 1, q + 1: 2 ** (n - 1) - 1}
    if q == 2:
        expected = {1: 2, 2: 1}  # q - 1 collapses onto the trivial degree
    degrees = data.degrees
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    if counts != {d: c for d, c in expected.items() if c}:
        raise IndexMismatch(
            f"degree multiset {sorted(degrees)} does not match SL(2,{q})"
        )
    perm = [0]
    if q == 2:
        blocks = [1, 2]
    else:
        blocks = [q - 1, q, q + 1]
    for block_degree in blocks:
        for i, d in enumerate(degrees):
            if i != 0 and d == block_degree and i not in perm:
                perm.append(i)
    return perm


def sl2_conjecture_check(n: int, data: GroupCharData) -> bool:
    """Monoid equality of the conjectured family and the dataset monoid."""
    q = 2**n
    if data.rank != q + 1:
        raise IndexMismatch(f"rank {data.rank} != {q + 1}")
    perm = _sl2_block_permutation(n, data)
    rows = [tuple(r.row[perm[i]] for i in range(data.rank)) for r in data.induced_rows]
    permuted = presentation(data.rank, rows)
    return monoid_equal(sl2_conjecture_generators(n), permuted)
