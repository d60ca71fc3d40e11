"""Supercharacter theories: sigma vectors, axiom validation, the
coefficient monoid M(G,C) and its quasi/almost-monomial decisions.

A theory is a partition of the irreducible indices (blocks) with an
optional partition of the conjugacy classes (superclasses).  The sigma
vectors have pairwise disjoint supports, so the coefficient vectors
``c`` with ``sum c_i sigma_i`` in ``M(G)`` form a submonoid of ``N^m``.
Its full generator list comes from the minimal solutions of one
homogeneous system (with a structural fallback for the shapes whose
completion blows up); the quasi/almost decisions avoid the completion
altogether, working on the rational cone instead, which keeps them
exact and total at every bundled scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadCyclotomicData, BadPartition, IndexMismatch, ResourceLimit
from .dataio import CyclotomicValues, GroupCharData, SupertheorySpec
from .lattice import DEFAULT_BUDGET, IntMatrix, minimal_homogeneous_solutions
from .monoid import (
    MonoidPresentation,
    Vec,
    member,
    minimal_generators,
    minimal_multiple,
    monoid_equal,
    outer_product_monoid,
    presentation,
    regular_vector,
    restrict_support,
)


def _validated_blocks(blocks, r: int) -> tuple[tuple[int, ...], ...]:
    seen: set[int] = set()
    cleaned = []
    for b in blocks:
        b = tuple(sorted(int(x) for x in b))
        if not b:
            raise BadPartition("empty block")
        for x in b:
            if not 0 <= x < r:
                raise BadPartition(f"index {x} outside 0..{r - 1}")
            if x in seen:
                raise BadPartition(f"index {x} appears in two blocks")
            seen.add(x)
        cleaned.append(b)
    if len(seen) != r:
        raise BadPartition(f"blocks cover {len(seen)} of {r} indices")
    # canonical order: block containing the trivial character first,
    # then by smallest member
    cleaned.sort(key=lambda b: (0 not in b, b[0]))
    return tuple(cleaned)


@dataclass(frozen=True)
class SupertheoryData:
    """Validated theory: canonical blocks plus their sigma vectors."""

    name: str
    blocks: tuple[tuple[int, ...], ...]
    sigma: tuple[Vec, ...]
    superclasses: tuple[tuple[int, ...], ...] | None = None

    @property
    def size(self) -> int:
        return len(self.blocks)


def sigma_vectors(blocks, degrees) -> list[Vec]:
    """Degree-weighted indicator vector of every block, canonical order."""
    degrees = regular_vector(degrees)
    r = len(degrees)
    out = []
    for b in _validated_blocks(blocks, r):
        out.append(tuple(degrees[j] if j in b else 0 for j in range(r)))
    return out


def supertheory(name, blocks, degrees, superclasses=None) -> SupertheoryData:
    degrees = regular_vector(degrees)
    canonical = _validated_blocks(blocks, len(degrees))
    sigma = tuple(
        tuple(degrees[j] if j in b else 0 for j in range(len(degrees)))
        for b in canonical
    )
    sclasses = None
    if superclasses is not None:
        sclasses = tuple(tuple(sorted(int(x) for x in b)) for b in superclasses)
    return SupertheoryData(name, canonical, sigma, sclasses)


def from_spec(spec: SupertheorySpec, degrees) -> SupertheoryData:
    return supertheory(spec.name, spec.blocks, degrees, spec.superclasses)


def classical_theory(degrees, n_classes: int | None = None) -> SupertheoryData:
    """Singleton blocks; superclasses given by the classes themselves."""
    degrees = regular_vector(degrees)
    r = len(degrees)
    sclasses = None
    if n_classes is not None:
        if n_classes != r:
            raise BadPartition(f"{n_classes} classes against {r} irreducibles")
        sclasses = [[i] for i in range(r)]
    return supertheory("classical", [[j] for j in range(r)], degrees, sclasses)


def maximal_theory(degrees, n_classes: int | None = None) -> SupertheoryData:
    """Two blocks: the trivial character and everything else."""
    degrees = regular_vector(degrees)
    r = len(degrees)
    if r == 1:
        blocks = [[0]]
        sclasses = [[0]] if n_classes else None
    else:
        blocks = [[0], list(range(1, r))]
        sclasses = [[0], list(range(1, n_classes))] if n_classes else None
    return supertheory("maximal", blocks, degrees, sclasses)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial.

    Computed by iterated exact division of ``x^n - 1`` by the cyclotomic
    polynomials of the proper divisors.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d:
            continue
        phi_d = cyclotomic_polynomial(d)
        poly = _poly_divide_exact(poly, phi_d)
    return poly


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = num[i + len(den) - 1]
        assert coef % den[-1] == 0
        q = coef // den[-1]
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    assert not any(num), "division was not exact"
    return out


def _reduce_mod_cyclotomic(coords, phi: list[int]) -> tuple[int, ...]:
    rem = list(coords)
    deg = len(phi) - 1
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j in range(len(phi)):
                rem[i - deg + j] -= c * phi[j]
    return tuple(rem[:deg])


@dataclass(frozen=True)
class ValidationReport:
    structural_ok: bool
    issues: tuple[str, ...]
    constancy_checked: bool
    constancy_ok: bool | None
    notices: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return self.structural_ok and self.constancy_ok is not False


def validate_supertheory(
    t: SupertheoryData,
    degrees,
    class_sizes=None,
    values: CyclotomicValues | None = None,
) -> ValidationReport:
    """Axiom checks: structure always, value constancy when data permits.

    Constancy of every sigma vector on every superclass is decided by
    exact zero-testing of cyclotomic coordinate differences reduced
    modulo the conductor's cyclotomic polynomial.
    """
    degrees = regular_vector(degrees)
    issues = []
    notices = []
    if t.superclasses is None:
        notices.append("no superclass data: |X|=|K| and identity checks skipped")
    else:
        if len(t.superclasses) != len(t.blocks):
            issues.append(
                f"|X| = {len(t.blocks)} but |K| = {len(t.superclasses)}"
            )
        covered = [c for b in t.superclasses for c in b]
        if sorted(covered) != list(range(len(covered))):
            issues.append("superclasses do not partition the class indices")
        identity_block = next((b for b in t.superclasses if 0 in b), None)
        if identity_block is None or identity_block != (0,):
            issues.append("class of the identity is not a singleton superclass")
        if class_sizes is not None and len(covered) != len(class_sizes):
            issues.append(
                f"superclasses cover {len(covered)} of {len(class_sizes)} classes"
            )
    constancy_checked = False
    constancy_ok: bool | None = None
    if values is not None and t.superclasses is not None:
        if len(values.values) != len(degrees):
            raise BadCyclotomicData("one value row per irreducible required")
        n_classes = len(values.values[0])
        if any(len(row) != n_classes for row in values.values):
            raise BadCyclotomicData("ragged value table")
        if any(len(c) != values.conductor for row in values.values for c in row):
            raise BadCyclotomicData("coordinate length differs from conductor")
        phi = cyclotomic_polynomial(values.conductor)
        constancy_checked = True
        constancy_ok = True
        for block, sigma in zip(t.blocks, t.sigma):
            sigma_values = []
            for c in range(n_classes):
                coords = [0] * values.conductor
                for j in block:
                    for k in range(values.conductor):
                        coords[k] += degrees[j] * values.values[j][c][k]
                sigma_values.append(_reduce_mod_cyclotomic(coords, phi))
            for superclass in t.superclasses:
                first = sigma_values[superclass[0]]
                for c in superclass[1:]:
                    if sigma_values[c] != first:
                        constancy_ok = False
                        issues.append(
                            f"sigma of block {block} not constant on superclass {superclass}"
                        )
                        break
    elif values is not None:
        notices.append("value table present but no superclasses: constancy skipped")
    return ValidationReport(
        structural_ok=not issues,
        issues=tuple(issues),
        constancy_checked=constancy_checked,
        constancy_ok=constancy_ok,
        notices=tuple(notices),
    )


@dataclass(frozen=True)
class SuperMonoid:
    """Coefficient description of ``M(G,C)``: vectors c with
    ``sum c_i sigma_i`` in ``M(G)``, minimally generated."""

    theory: SupertheoryData
    coefficients: MonoidPresentation


def _solver_rows(t: SupertheoryData, m: MonoidPresentation, keep_blocks) -> list[Vec]:
    rows = [tuple(g) for g in m.generators]
    for i in keep_blocks:
        rows.append(tuple(-x for x in t.sigma[i]))
    return rows


_TRIAL_BUDGET = 300_000


def super_monoid(
    t: SupertheoryData, m: MonoidPresentation, budget: int = DEFAULT_BUDGET
) -> SuperMonoid:
    """Minimal coefficient generators of ``Ch(G,C) intersect M(G)``.

    Primary route: minimal solutions of the joint homogeneous system,
    whose c-parts generate the coefficient monoid exactly.  The system
    can explode for deep sigma vectors (the maximal theory of a large
    group); when every sigma itself already lies in ``M(G)`` the
    coefficient monoid is all of ``N^m`` and the unit vectors are its
    basis, which settles exactly the shapes the completion cannot.
    """
    if t.sigma and len(t.sigma[0]) != m.rank:
        raise IndexMismatch("theory rank differs from monoid rank")
    p = len(m.generators)
    rows = _solver_rows(t, m, range(t.size))
    try:
        sols = minimal_homogeneous_solutions(
            IntMatrix.from_rows(rows, cols=m.rank), min(budget, _TRIAL_BUDGET)
        )
    except ResourceLimit:
        if all(member(sigma, m) is not None for sigma in t.sigma):
            units = [
                tuple(1 if j == i else 0 for j in range(t.size))
                for i in range(t.size)
            ]
            return SuperMonoid(t, presentation(t.size, units))
        raise
    c_parts = [s[p:] for s in sols if any(s[p:])]
    coefficients = minimal_generators(presentation(t.size, c_parts))
    return SuperMonoid(t, coefficients)


def c_quasi_monomial(
    t: SupertheoryData, m: MonoidPresentation, budget: int = DEFAULT_BUDGET
) -> Vec | None:
    """Minimal a_i >= 1 with ``a_i * sigma_i`` in ``M(G)``, or None."""
    exponents = []
    for sigma in t.sigma:
        found = minimal_multiple(sigma, m)
        if found is None:
            return None
        exponents.append(found[0])
    return tuple(exponents)


def _drop_block_rays(
    t: SupertheoryData, m: MonoidPresentation, ell: int
) -> tuple[list[int], list[Vec]]:
    """Extreme rays of the rational coefficient cone avoiding block ``ell``.

    The cone is ``{q >= 0 : sum q_i sigma_i in cone(M) and in span(M)}``
    over the blocks other than ``ell``.  A coefficient vector with
    ``c_k > 0`` exists in ``M(G,C)`` iff some extreme ray has a positive
    k-entry: every integer witness is a point of this cone, and every
    rational point scales (twice: denominators, then a monoid multiple)
    to an integer witness.
    """
    from .cone import ambient_cone_data, dual_extreme_rays

    others = [i for i in range(t.size) if i != ell]
    dim = len(others)
    if dim == 0:
        return others, []
    data = ambient_cone_data(m)
    ineqs = [tuple(1 if j == pos else 0 for j in range(dim)) for pos in range(dim)]
    for n in data.normals:
        ineqs.append(tuple(_sigma_dot(n, t.sigma[i]) for i in others))
    for u in data.span_complement:
        row = tuple(_sigma_dot(u, t.sigma[i]) for i in others)
        ineqs.append(row)
        ineqs.append(tuple(-x for x in row))
    return others, dual_extreme_rays(ineqs, dim)


def _sigma_dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def c_almost_monomial(
    t: SupertheoryData, m: MonoidPresentation, budget: int = DEFAULT_BUDGET
) -> tuple[bool, dict[int, Vec]]:
    """Exact C-almost-monomial decision with verified per-block witnesses.

    Product form: for every dropped block ``l`` a coefficient vector with
    all other entries positive must lie in ``M(G,C)``.  Covering extreme
    rays of the drop-``l`` coefficient cone are summed to a rational
    witness, which a monoid multiple turns into an integer one; each
    witness is re-verified by the membership kernel.
    """
    del budget  # decisions are cone-based; no search budget involved
    witnesses: dict[int, Vec] = {}
    ok = True
    for ell in range(t.size):
        others, rays = _drop_block_rays(t, m, ell)
        if not others:
            witnesses[ell] = (0,) * t.size
            continue
        chosen = []
        for pos in range(len(others)):
            r = next((r for r in rays if r[pos] > 0), None)
            if r is None:
                chosen = None
                break
            chosen.append(r)
        if chosen is None:
            ok = False
            continue
        distinct = sorted(set(chosen))
        q = [sum(r[pos] for r in distinct) for pos in range(len(others))]
        combined = [0] * m.rank
        for pos, i in enumerate(others):
            for j in range(m.rank):
                combined[j] += q[pos] * t.sigma[i][j]
        from .cone import explicit_multiple

        found = explicit_multiple(tuple(combined), m)
        assert found is not None, "covering ray sum left the rational cone"
        a, cert = found
        witness = [0] * t.size
        for pos, i in enumerate(others):
            witness[i] = a * q[pos]
        assert cert.expand(m) == expand_coefficients(t, witness)
        witnesses[ell] = tuple(witness)
    if not ok:
        witnesses = {}
    return ok, witnesses


def c_almost_monomial_pairwise(
    t: SupertheoryData, m: MonoidPresentation, budget: int = DEFAULT_BUDGET
) -> bool:
    """Pairwise form: for every ``k != l`` some coefficient vector in
    ``M(G,C)`` has ``c_k > 0`` and ``c_l = 0``; decided per pair on the
    extreme rays of the drop-``l`` coefficient cone."""
    del budget
    for ell in range(t.size):
        others, rays = _drop_block_rays(t, m, ell)
        for pos in range(len(others)):
            if not any(r[pos] > 0 for r in rays):
                return False
    return True


def expand_coefficients(t: SupertheoryData, c) -> Vec:
    """Character vector ``sum c_i sigma_i`` of a coefficient vector."""
    r = len(t.sigma[0])
    out = [0] * r
    for ci, sigma in zip(c, t.sigma):
        for j in range(r):
            out[j] += ci * sigma[j]
    return tuple(out)


def super_quotient_check(
    g: GroupCharData,
    t: SupertheoryData,
    quotient_indices,
    q: GroupCharData,
    t_q: SupertheoryData,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Coefficient-level instance of the supertheory quotient theorem.

    The blocks of ``t`` contained in ``quotient_indices`` must map to the
    blocks of ``t_q`` bijectively; the coefficient monoid of ``t``
    restricted to those blocks must then equal the one of ``t_q``.
    """
    indices = list(quotient_indices)
    index_map = {idx: pos for pos, idx in enumerate(indices)}
    inside = [
        pos
        for pos, block in enumerate(t.blocks)
        if all(j in index_map for j in block)
    ]
    mapped = [tuple(sorted(index_map[j] for j in t.blocks[pos])) for pos in inside]
    if sorted(mapped) != sorted(t_q.blocks):
        raise IndexMismatch("quotient theory blocks do not match the restriction")
    sm_g = super_monoid(t, minimal_generators(g.monoid()), budget)
    sm_q = super_monoid(t_q, minimal_generators(q.monoid()), budget)
    restricted = restrict_support(sm_g.coefficients, inside)
    # align restricted coordinates (ascending in `inside`) with t_q blocks
    ascending = sorted(inside)
    order = [ascending.index(pos) for pos in inside]
    target_pos = [t_q.blocks.index(b) for b in mapped]
    perm = [0] * len(inside)
    for src, dst in zip(order, target_pos):
        perm[dst] = src
    aligned = presentation(
        len(inside), [tuple(v[p] for p in perm) for v in restricted.generators]
    )
    return monoid_equal(aligned, sm_q.coefficients)


def product_theory(
    t_a: SupertheoryData, t_b: SupertheoryData, degrees_ab
) -> SupertheoryData:
    """Blocks of the product theory: pairwise products, row-major."""
    r_b = len(t_b.sigma[0])
    blocks = []
    for xa in t_a.blocks:
        for xb in t_b.blocks:
            blocks.append([s * r_b + u for s in xa for u in xb])
    return supertheory(f"{t_a.name}x{t_b.name}", blocks, degrees_ab)


def super_product_check(
    a: GroupCharData,
    t_a: SupertheoryData,
    b: GroupCharData,
    t_b: SupertheoryData,
    ab: GroupCharData,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Coefficient-level instance of the supertheory product theorem."""
    if ab.rank != a.rank * b.rank:
        raise IndexMismatch(f"rank {ab.rank} != {a.rank} * {b.rank}")
    t_prod = product_theory(t_a, t_b, ab.degrees)
    sm_a = super_monoid(t_a, minimal_generators(a.monoid()), budget)
    sm_b = super_monoid(t_b, minimal_generators(b.monoid()), budget)
    sm_ab = super_monoid(t_prod, minimal_generators(ab.monoid()), budget)
    left = outer_product_monoid(sm_a.coefficients, sm_b.coefficients)
    return monoid_equal(left, sm_ab.coefficients)
