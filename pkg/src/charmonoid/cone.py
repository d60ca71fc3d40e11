"""Normalization (integral closure) of an affine monoid in its lattice.

Pipeline: compute the group ``gp(M)`` generated by the monoid via HNF,
rewrite everything in lattice coordinates (where the cone is
full-dimensional and pointed), find support hyperplanes by incremental
double description, extract extreme rays, build a placing triangulation
into simplicial subcones, enumerate the lattice points of each
half-open fundamental parallelepiped, and reduce the collected
candidates to irreducibles with the membership kernel.  The result is
the Hilbert basis of ``cone(M) intersect gp(M)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .errors import ResourceLimit
from .lattice import (
    IntMatrix,
    hermite_normal_form,
    integer_kernel_basis,
    rank as mat_rank,
)
from .monoid import (
    MonoidPresentation,
    Vec,
    member,
    minimal_generators,
    presentation,
    regular_vector,
)

DEFAULT_RAY_BUDGET = 100_000
DEFAULT_POINT_BUDGET = 1_000_000
DEFAULT_WITNESS_BOUND = 10_000


def _primitive(v) -> Vec:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _hnf_basis(rows: list[Vec]) -> list[Vec]:
    """Nonzero HNF rows: canonical lattice basis of the row span."""
    h, _ = hermite_normal_form(IntMatrix.from_rows(rows))
    return [h.row(i) for i in range(h.rows) if any(h.row(i))]


def _coords_in_echelon(v, basis: list[Vec], *, rational: bool = False):
    """Coordinates of ``v`` in an echelon (HNF) basis.

    Integer mode raises if ``v`` is outside the lattice the basis spans;
    rational mode returns Fractions for any ``v`` in the linear span.
    """
    pivots = []
    for row in basis:
        j = next(i for i, x in enumerate(row) if x)
        pivots.append(j)
    residual = [Fraction(x) if rational else int(x) for x in v]
    coords = []
    for row, j in zip(basis, pivots):
        num = residual[j]
        if rational:
            c = Fraction(num, row[j])
        else:
            if num % row[j]:
                raise ValueError(f"{tuple(v)} is not in the lattice of the basis")
            c = num // row[j]
        coords.append(c)
        if c:
            for i in range(len(residual)):
                residual[i] -= c * row[i]
    if any(residual):
        raise ValueError(f"{tuple(v)} is outside the span of the basis")
    return coords


def _scale_integer(coords: list[Fraction]) -> Vec:
    """Clear denominators, keeping direction (for sign tests only)."""
    mult = 1
    for c in coords:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    return tuple(int(c * mult) for c in coords)


def dual_extreme_rays(ineqs: list[Vec], dim: int, budget: int = DEFAULT_RAY_BUDGET) -> list[Vec]:
    """Extreme rays of ``{y : <a, y> >= 0 for all a in ineqs}``.

    Requires the inequality vectors to span ``R^dim`` (then the dual cone
    is pointed and the ray list below is well defined).  Incremental
    double description: seed with the simplicial cone of the first
    linearly independent ``dim``-subset, then cut with the remaining
    inequalities, combining adjacent positive/negative ray pairs.
    Adjacency uses the combinatorial zero-set test.
    """
    ineqs = sorted(set(tuple(int(x) for x in a) for a in ineqs))
    # greedy lex-first independent subset of size dim
    basis_idx: list[int] = []
    cur: list[Vec] = []
    for i, a in enumerate(ineqs):
        if mat_rank(IntMatrix.from_rows(cur + [a], cols=dim)) > len(cur):
            basis_idx.append(i)
            cur.append(a)
        if len(cur) == dim:
            break
    if len(cur) < dim:
        raise ValueError("inequality system does not span the ambient space")

    # initial rays: r_j vanishes on every basis inequality except the j-th
    rays: list[tuple[Vec, frozenset[int]]] = []
    for pos, i in enumerate(basis_idx):
        others = [cur[k] for k in range(dim) if k != pos]
        if others:
            # right kernel of the (dim-1) x dim matrix = left kernel of transpose
            cols = [[row[j] for row in others] for j in range(dim)]
            kern = integer_kernel_basis(IntMatrix.from_rows(cols, cols=len(others)))
            assert len(kern) == 1
            r = _primitive(kern[0])
        else:
            r = (1,)
        pairing = _dot(ineqs[i], r)
        assert pairing != 0
        if pairing < 0:
            r = tuple(-x for x in r)
        zeros = frozenset(basis_idx) - {i}
        rays.append((r, zeros))

    for idx, a in enumerate(ineqs):
        if idx in basis_idx:
            continue
        pos, zero, neg = [], [], []
        for r, z in rays:
            p = _dot(a, r)
            if p > 0:
                pos.append((r, z, p))
            elif p == 0:
                zero.append((r, z | {idx}))
            else:
                neg.append((r, z, p))
        if not neg:
            rays = [(r, z) for r, z, _ in pos] + zero
            continue
        all_current = rays
        new_rays = []
        for rp, zp, pp in pos:
            for rn, zn, pn in neg:
                common = zp & zn
                adjacent = True
                for q, zq in all_current:
                    if q is rp or q is rn:
                        continue
                    if common <= zq:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                w = tuple(pp * x - pn * y for x, y in zip(rn, rp))
                # <a, w> = pp*pn - pn*pp = 0; coefficients pp and -pn positive
                w = _primitive(w)
                new_rays.append((w, common | {idx}))
        seen = set()
        merged = [(r, z) for r, z, _ in pos] + zero
        for r, z in new_rays:
            if r not in seen:
                seen.add(r)
                merged.append((r, z))
        rays = merged
        if len(rays) > budget:
            raise ResourceLimit(
                f"double description exceeded {budget} rays", nodes=len(rays)
            )
    out = sorted(set(r for r, _ in rays))
    return out


def support_normals(vectors: list[Vec], dim: int, budget: int = DEFAULT_RAY_BUDGET) -> list[Vec]:
    """Primitive facet normals of the full-dimensional cone over ``vectors``."""
    return dual_extreme_rays(vectors, dim, budget)


def _extreme_subset(vectors: list[Vec], normals: list[Vec], dim: int) -> list[Vec]:
    """Minimal subset of primitive vectors spanning the same cone."""
    prims = sorted(set(_primitive(v) for v in vectors))
    out = []
    for v in prims:
        zero_normals = [n for n in normals if _dot(n, v) == 0]
        if dim == 1 or (
            zero_normals
            and mat_rank(IntMatrix.from_rows(zero_normals, cols=dim)) == dim - 1
        ):
            out.append(v)
    return out


@dataclass(frozen=True)
class RationalCone:
    """Pointed rational cone described in lattice coordinates.

    ``lattice_basis`` rows form the HNF basis of the monoid's group;
    ``rays`` and ``normals`` live in those coordinates.  Ambient-rank
    descriptions of the rays are recovered via :meth:`rays_ambient`.
    """

    ambient_rank: int
    lattice_basis: tuple[Vec, ...]
    rays: tuple[Vec, ...]
    normals: tuple[Vec, ...]

    def rays_ambient(self) -> tuple[Vec, ...]:
        out = []
        for r in self.rays:
            amb = [0] * self.ambient_rank
            for c, row in zip(r, self.lattice_basis):
                for j in range(self.ambient_rank):
                    amb[j] += c * row[j]
            out.append(tuple(amb))
        return tuple(out)


@dataclass(frozen=True)
class AmbientConeData:
    """Ambient-rank H-description of the cone over a presentation.

    ``span_complement`` rows vanish exactly on the linear span of the
    generators; ``normals`` are integer functionals nonnegative on the
    cone whose common nonnegativity locus, intersected with the span,
    is the cone itself.
    """

    span_complement: tuple[Vec, ...]
    normals: tuple[Vec, ...]


def _ambient_cone_data_uncached(m: MonoidPresentation) -> AmbientConeData:
    basis = _hnf_basis(list(m.generators))
    dim = len(basis)
    coords = [tuple(_coords_in_echelon(g, basis)) for g in m.generators]
    lattice_normals = support_normals(coords, dim)
    # orthogonal complement of the span: right kernel of the basis matrix
    cols = [[row[j] for row in basis] for j in range(m.rank)]
    complement = [
        tuple(u) for u in integer_kernel_basis(IntMatrix.from_rows(cols, cols=dim))
    ]
    # extend each lattice-coordinate functional to the ambient space:
    # C = B^T (B B^T)^{-1} maps span points to their coordinates
    bbt = [[_dot(r1, r2) for r2 in basis] for r1 in basis]
    _, inv = _det_and_inverse([tuple(r) for r in bbt])
    assert inv is not None
    ambient_normals = []
    for n in lattice_normals:
        # n . coords(x) = x . (B^T (BB^T)^{-1} n^T)
        weights = [
            sum(Fraction(n[i]) * inv[i][k] for i in range(dim)) for k in range(dim)
        ]
        functional = [
            sum(w * basis[k][j] for k, w in enumerate(weights)) for j in range(m.rank)
        ]
        ambient_normals.append(_primitive(_scale_integer(functional)))
    return AmbientConeData(tuple(complement), tuple(ambient_normals))


_ambient_cache: dict[MonoidPresentation, AmbientConeData] = {}


def ambient_cone_data(m: MonoidPresentation) -> AmbientConeData:
    cached = _ambient_cache.get(m)
    if cached is None:
        cached = _ambient_cone_data_uncached(m)
        _ambient_cache[m] = cached
    return cached


def cached_cone_prune_rows(m: MonoidPresentation) -> tuple[Vec, ...]:
    """Membership-prune functionals, but only if already computed.

    Every monoid element pairs nonnegatively with the support normals
    and pairs to zero with the span-complement rows, so both prune the
    backtracking search without affecting completeness.  Returns the
    empty tuple when the cone data has not been cached yet: membership
    on its own never pays the double-description cost.
    """
    cached = _ambient_cache.get(m)
    if cached is None:
        return ()
    rows = list(cached.normals)
    for u in cached.span_complement:
        rows.append(u)
        rows.append(tuple(-x for x in u))
    return tuple(rows)


def in_rational_cone(v, m: MonoidPresentation) -> bool:
    """Exact test of ``v in cone(generators)`` over the rationals.

    Equivalent to the existence of a positive integer multiple of ``v``
    inside the monoid: a rational nonnegative combination scales to an
    integer one by clearing denominators.
    """
    data = ambient_cone_data(m)
    v = tuple(int(x) for x in v)
    for u in data.span_complement:
        if _dot(u, v) != 0:
            return False
    return all(_dot(n, v) >= 0 for n in data.normals)


@dataclass(frozen=True)
class _TriangulatedCone:
    basis: tuple[Vec, ...]
    simplices: tuple[tuple[Vec, ...], ...]
    # per simplex: Fraction inverse matrix, plus the generator index and
    # primitive scale behind every ray
    inverses: tuple[tuple[tuple[Fraction, ...], ...], ...]
    ray_sources: tuple[tuple[tuple[int, int], ...], ...]


_tri_cache: dict[MonoidPresentation, _TriangulatedCone] = {}


def _triangulated(m: MonoidPresentation) -> _TriangulatedCone:
    cached = _tri_cache.get(m)
    if cached is not None:
        return cached
    basis = _hnf_basis(list(m.generators))
    dim = len(basis)
    coords = [tuple(_coords_in_echelon(g, basis)) for g in m.generators]
    normals = support_normals(coords, dim)
    rays = _extreme_subset(coords, normals, dim)
    source: dict[Vec, tuple[int, int]] = {}
    for idx, c in enumerate(coords):
        p = _primitive(c)
        if p in set(rays) and p not in source:
            scale = next(x // y for x, y in zip(c, p) if y)
            source[p] = (idx, scale)
    simplices = _triangulate(rays, dim, DEFAULT_RAY_BUDGET)
    inverses = []
    sources = []
    for s in simplices:
        _, inv = _det_and_inverse(list(s))
        assert inv is not None
        inverses.append(tuple(tuple(row) for row in inv))
        sources.append(tuple(source[r] for r in s))
    cached = _TriangulatedCone(
        tuple(basis), tuple(tuple(s) for s in simplices), tuple(inverses), tuple(sources)
    )
    _tri_cache[m] = cached
    return cached


def rational_decomposition(v, m: MonoidPresentation) -> dict[int, Fraction] | None:
    """Nonnegative rational generator combination equal to ``v``, or None.

    Locates ``v`` in a simplicial subcone of the triangulation and maps
    the simplex-ray coordinates back to the generators each ray scales.
    Clearing denominators of the result yields an explicit integer
    multiple of ``v`` inside the monoid.
    """
    v = tuple(int(x) for x in v)
    if not in_rational_cone(v, m):
        return None
    if not any(v):
        return {}
    tri = _triangulated(m)
    coords = [Fraction(x) for x in _coords_in_echelon(v, tri.basis, rational=True)]
    dim = len(tri.basis)
    for simplex, inv, sources in zip(tri.simplices, tri.inverses, tri.ray_sources):
        q = [sum(coords[k] * inv[k][j] for k in range(dim)) for j in range(dim)]
        if all(x >= 0 for x in q):
            out: dict[int, Fraction] = {}
            for coeff, (gen_idx, scale) in zip(q, sources):
                if coeff:
                    out[gen_idx] = out.get(gen_idx, Fraction(0)) + coeff / scale
            return out
    raise AssertionError("cone point missed every simplex of the triangulation")


def explicit_multiple(v, m: MonoidPresentation):
    """Some ``(a, certificate)`` with ``a*v`` in the monoid, or None.

    Constructive (no search): clears the denominators of a rational
    cone decomposition.  The returned ``a`` need not be minimal.
    """
    from .monoid import DecompositionCertificate

    decomposition = rational_decomposition(v, m)
    if decomposition is None:
        return None
    lcm = 1
    for q in decomposition.values():
        lcm = lcm * q.denominator // gcd(lcm, q.denominator)
    counts = {}
    for idx, q in sorted(decomposition.items()):
        c = q * lcm
        assert c.denominator == 1
        if c:
            counts[idx] = int(c)
    return lcm, DecompositionCertificate(counts)


def cone_from_generators(m: MonoidPresentation, budget: int = DEFAULT_RAY_BUDGET) -> RationalCone:
    """Extreme rays and support hyperplanes of the cone over the generators."""
    if not m.generators:
        raise ValueError("cannot build a cone from an empty generating set")
    basis = _hnf_basis(list(m.generators))
    dim = len(basis)
    coords = [tuple(_coords_in_echelon(g, basis)) for g in m.generators]
    normals = support_normals(coords, dim, budget)
    rays = _extreme_subset(coords, normals, dim)
    for r in rays:
        for n in normals:
            assert _dot(n, r) >= 0, "support hyperplane fails on an extreme ray"
    return RationalCone(m.rank, tuple(basis), tuple(rays), tuple(normals))


def _triangulate(rays: list[Vec], dim: int, budget: int) -> list[tuple[Vec, ...]]:
    """Placing triangulation of the cone over ``rays`` (lex placing order).

    Returns full-dimensional simplices as tuples of ray vectors.  Rays
    are placed in ascending lexicographic order; a ray that extends the
    current linear span cones over every simplex, otherwise it cones
    over the boundary faces it sees.
    """
    order = sorted(rays)
    placed: list[Vec] = []
    tri: list[tuple[int, ...]] = []
    for v in order:
        vi = len(placed)
        if not placed:
            placed.append(v)
            tri = [(vi,)]
            continue
        span_basis = _hnf_basis(placed)
        d = len(span_basis)
        extends = False
        try:
            v_coords = _coords_in_echelon(v, span_basis, rational=True)
        except ValueError:
            extends = True
        if extends:
            placed.append(v)
            tri = [s + (vi,) for s in tri]
            continue
        v_int = _scale_integer(v_coords)
        placed_coords = [tuple(_coords_in_echelon(p, span_basis)) for p in placed]
        normals = support_normals(placed_coords, d, budget)
        new_simplices = set()
        for n in normals:
            if _dot(n, v_int) >= 0:
                continue
            for s in tri:
                face = tuple(i for i in s if _dot(n, placed_coords[i]) == 0)
                if len(face) == d - 1:
                    new_simplices.add(face + (vi,))
        placed.append(v)
        tri.extend(sorted(new_simplices))
    return [tuple(placed[i] for i in s) for s in tri]


def _det_and_inverse(rows: list[Vec]):
    """Exact determinant and inverse of a square matrix via Fraction Gauss."""
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return Fraction(0), None
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            det = -det
        det *= a[col][col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    return det, inv


def _parallelepiped_points(simplex: tuple[Vec, ...], budget: int) -> list[Vec]:
    """Nonzero lattice points of the half-open fundamental parallelepiped."""
    dim = len(simplex)
    h, _ = hermite_normal_form(IntMatrix.from_rows(list(simplex), cols=dim))
    diag = [h.entries[i * dim + i] for i in range(dim)]
    count = 1
    for dgl in diag:
        count *= dgl
    if count > budget:
        raise ResourceLimit(
            f"parallelepiped enumeration of {count} points exceeds {budget}",
            nodes=count,
        )
    if count == 1:
        return []
    det, inv = _det_and_inverse(list(simplex))
    assert inv is not None
    points = []
    # transversal of Z^dim / row-lattice: 0 <= c_i < diag_i
    idx = [0] * dim
    while True:
        c = tuple(idx)
        if any(c):
            q = [sum(Fraction(c[k]) * inv[k][j] for k in range(dim)) for j in range(dim)]
            pt = list(c)
            for i in range(dim):
                f = floor(q[i])
                if f:
                    for j in range(dim):
                        pt[j] -= f * simplex[i][j]
            if any(pt):
                points.append(tuple(pt))
        # odometer increment
        k = dim - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < diag[k]:
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            break
    return points


@dataclass(frozen=True)
class NormalizationResult:
    """Integral closure of a monoid presentation inside its own lattice.

    ``witnesses[i]`` is the smallest ``k >= 1`` with ``k * basis[i]``
    in the original monoid (1 for elements that already belong).
    """

    original: MonoidPresentation
    closure_hilbert_basis: tuple[Vec, ...]
    added: tuple[Vec, ...]
    witnesses: tuple[int, ...]


def normalize(
    m: MonoidPresentation,
    ray_budget: int = DEFAULT_RAY_BUDGET,
    point_budget: int = DEFAULT_POINT_BUDGET,
    witness_bound: int = DEFAULT_WITNESS_BOUND,
) -> NormalizationResult:
    """Hilbert basis of ``cone(M) intersect gp(M)`` plus the strict delta.

    The normalization lattice defaults to ``gp(M)`` computed by HNF,
    which is the correct closure lattice for sub-monoids; callers with
    full character data should separately assert that ``gp(M)`` is the
    whole ambient lattice.
    """
    mg = minimal_generators(m)
    if not mg.generators:
        return NormalizationResult(m, (), (), ())
    basis = _hnf_basis(list(mg.generators))
    dim = len(basis)
    coords = [tuple(_coords_in_echelon(g, basis)) for g in mg.generators]
    normals = support_normals(coords, dim, ray_budget)
    rays = _extreme_subset(coords, normals, dim)
    candidates = set(rays)
    for simplex in _triangulate(rays, dim, ray_budget):
        candidates.update(_parallelepiped_points(simplex, point_budget))
    ambient = []
    for c in sorted(candidates):
        amb = [0] * m.rank
        for coef, row in zip(c, basis):
            for j in range(m.rank):
                amb[j] += coef * row[j]
        assert all(x >= 0 for x in amb), "closure candidate left the positive orthant"
        ambient.append(tuple(amb))
    closure = minimal_generators(presentation(m.rank, ambient))
    added = []
    witnesses = []
    for h in closure.generators:
        k = 1
        while k <= witness_bound:
            if member(tuple(x * k for x in h), mg) is not None:
                break
            k += 1
        else:
            raise ResourceLimit(
                f"no multiple of {h} below {witness_bound} lies in the monoid",
                nodes=witness_bound,
            )
        witnesses.append(k)
        if k > 1:
            added.append(h)
    return NormalizationResult(
        m, closure.generators, tuple(added), tuple(witnesses)
    )


def is_normal(m: MonoidPresentation, **kwargs) -> bool:
    """True iff the monoid equals its integral closure in ``gp(M)``."""
    return not normalize(m, **kwargs).added


def contains_regular_shifts(m: MonoidPresentation, degrees, **kwargs) -> bool:
    """Whether every ``Reg - e_j`` lies in the integral closure of ``M``."""
    reg = regular_vector(degrees)
    if len(reg) != m.rank:
        raise ValueError(f"{len(reg)} degrees against rank {m.rank}")
    result = normalize(m, **kwargs)
    closure = presentation(m.rank, result.closure_hilbert_basis)
    for j in range(m.rank):
        v = tuple(x - (1 if i == j else 0) for i, x in enumerate(reg))
        if member(v, closure) is None:
            return False
    return True
