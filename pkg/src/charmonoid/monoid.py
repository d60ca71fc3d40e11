"""Affine submonoids of N^r given by generators.

Membership with certificates, minimal generating sets (Hilbert bases of
the generated monoid), equality, coordinate-subspace restriction and
outer products.  Vectors are plain tuples of nonnegative integers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import _kernels
from .errors import BadDegrees, RankMismatch

log = logging.getLogger(__name__)

Vec = tuple[int, ...]


def degree(v: Vec) -> int:
    return sum(v)


def canon_key(v: Vec):
    """Canonical vector order: total degree, then descending lexicographic.

    Within one degree the order x1 > x2 > ... matches the variable
    numbering used for the bundled golden datasets, so generator lists
    sort into the same sequence the relations are named in.
    """
    return (sum(v), tuple(-c for c in v))


@dataclass(frozen=True)
class MonoidPresentation:
    """Finite generating set of a submonoid of N^rank, canonically sorted."""

    rank: int
    generators: tuple[Vec, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.rank:
                raise RankMismatch(f"generator {g} does not have rank {self.rank}")

    def matrix_rows(self) -> list[Vec]:
        return list(self.generators)


def presentation(rank: int, vectors) -> MonoidPresentation:
    """Build a presentation: validates entries, drops zero rows and
    duplicates (the monoid is unchanged), sorts canonically."""
    seen = set()
    kept = []
    dropped_zero = 0
    dropped_dup = 0
    for v in vectors:
        v = tuple(int(x) for x in v)
        if len(v) != rank:
            raise RankMismatch(f"vector {v} does not have rank {rank}")
        if any(x < 0 for x in v):
            raise ValueError(f"negative entry in generator {v}")
        if not any(v):
            dropped_zero += 1
            continue
        if v in seen:
            dropped_dup += 1
            continue
        seen.add(v)
        kept.append(v)
    if dropped_zero or dropped_dup:
        log.info(
            "presentation: dropped %d zero and %d duplicate generators",
            dropped_zero,
            dropped_dup,
        )
    kept.sort(key=canon_key)
    return MonoidPresentation(rank, tuple(kept))


@dataclass(frozen=True)
class DecompositionCertificate:
    """Witness for membership: generator index -> positive multiplicity."""

    multiplicities: dict[int, int]

    def expand(self, m: MonoidPresentation) -> Vec:
        """Recompute the weighted generator sum the certificate claims."""
        total = [0] * m.rank
        for idx, count in self.multiplicities.items():
            g = m.generators[idx]
            for j in range(m.rank):
                total[j] += count * g[j]
        return tuple(total)


def member(v, m: MonoidPresentation) -> DecompositionCertificate | None:
    """Exact membership of ``v`` in the monoid generated by ``m``.

    Returns a certificate (empty for the zero vector) or ``None``.  The
    search space is componentwise bounded because generators are nonzero
    and nonnegative, so the decision is complete.  When support
    hyperplanes of the cone are already cached for this presentation
    (any cone-level operation fills the cache) they prune residuals that
    left the cone, which cuts dead branches early on deep targets.
    """
    v = tuple(int(x) for x in v)
    if len(v) != m.rank:
        raise RankMismatch(f"vector of rank {len(v)} against monoid of rank {m.rank}")
    from .cone import cached_cone_prune_rows  # deferred: cone builds on this module

    picks = _kernels.member_search(v, list(m.generators), cached_cone_prune_rows(m))
    if picks is None:
        return None
    counts: dict[int, int] = {}
    for i in picks:
        counts[i] = counts.get(i, 0) + 1
    return DecompositionCertificate(counts)


def minimal_generators(m: MonoidPresentation) -> MonoidPresentation:
    """The unique minimal generating subset (Hilbert basis of the monoid).

    Candidates are processed in ascending total degree: a decomposition
    of ``g`` can only use generators of strictly smaller degree (equal
    degree would force equality), and each of those is either already
    kept or itself decomposes over kept ones.
    """
    kept: list[Vec] = []
    for g in m.generators:  # canonical order is degree-ascending
        if _kernels.member_search(g, kept) is None:
            kept.append(g)
    return MonoidPresentation(m.rank, tuple(kept))


def monoid_equal(a: MonoidPresentation, b: MonoidPresentation) -> bool:
    """True iff the two presentations generate the same monoid."""
    if a.rank != b.rank:
        raise RankMismatch(f"ranks {a.rank} and {b.rank} differ")
    gens_a = list(a.generators)
    gens_b = list(b.generators)
    return all(_kernels.member_search(g, gens_b) is not None for g in gens_a) and all(
        _kernels.member_search(g, gens_a) is not None for g in gens_b
    )


def restrict_support(m: MonoidPresentation, keep) -> MonoidPresentation:
    """Generators of ``{v in M : support(v) subseteq keep}`` re-indexed to
    the kept coordinates (ascending order of ``keep``).

    With nonnegative generators an element supported inside ``keep`` can
    only decompose through generators supported inside ``keep``, so
    filtering the generator list is exact.
    """
    keep = sorted(set(keep))
    for k in keep:
        if not 0 <= k < m.rank:
            raise RankMismatch(f"coordinate {k} outside rank {m.rank}")
    kept = []
    for g in m.generators:
        if all(g[j] == 0 for j in range(m.rank) if j not in keep):
            kept.append(tuple(g[j] for j in keep))
    return presentation(len(keep), kept)


def outer_product_monoid(a: MonoidPresentation, b: MonoidPresentation) -> MonoidPresentation:
    """Monoid generated by all outer products ``g (x) h``, flattened row-major."""
    rank = a.rank * b.rank
    vectors = []
    for g in a.generators:
        for h in b.generators:
            vectors.append(tuple(g[s] * h[t] for s in range(a.rank) for t in range(b.rank)))
    return presentation(rank, vectors)


def minimal_multiple(
    v,
    m: MonoidPresentation,
    scan_cap: int = 4096,
) -> tuple[int, DecompositionCertificate] | None:
    """Smallest ``a >= 1`` with ``a*v`` in the monoid, plus certificate.

    Some positive multiple of ``v`` lies in the monoid exactly when
    ``v`` lies in the rational cone over the generators (clearing the
    denominators of a nonnegative rational combination yields an integer
    one), so cone membership settles the empty case outright.  When the
    cone test passes, the multiples inside the monoid are closed under
    addition, hence scanning ``a = 1, 2, ...`` with the exact membership
    search returns the true minimum on its first hit.
    """
    v = tuple(int(x) for x in v)
    if len(v) != m.rank:
        raise RankMismatch(f"vector of rank {len(v)} against monoid of rank {m.rank}")
    if not any(v):
        return 1, DecompositionCertificate({})
    from .cone import explicit_multiple  # deferred: cone builds on this module

    constructed = explicit_multiple(v, m)
    if constructed is None:
        return None
    bound, cert = constructed
    if bound == 1:
        return 1, cert
    for a in range(1, min(bound, scan_cap)):
        cert_a = member(tuple(a * x for x in v), m)
        if cert_a is not None:
            return a, cert_a
    if bound <= scan_cap:
        return bound, cert  # every smaller multiple was just refuted
    from .errors import ResourceLimit

    raise ResourceLimit(
        f"{v} has the multiple {bound} in the monoid but the minimality scan "
        f"cap {scan_cap} was exceeded",
        nodes=scan_cap,
    )


def regular_vector(degrees) -> Vec:
    """Degree vector (d_1, ..., d_r); the first degree must be 1 (trivial
    character) and all degrees positive."""
    degrees = tuple(int(d) for d in degrees)
    if not degrees:
        raise BadDegrees("empty degree list")
    if degrees[0] != 1:
        raise BadDegrees(f"first degree must be 1, got {degrees[0]}")
    if any(d < 1 for d in degrees):
        raise BadDegrees("degrees must be positive")
    return degrees
