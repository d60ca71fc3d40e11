"""Toric ideal of the generator map: Markov bases and relation checks.

A relation is stored as the lattice vector ``z = plus - minus`` of a
binomial ``t^plus - t^minus`` with disjoint supports.  Markov bases are
computed by critical-pair completion on the kernel lattice, run once
per variable with a weighted reverse-lexicographic order that makes the
current variable cheapest; each round saturates the generated ideal
with respect to that variable (a completion from a lattice basis alone
generates a smaller ideal in general).  A greedy fiber-connectivity
pass then minimizes the basis.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import LengthMismatch, ResourceLimit
from .lattice import IntMatrix, integer_kernel_basis
from .monoid import MonoidPresentation, Vec

DEFAULT_COMPLETION_BUDGET = 200_000


@dataclass(frozen=True)
class Binomial:
    """Exponent vectors of ``t^plus - t^minus``; supports are disjoint."""

    plus: Vec
    minus: Vec

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise LengthMismatch("binomial sides differ in length")
        if any(a and b for a, b in zip(self.plus, self.minus)):
            raise ValueError("binomial sides share support")

    def vector(self) -> Vec:
        return tuple(a - b for a, b in zip(self.plus, self.minus))


def _split(z: Vec) -> tuple[Vec, Vec]:
    plus = tuple(x if x > 0 else 0 for x in z)
    minus = tuple(-x if x < 0 else 0 for x in z)
    return plus, minus


def is_factorial(m: MonoidPresentation) -> bool:
    """True iff the toric ideal is zero (kernel lattice trivial).

    Expects a minimized presentation; the monoid is then factorial
    exactly when generator count equals the lattice rank.
    """
    if not m.generators:
        return True
    return not integer_kernel_basis(IntMatrix.from_rows(m.matrix_rows()))


class _TermOrder:
    """Weighted degree, ties by reverse-lex with one variable cheapest."""

    def __init__(self, weights: Vec, cheapest: int):
        self.weights = weights
        n = len(weights)
        # reverse-lex scans variables from the cheapest one backwards
        self.scan = [cheapest] + [j for j in range(n - 1, -1, -1) if j != cheapest]

    def monomial_less(self, alpha: Vec, beta: Vec) -> bool:
        if alpha == beta:
            return False
        wa = sum(w * a for w, a in zip(self.weights, alpha))
        wb = sum(w * b for w, b in zip(self.weights, beta))
        if wa != wb:
            return wa < wb
        for j in self.scan:
            d = alpha[j] - beta[j]
            if d:
                return d > 0  # larger exponent in a cheap variable = smaller monomial
        return False

    def orient(self, z: Vec) -> Vec:
        plus, minus = _split(z)
        if self.monomial_less(plus, minus):
            return tuple(-x for x in z)
        return z


def _normal_form(v: Vec, basis: list[Vec], order: _TermOrder, counter: list[int], budget: int) -> Vec:
    zero = (0,) * len(v)
    while True:
        if v == zero:
            return v
        v = order.orient(v)
        plus, minus = _split(v)
        reduced = False
        for g in basis:
            gp, gm = _split(g)
            if all(a <= b for a, b in zip(gp, plus)):
                v = tuple(a - b for a, b in zip(v, g))
                reduced = True
                break
        if reduced:
            counter[0] += 1
            if counter[0] > budget:
                raise ResourceLimit(
                    f"markov completion exceeded {budget} reductions", nodes=counter[0]
                )
            continue
        for g in basis:
            gp, gm = _split(g)
            if all(a <= b for a, b in zip(gp, minus)):
                v = tuple(a + b for a, b in zip(v, g))
                reduced = True
                break
        if not reduced:
            return v
        counter[0] += 1
        if counter[0] > budget:
            raise ResourceLimit(
                f"markov completion exceeded {budget} reductions", nodes=counter[0]
            )


def _complete(vectors: list[Vec], order: _TermOrder, counter: list[int], budget: int) -> list[Vec]:
    """Buchberger-style completion of binomial vectors under ``order``."""
    basis: list[Vec] = []
    for z in sorted(vectors):
        z = _normal_form(z, basis, order, counter, budget)
        if any(z):
            basis.append(order.orient(z))
    pairs = deque((i, j) for i in range(len(basis)) for j in range(i + 1, len(basis)))
    while pairs:
        i, j = pairs.popleft()
        f, g = basis[i], basis[j]
        fp, _ = _split(f)
        gp, _ = _split(g)
        if not any(a and b for a, b in zip(fp, gp)):
            continue  # coprime leading terms: S-vector reduces to zero
        s = tuple(a - b for a, b in zip(f, g))
        h = _normal_form(s, basis, order, counter, budget)
        if any(h):
            h = order.orient(h)
            basis.append(h)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # interreduce for a canonical, auto-reduced set
    out: list[Vec] = []
    for idx in range(len(basis)):
        others = [b for k, b in enumerate(basis) if k != idx and any(basis[k])]
        h = _normal_form(basis[idx], [b for b in others if any(b)], order, counter, budget)
        basis[idx] = order.orient(h) if any(h) else (0,) * len(basis[idx])
    for b in basis:
        if any(b) and b not in out:
            out.append(b)
    return out


def _enumerate_fiber(rows: list[Vec], v: Vec) -> list[Vec]:
    """All lambda in N^p with ``sum_i lambda_i rows[i] = v`` (brute force).

    Finite because every row is nonzero and nonnegative.  Used both by
    the minimization pass and, in tests, as the independent oracle for
    Markov connectivity.
    """
    p = len(rows)
    out: list[Vec] = []
    lam = [0] * p

    def rec(i: int, residual: tuple[int, ...]):
        if i == p:
            if not any(residual):
                out.append(tuple(lam))
            return
        row = rows[i]
        bound = None
        for rj, vj in zip(row, residual):
            if rj:
                b = vj // rj
                bound = b if bound is None else min(bound, b)
        bound = 0 if bound is None else max(bound, 0)
        for c in range(bound + 1):
            nxt = tuple(a - c * b for a, b in zip(residual, row))
            if all(x >= 0 for x in nxt):
                lam[i] = c
                rec(i + 1, nxt)
        lam[i] = 0

    rec(0, v)
    return out


def fiber_connected(fiber: list[Vec], moves: list[Vec]) -> bool:
    """Connectivity of the fiber graph under +/- the given moves."""
    if len(fiber) <= 1:
        return True
    index = {f: i for i, f in enumerate(fiber)}
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        node = fiber[i]
        for z in moves:
            for sgn in (1, -1):
                nxt = tuple(a + sgn * b for a, b in zip(node, z))
                if all(x >= 0 for x in nxt):
                    j = index.get(nxt)
                    if j is not None and j not in seen:
                        seen.add(j)
                        queue.append(j)
    return len(seen) == len(fiber)


def _canonical_binomial(z: Vec) -> Binomial:
    plus, minus = _split(z)
    if plus < minus:  # sign convention: plus lexicographically greater
        plus, minus = minus, plus
    return Binomial(plus, minus)


def markov_basis(m: MonoidPresentation, budget: int = DEFAULT_COMPLETION_BUDGET) -> list[Binomial]:
    """Minimal Markov basis of the toric ideal of the generator map.

    Expects a minimized presentation (variable ``t_i`` names the i-th
    generator in canonical order).  Output is canonical: plus side
    lexicographically above the minus side, sorted by (degree of plus,
    plus, minus).
    """
    rows = m.matrix_rows()
    kernel = integer_kernel_basis(IntMatrix.from_rows(rows)) if rows else []
    if not kernel:
        return []
    p = len(rows)
    weights = tuple(sum(g) for g in m.generators)
    counter = [0]
    basis = [tuple(z) for z in kernel]
    for cheapest in range(p):
        order = _TermOrder(weights, cheapest)
        basis = _complete(basis, order, counter, budget)
    # canonical dedup modulo sign
    unique: dict[tuple[Vec, Vec], Binomial] = {}
    for z in basis:
        b = _canonical_binomial(z)
        unique[(b.plus, b.minus)] = b
    binomials = sorted(unique.values(), key=lambda b: (sum(b.plus), b.plus, b.minus))
    # greedy minimization: drop moves whose own fiber stays connected
    survivors = list(binomials)
    changed = True
    while changed:
        changed = False
        for b in list(survivors):
            rest = [x.vector() for x in survivors if x is not b]
            image = tuple(
                sum(c * row[j] for c, row in zip(b.plus, rows)) for j in range(m.rank)
            )
            fiber = _enumerate_fiber(rows, image)
            if fiber_connected(fiber, rest):
                survivors.remove(b)
                changed = True
    return survivors


def verify_relation(b: Binomial, m: MonoidPresentation) -> bool:
    """Check that both sides of the binomial map to the same character."""
    rows = m.matrix_rows()
    if len(b.plus) != len(rows):
        raise LengthMismatch(
            f"binomial over {len(b.plus)} variables against {len(rows)} generators"
        )
    lhs = [0] * m.rank
    rhs = [0] * m.rank
    for c, row in zip(b.plus, rows):
        for j in range(m.rank):
            lhs[j] += c * row[j]
    for c, row in zip(b.minus, rows):
        for j in range(m.rank):
            rhs[j] += c * row[j]
    return lhs == rhs
