"""Exact integer linear algebra: Hermite normal form, lattice kernels,
unimodularity tests and the homogeneous Diophantine solver.

Everything here works on arbitrary-precision Python integers; there is
deliberately no floating point and no machine-word fast path.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import LengthMismatch

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if self.rows * self.cols != len(self.entries):
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if rows:
            width = len(rows[0])
        elif cols is not None:
            width = cols
        else:
            raise ValueError("empty matrix needs an explicit column count")
        for i, r in enumerate(rows):
            if len(r) != width:
                raise LengthMismatch(f"row {i} has length {len(r)}, expected {width}")
        flat = tuple(x for r in rows for x in r)
        return cls(len(rows), width, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n
        )

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise LengthMismatch("matrix product shape mismatch")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append(
                [
                    sum(ri[k] * other.entries[k * other.cols + j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        return IntMatrix.from_rows(out, cols=other.cols)


def _as_matrix(m) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


def hermite_normal_form(m) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form ``h`` with unimodular ``u``, ``h = u*m``.

    Canonical shape: pivots positive, entries above each pivot reduced to
    ``0 <= entry < pivot``, zero rows at the bottom.  The output is the
    unique HNF of the row lattice, so it doubles as a canonical form.
    """
    m = _as_matrix(m)
    h = m.row_list()
    u = IntMatrix.identity(m.rows).row_list()
    pivot_row = 0
    for col in range(m.cols):
        # gcd-eliminate below pivot_row in this column
        while True:
            best = -1
            for i in range(pivot_row, m.rows):
                if h[i][col] != 0 and (best == -1 or abs(h[i][col]) < abs(h[best][col])):
                    best = i
            if best == -1:
                break
            if best != pivot_row:
                h[pivot_row], h[best] = h[best], h[pivot_row]
                u[pivot_row], u[best] = u[best], u[pivot_row]
            piv = h[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, m.rows):
                if h[i][col] != 0:
                    q = h[i][col] // piv
                    if q:
                        h[i] = [a - q * b for a, b in zip(h[i], h[pivot_row])]
                        u[i] = [a - q * b for a, b in zip(u[i], u[pivot_row])]
                    if h[i][col] != 0:
                        done = False
            if done:
                break
        if pivot_row < m.rows and h[pivot_row][col] != 0:
            if h[pivot_row][col] < 0:
                h[pivot_row] = [-a for a in h[pivot_row]]
                u[pivot_row] = [-a for a in u[pivot_row]]
            piv = h[pivot_row][col]
            for i in range(pivot_row):
                q = h[i][col] // piv  # floor division keeps 0 <= entry < pivot
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[pivot_row])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[pivot_row])]
            pivot_row += 1
            if pivot_row == m.rows:
                break
    return IntMatrix.from_rows(h, cols=m.cols), IntMatrix.from_rows(u, cols=m.rows)


def rank(m) -> int:
    """Integer (= rational) rank of the matrix."""
    h, _ = hermite_normal_form(m)
    r = 0
    for i in range(h.rows):
        if any(h.row(i)):
            r += 1
    return r


def lattice_is_full_unimodular(m) -> bool:
    """True iff the rows generate all of ``Z^cols`` as a lattice."""
    m = _as_matrix(m)
    if m.rows < m.cols:
        return False
    h, _ = hermite_normal_form(m)
    ident = IntMatrix.identity(m.cols)
    for i in range(m.cols):
        if h.row(i) != ident.row(i):
            return False
    return True


def integer_kernel_basis(m) -> list[tuple[int, ...]]:
    """Canonical lattice basis of the left kernel ``{c : c*m = 0}``.

    The transform rows of the HNF that map onto zero rows span the left
    kernel; a second HNF pass canonicalizes the basis.  Empty iff the
    rows of ``m`` are Z-linearly independent.
    """
    m = _as_matrix(m)
    h, u = hermite_normal_form(m)
    raw = [u.row(i) for i in range(m.rows) if not any(h.row(i))]
    if not raw:
        return []
    canon, _ = hermite_normal_form(IntMatrix.from_rows(raw, cols=m.rows))
    return [canon.row(i) for i in range(canon.rows) if any(canon.row(i))]


def minimal_homogeneous_solutions(m, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All componentwise-minimal nonzero solutions in ``N^rows`` of ``x*m = 0``.

    Unknown ``x_i`` multiplies row ``i``.  Every nonnegative solution of
    the system is an N-combination of the returned solutions.  Raises
    ``ResourceLimit`` when the completion exceeds ``budget`` expansions.
    """
    m = _as_matrix(m)
    rows = [m.row(i) for i in range(m.rows)]
    return [tuple(s) for s in _kernels.solve_minimal(rows, budget)]
