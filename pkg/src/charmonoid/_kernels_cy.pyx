# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the hot search kernels.

Same algorithms and contracts as ``_kernels_py`` (see that module for
the full contract docstrings).  Entries remain Python integers, so the
arithmetic stays exact at any size; the speedup comes from typed loop
machinery, not from machine-word arithmetic.
"""

from .errors import ResourceLimit


cdef inline object _dot(tuple a, tuple b, Py_ssize_t width):
    cdef Py_ssize_t j
    s = 0
    for j in range(width):
        s += a[j] * b[j]
    return s


cdef inline bint _fits(tuple residual, tuple g, Py_ssize_t width):
    cdef Py_ssize_t j
    for j in range(width):
        if residual[j] < g[j]:
            return False
    return True


cdef inline tuple _sub(tuple residual, tuple g, Py_ssize_t width):
    cdef Py_ssize_t j
    out = []
    for j in range(width):
        out.append(residual[j] - g[j])
    return tuple(out)


def solve_minimal(rows, budget):
    """Minimal nonzero solutions of ``x . rows = 0`` over the naturals."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return []
    rows = [tuple(r) for r in rows]
    cdef Py_ssize_t width = len(rows[0])
    cdef Py_ssize_t i, j, k
    cdef long long expansions = 0
    cdef long long budget_c = budget
    cdef bint ge, dominated
    zero_val = (0,) * width
    minimals = []
    frontier = {}
    for i in range(n):
        t = [0] * n
        t[i] = 1
        frontier[tuple(t)] = rows[i]
    while frontier:
        items = sorted(frontier.items())
        for t, v in items:
            if v == zero_val:
                minimals.append(t)
        children = {}
        for t, v in items:
            if v == zero_val:
                continue
            for i in range(n):
                if _dot(v, rows[i], width) >= 0:
                    continue
                expansions += 1
                child = list(t)
                child[i] = child[i] + 1
                child_t = tuple(child)
                if child_t in children:
                    continue
                dominated = False
                for k in range(len(minimals)):
                    expansions += 1  # dominance scans count as search work
                    s = minimals[k]
                    ge = True
                    for j in range(n):
                        if child_t[j] < s[j]:
                            ge = False
                            break
                    if ge:
                        dominated = True
                        break
                if expansions > budget_c:
                    raise ResourceLimit(
                        f"diophantine completion exceeded {budget} search steps",
                        nodes=expansions,
                    )
                if not dominated:
                    row_i = rows[i]
                    new_v = []
                    for j in range(width):
                        new_v.append(v[j] + row_i[j])
                    children[child_t] = tuple(new_v)
        frontier = children
    minimals.sort()
    return minimals


def member_search(target, gens, prune_rows=()):
    """First decomposition of ``target`` over ``gens`` in index order."""
    cdef Py_ssize_t n = len(gens)
    gens = [tuple(g) for g in gens]
    target = tuple(target)
    prune = [tuple(r) for r in prune_rows]
    cdef Py_ssize_t n_prune = len(prune)
    cdef Py_ssize_t width = len(target)
    cdef Py_ssize_t i, k
    cdef bint pushed, feasible
    for x in target:
        if x < 0:
            return None
    zero = (0,) * width
    failed = set()
    stack = [[target, 0, 0]]
    picks = []
    while stack:
        frame = stack[len(stack) - 1]
        residual = frame[0]
        if residual == zero:
            return picks
        i = frame[2]
        pushed = False
        while i < n:
            g = gens[i]
            if _fits(residual, g, width):
                nxt = _sub(residual, g, width)
                if (nxt, i) not in failed:
                    feasible = True
                    for k in range(n_prune):
                        if _dot(prune[k], nxt, width) < 0:
                            feasible = False
                            break
                    if feasible:
                        frame[2] = i + 1
                        stack.append([nxt, i, i])
                        picks.append(i)
                        pushed = True
                        break
            i += 1
        if not pushed:
            frame[2] = n
            failed.add((residual, frame[1]))
            stack.pop()
            if stack:
                picks.pop()
    return None
