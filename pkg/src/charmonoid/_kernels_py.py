"""Pure-Python twins of the hot search kernels.

Two searches dominate the runtime of the whole package: the
Contejean-Devie completion that solves homogeneous linear Diophantine
systems over the naturals, and the depth-first decomposition search
behind monoid membership.  Both are implemented here on plain Python
integers (entries stay exact at any size) and again, same algorithms,
in ``_kernels_cy.pyx``; ``_kernels`` picks one at import time.

Contracts shared by both backends:

``solve_minimal(rows, budget)``
    ``rows`` is a list of integer tuples, one per unknown; the system is
    ``sum_i x_i * rows[i] = 0`` with ``x`` ranging over nonnegative
    integers.  Returns the complete set of componentwise-minimal nonzero
    solutions, sorted lexicographically.  Raises ``ResourceLimit`` once
    more than ``budget`` child nodes have been generated.

``member_search(target, gens)``
    ``gens`` is a list of nonzero nonnegative integer tuples.  Returns a
    nondecreasing list of generator indices whose rows sum to ``target``
    (the lexicographically first such multiset in index order), or
    ``None`` when ``target`` is not in the generated monoid.
"""

from .errors import ResourceLimit


def _dot(a, b):
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def solve_minimal(rows, budget):
    """Minimal nonzero solutions of ``x . rows = 0`` over the naturals.

    Breadth-first Contejean-Devie completion: a frontier node ``t`` with
    value ``v = sum t_i rows[i]`` is extended by ``e_i`` only when
    ``<v, rows[i]> < 0``, which keeps the search finite and complete.
    Nodes dominating an already-found solution are pruned; level order
    guarantees that every recorded solution is minimal.
    """
    n = len(rows)
    if n == 0:
        return []
    width = len(rows[0])
    zero_val = (0,) * width
    minimals = []
    # frontier maps node -> value, explored level by level in lex order
    frontier = {}
    for i in range(n):
        t = [0] * n
        t[i] = 1
        frontier[tuple(t)] = tuple(rows[i])
    expansions = 0
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
                if _dot(v, rows[i]) >= 0:
                    continue
                expansions += 1
                child = list(t)
                child[i] += 1
                child_t = tuple(child)
                if child_t in children:
                    continue
                dominated = False
                for s in minimals:
                    expansions += 1  # dominance scans count as search work
                    ge = True
                    for a, b in zip(child_t, s):
                        if a < b:
                            ge = False
                            break
                    if ge:
                        dominated = True
                        break
                if expansions > budget:
                    raise ResourceLimit(
                        f"diophantine completion exceeded {budget} search steps",
                        nodes=expansions,
                    )
                if not dominated:
                    new_v = tuple(a + b for a, b in zip(v, rows[i]))
                    children[child_t] = new_v
        frontier = children
    minimals.sort()
    return minimals


def member_search(target, gens, prune_rows=()):
    """First decomposition of ``target`` over ``gens`` in index order.

    Backtracking search consuming generators in nondecreasing index
    order, so every multiset is visited exactly once; failed
    ``(residual, start)`` pairs are memoized.  ``prune_rows`` may carry
    integer functionals that are nonnegative on every monoid element
    (support-hyperplane normals); residuals violating one cannot be
    decomposed and are cut immediately, which only removes dead
    branches.  Termination: generators are nonzero and nonnegative,
    hence each subtraction strictly reduces the total degree.  Iterative
    to stay independent of the interpreter recursion limit.
    """
    n = len(gens)
    width = len(target)
    for x in target:
        if x < 0:
            return None
    prune_rows = list(prune_rows)
    zero = (0,) * width
    failed = set()
    # frame: [residual, base_index, next_candidate]
    stack = [[tuple(target), 0, 0]]
    picks = []
    while stack:
        frame = stack[-1]
        residual = frame[0]
        if residual == zero:
            return picks
        i = frame[2]
        pushed = False
        while i < n:
            g = gens[i]
            fits = True
            for a, b in zip(residual, g):
                if a < b:
                    fits = False
                    break
            if fits:
                nxt = tuple(a - b for a, b in zip(residual, g))
                if (nxt, i) not in failed:
                    feasible = True
                    for row in prune_rows:
                        if _dot(row, nxt) < 0:
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
