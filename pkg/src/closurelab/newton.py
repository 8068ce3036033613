"""Exact Newton polyhedron membership and integral closure of monomial ideals.

``v`` lies in ``conv(E) + R^n_{>=0}`` iff the system

    sum_i lam_i e_i + s = v,  sum_i lam_i = 1,  lam, s >= 0

is feasible.  Feasibility is decided by a phase-one simplex over ``Fraction``
with Bland's rule, so there is no rounding anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence


def _phase_one(A: list, b: list) -> bool:
    """Is ``{x >= 0 : A x = b}`` nonempty?  Requires ``b >= 0``."""
    m = len(A)
    ncols = len(A[0]) if m else 0
    # tableau columns: original vars, artificial vars, rhs
    T = []
    for i in range(m):
        row = [Fraction(a) for a in A[i]] + [Fraction(int(k == i)) for k in range(m)] + [Fraction(b[i])]
        T.append(row)
    width = ncols + m
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(ncols):
            cost[j] -= T[i][j]
        cost[width] -= T[i][width]
    basis = [ncols + i for i in range(m)]
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # pragma: no cover - phase one is bounded below by 0
            break
        r = best[1]
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                Ti, Tr = T[i], T[r]
                T[i] = [x - f * y for x, y in zip(Ti, Tr)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, T[r])]
        basis[r] = enter
    return cost[width] == 0


def in_newton_polyhedron(v: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    """Exact test ``v in conv(points) + R^n_{>=0}``."""
    v = tuple(v)
    points = [tuple(p) for p in points]
    if not points:
        return False
    n = len(v)
    if any(all(p[j] <= v[j] for j in range(n)) for p in points):
        return True
    lows = [min(p[j] for p in points) for j in range(n)]
    if any(v[j] < lows[j] for j in range(n)):
        return False
    m = len(points)
    A = []
    for j in range(n):
        A.append([points[i][j] for i in range(m)] + [int(k == j) for k in range(n)])
    A.append([1] * m + [0] * n)
    return _phase_one(A, list(v) + [1])


def newton_closure_monomials(gens: Sequence[Sequence[int]], n: int) -> list:
    """Minimal generators (exponent vectors) of the integral closure of the monomial ideal ``gens``.

    Minimal generators of the closure fit in the box bounded by the largest
    exponent of each variable among ``gens``.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        return []
    if any(not any(g) for g in gens):
        return [(0,) * n]
    top = [max(g[j] for g in gens) for j in range(n)]
    box = sorted(product(*(range(t + 1) for t in top)), key=lambda v: (sum(v), v))
    found: list = []
    for v in box:
        if any(all(f[j] <= v[j] for j in range(n)) for f in found):
            continue
        if in_newton_polyhedron(v, gens):
            found.append(v)
    return found
