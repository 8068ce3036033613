"""Independent oracles: plain integer arithmetic, no Groebner bases.

Each function here recomputes a quantity from first principles so tests can
compare it with the engine.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product


def semigroup_elements(generators, max_degree):
    """Points of the affine semigroup spanned by ``generators`` with coordinate sum <= max_degree."""
    dim = len(generators[0])
    seen = {(0,) * dim}
    frontier = [(0,) * dim]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(a + b for a, b in zip(p, g))
                if sum(q) <= max_degree and q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def semigroup_colength(generators, ideal_points, max_degree):
    """Number of semigroup points outside ``union(p + S)`` for ``p`` in ``ideal_points``.

    ``max_degree`` must exceed the largest degree of a point outside the ideal;
    callers pick it generously and check stability by recounting at a larger bound.
    """
    S = semigroup_elements(generators, max_degree)

    def in_ideal(v):
        return any(tuple(a - b for a, b in zip(v, p)) in S for p in ideal_points)

    return sum(1 for v in S if not in_ideal(v))


def in_semigroup_ideal(v, generators, ideal_points):
    S = semigroup_elements(generators, sum(v))
    return any(tuple(a - b for a, b in zip(v, p)) in S for p in ideal_points)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _minimize(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def monomial_power(gens, k):
    """Minimal generators of ``A^k`` for the monomial ideal with exponent vectors ``gens``."""
    n = len(gens[0])
    prods = []
    for combo in combinations_with_replacement(range(len(gens)), k):
        v = [0] * n
        for i in combo:
            v = [a + b for a, b in zip(v, gens[i])]
        prods.append(tuple(v))
    return _minimize(prods)


def power_test_member(u, gens, max_k=6, powers=None):
    """``u^k in A^k`` for some ``k <= max_k``: the integral-equation test for monomials."""
    for k in range(1, max_k + 1):
        Ak = powers[k] if powers is not None else monomial_power(gens, k)
        uk = tuple(k * x for x in u)
        if any(_divides(g, uk) for g in Ak):
            return True
    return False


def power_test_closure_box(gens, max_k=6):
    """Exponent vectors in the box of coordinatewise maxima that pass the power test."""
    gens = _minimize(gens)
    n = len(gens[0])
    top = [max(g[i] for g in gens) for i in range(n)]
    powers = {k: monomial_power(gens, k) for k in range(1, max_k + 1)}
    box = product(*(range(t + 1) for t in top))
    return {u for u in box if power_test_member(u, gens, max_k, powers)}, top


def substitute_monomial_map(poly, vectors):
    """Image of a polynomial under ``var_i -> t^{vectors[i]}``, as a dict exponent -> coefficient."""
    out = {}
    for m, c in poly.terms.items():
        e = [0] * len(vectors[0])
        for i, k in enumerate(m):
            e = [a + k * b for a, b in zip(e, vectors[i])]
        key = tuple(e)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v != 0}
