"""Buchberger's algorithm, normal forms, standard monomials.

Pairs are selected by the normal strategy (smallest lcm first) and pruned with
the Gebauer-Moeller installation of both Buchberger criteria.  Ties fall back to
generator insertion order so that runs are reproducible.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .errors import NotPrimaryError, UsageError
from .polyring import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    monomial_divides,
    monomial_lcm,
    monomials_coprime,
    subsets_by_size,
)


class _Elem:
    """Monic basis element in the shape the reducer wants."""

    __slots__ = ("lm", "tail", "terms", "deg")

    def __init__(self, terms: dict, lm):
        self.terms = terms
        self.lm = lm
        self.tail = [(m, c) for m, c in terms.items() if m != lm]
        self.deg = sum(lm)


def _monic(terms: dict, order: MonomialOrder, field) -> tuple:
    lm = max(terms, key=order.key)
    lc = terms[lm]
    if lc != field.one:
        inv = field.inv(lc)
        terms = {m: field.mul(c, inv) for m, c in terms.items()}
    return terms, lm


def _find_divisor(m, basis: Sequence[_Elem]):
    sm = sum(m)
    for g in basis:
        if g.deg <= sm:
            lm = g.lm
            for a, b in zip(lm, m):
                if a > b:
                    break
            else:
                return g
    return None


def _reduce(terms: dict, basis: Sequence[_Elem], order: MonomialOrder, field) -> dict:
    """Full normal form of ``terms`` modulo monic ``basis``; returns a new dict."""
    if not basis or not terms:
        return dict(terms)
    f = dict(terms)
    nk = order.neg_key
    heap = [(nk(m), m) for m in f]
    heapq.heapify(heap)
    rem = {}
    sub, mul, zero = field.sub, field.mul, field.zero
    while heap:
        _, m = heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        g = _find_divisor(m, basis)
        if g is None:
            rem[m] = c
            continue
        shift = tuple(a - b for a, b in zip(m, g.lm))
        for mg, cg in g.tail:
            mm = tuple(a + b for a, b in zip(shift, mg))
            old = f.get(mm)
            if old is None:
                f[mm] = sub(zero, mul(c, cg))
                heapq.heappush(heap, (nk(mm), mm))
            else:
                v = sub(old, mul(c, cg))
                if v == 0:
                    del f[mm]
                else:
                    f[mm] = v
    return rem


def _spoly(g: _Elem, h: _Elem, field) -> dict:
    lcm = monomial_lcm(g.lm, h.lm)
    sg = tuple(a - b for a, b in zip(lcm, g.lm))
    sh = tuple(a - b for a, b in zip(lcm, h.lm))
    out = {}
    for m, c in g.tail:
        out[tuple(a + b for a, b in zip(sg, m))] = c
    sub, zero = field.sub, field.zero
    for m, c in h.tail:
        mm = tuple(a + b for a, b in zip(sh, m))
        v = sub(out.get(mm, zero), c)
        if v == 0:
            out.pop(mm, None)
        else:
            out[mm] = v
    return out


class GroebnerBasis:
    """A reduced Groebner basis: monic, inter-reduced, sorted by increasing leading monomial."""

    def __init__(self, ring: PolyRing, order: MonomialOrder, polys: Sequence[Polynomial]):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)
        self._elems = [_Elem(p.terms, p.leading_monomial(order)) for p in self.polys]

    def leading_monomials(self) -> list:
        return [e.lm for e in self._elems]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.order == other.order and self.polys == other.polys)

    def __hash__(self):
        return hash((self.ring, self.order, self.polys))

    def __repr__(self):
        return "GroebnerBasis([" + ", ".join(str(p) for p in self.polys) + "])"

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.leading_monomials())


def groebner_basis(gens: Iterable[Polynomial], order: MonomialOrder | None = None,
                   ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise UsageError("an empty generator list needs an explicit ring")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise UsageError("all generators must live in one ambient ring")
    order = order or ring.order
    field = ring.field
    elems = _buchberger([dict(g.terms) for g in gens if g], order, field)
    return GroebnerBasis(ring, order, [Polynomial(ring, e.terms) for e in elems])


def _buchberger(polys: list, order: MonomialOrder, field) -> list:
    key = order.key
    basis: list = []          # every element ever added, by index
    active: list = []         # indices currently in G
    pairs: list = []          # (i, j) with i < j

    def update(h_idx: int):
        nonlocal active, pairs
        h = basis[h_idx]
        cand = [(h_idx, g) for g in active]
        lcms = {g: monomial_lcm(h.lm, basis[g].lm) for g in active}
        keep = []
        for idx, (_, g) in enumerate(cand):
            lg = lcms[g]
            if monomials_coprime(h.lm, basis[g].lm):
                keep.append(g)
                continue
            redundant = False
            for _, g2 in cand[idx + 1:]:
                if monomial_divides(lcms[g2], lg):
                    redundant = True
                    break
            if not redundant:
                for g2 in keep:
                    if monomial_divides(lcms[g2], lg):
                        redundant = True
                        break
            if not redundant:
                keep.append(g)
        new_pairs = [(g, h_idx) for g in keep if not monomials_coprime(h.lm, basis[g].lm)]
        old = []
        for (i, j) in pairs:
            lij = monomial_lcm(basis[i].lm, basis[j].lm)
            if (monomial_divides(h.lm, lij)
                    and monomial_lcm(basis[i].lm, h.lm) != lij
                    and monomial_lcm(basis[j].lm, h.lm) != lij):
                continue
            old.append((i, j))
        pairs = old + new_pairs
        active = [g for g in active if not monomial_divides(h.lm, basis[g].lm)] + [h_idx]

    for terms in polys:
        terms, lm = _monic(terms, order, field)
        if not any(lm):
            return [_Elem({lm: field.one}, lm)]
        basis.append(_Elem(terms, lm))
        update(len(basis) - 1)

    while pairs:
        best = min(range(len(pairs)),
                   key=lambda k: (key(monomial_lcm(basis[pairs[k][0]].lm, basis[pairs[k][1]].lm)), pairs[k]))
        i, j = pairs.pop(best)
        s = _spoly(basis[i], basis[j], field)
        h = _reduce(s, [basis[g] for g in active], order, field)
        if not h:
            continue
        h, lm = _monic(h, order, field)
        if not any(lm):
            return [_Elem({lm: field.one}, lm)]
        basis.append(_Elem(h, lm))
        update(len(basis) - 1)

    # minimal basis already (update drops divisible leads); inter-reduce tails
    elems = [basis[g] for g in active]
    elems.sort(key=lambda e: key(e.lm))
    out = []
    for idx, e in enumerate(elems):
        others = elems[:idx] + elems[idx + 1:]
        tail = _reduce(dict(e.tail), others, order, field)
        tail[e.lm] = field.one
        out.append(_Elem(tail, e.lm))
    return out


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``G``; zero iff ``f`` lies in the ideal."""
    if f.ring != G.ring:
        raise UsageError("polynomial and basis live in different rings")
    return Polynomial(G.ring, _reduce(f.terms, G._elems, G.order, G.ring.field))


def is_groebner(G: GroebnerBasis) -> bool:
    """Buchberger's criterion, checked naively over all pairs."""
    elems = G._elems
    field = G.ring.field
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            if _reduce(_spoly(elems[a], elems[b], field), elems, G.order, field):
                return False
    return True


def krull_dimension(leading: Sequence, n: int) -> int:
    """Dimension of ``k[x]/M`` for the monomial ideal ``M`` spanned by ``leading``.

    Largest set of variables containing the support of no generator; -1 when a
    generator is the constant 1.
    """
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leading]
    if any(not s for s in supports):
        return -1
    for subset in subsets_by_size(n):
        s = set(subset)
        if not any(sup <= s for sup in supports):
            return len(subset)
    return 0  # pragma: no cover - the empty subset always qualifies


def free_variable(leading: Sequence, n: int) -> int | None:
    """Index of a variable with no pure power among ``leading``, if any."""
    pure = set()
    for m in leading:
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            pure.add(nz[0])
    for i in range(n):
        if i not in pure:
            return i
    return None


def standard_monomials(G: GroebnerBasis, bound: int | None = None, ring: PolyRing | None = None) -> list:
    """Monomials outside the leading-term ideal of ``G``, sorted increasingly.

    With ``bound`` only monomials of weighted degree ``<= bound`` are listed.
    Without a bound the set must be finite, otherwise :class:`NotPrimaryError`.
    """
    if ring is not None and ring != G.ring:
        raise UsageError("basis and ring disagree on the ambient variables")
    R = G.ring
    n = R.ngens
    leading = G.leading_monomials()
    if any(not any(m) for m in leading):
        return []
    if bound is None:
        i = free_variable(leading, n)
        if i is not None:
            raise NotPrimaryError(
                f"not m-primary: infinitely many standard monomials along {R.names[i]}", R.names[i])
    w = R.weights
    found = []
    seen = {(0,) * n}
    stack = [(0,) * n]
    while stack:
        m = stack.pop()
        found.append(m)
        for i in range(n):
            if bound is not None and R.degree(m) + w[i] > bound:
                continue
            mm = m[:i] + (m[i] + 1,) + m[i + 1:]
            if mm in seen:
                continue
            seen.add(mm)
            if any(monomial_divides(lm, mm) for lm in leading):
                continue
            stack.append(mm)
    found.sort(key=G.order.key)
    return found
