"""Ideals of a graded quotient ``R = k[x]/J``, handled through their preimages in ``k[x]``.

Every :class:`Ideal` stores the reduced Groebner basis of (its generators + J)
in the ambient ring, so equality is basis comparison and colength is a count of
standard monomials.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .coeffs import Field
from .errors import NotPrimaryError, UnsupportedError, UsageError
from .groebner import (
    GroebnerBasis,
    free_variable,
    groebner_basis,
    krull_dimension,
    normal_form,
    standard_monomials,
)
from .polyring import (
    EliminationOrder,
    PolyRing,
    Polynomial,
    Ring,
    make_ring,
    monomial_divides,
    monomial_lcm,
)


def _minimal_monomials(monos: Iterable) -> list:
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


class Ideal:
    """An ideal of ``ring``; ``gens`` are the user-visible generators (J left implicit)."""

    def __init__(self, ring: Ring, gens: Sequence = (), *, gb: GroebnerBasis | None = None):
        P = ring.ambient
        polys = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = P.constant(g)
            elif g.ring != P:
                raise UsageError(f"generator {g} does not belong to {ring.describe()}")
            if not g.is_homogeneous():
                raise UsageError(f"generator {g} is not homogeneous for weights {list(ring.weights)}")
            if g:
                polys.append(g)
        self.ring = ring
        self.gens = tuple(polys)
        if gb is None:
            gb = groebner_basis(list(ring.gb.polys) + polys, P.order, ring=P)
        self.gb = gb
        self._mingens = None

    # -- basic queries -----------------------------------------------------
    @property
    def ambient_gens(self) -> tuple:
        return tuple(self.ring.relations) + self.gens

    def leading_monomials(self) -> list:
        return self.gb.leading_monomials()

    def is_unit(self) -> bool:
        return self.gb.is_unit()

    def is_monomial(self) -> bool:
        """True when the ambient preimage (J included) is a monomial ideal."""
        return all(g.is_monomial() for g in self.gb.polys)

    def is_zero(self) -> bool:
        return self.gb == self.ring.gb

    def contains(self, f) -> bool:
        return membership(f, self)

    def __contains__(self, f) -> bool:
        return membership(f, self)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.gb == other.gb

    def __hash__(self):
        return hash((self.ring, self.gb))

    def __le__(self, other: "Ideal") -> bool:
        return is_subideal(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, n: int):
        return ideal_power(self, n)

    def minimal_generators(self) -> tuple:
        """A minimal homogeneous generating set modulo J (graded Nakayama, lowest degree first)."""
        if self._mingens is None:
            cands = [g for g in self.gb.polys if not self.ring.gb.contains(g)]
            cands.sort(key=lambda g: (g.degree(), self.ring.ambient.order.neg_key(g.leading_monomial())))
            kept: list = []
            for g in cands:
                if not kept:
                    kept.append(g)
                    continue
                G = groebner_basis(list(self.ring.gb.polys) + kept, ring=self.ring.ambient)
                if not G.contains(g):
                    kept.append(g)
            self._mingens = tuple(kept)
        return self._mingens

    def __str__(self):
        if self.is_unit():
            return "(1)"
        return "(" + ", ".join(str(g) for g in self.minimal_generators()) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def _check_same_ring(*ideals: Ideal) -> Ring:
    ring = ideals[0].ring
    for A in ideals[1:]:
        if A.ring != ring:
            raise UsageError("ideals live in different rings")
    return ring


def _coerce_poly(ring: Ring, f) -> Polynomial:
    if isinstance(f, Polynomial):
        if f.ring != ring.ambient:
            raise UsageError(f"{f} does not belong to {ring.describe()}")
        return f
    return ring.ambient.constant(f)


def _from_gb(ring: Ring, gb: GroebnerBasis) -> Ideal:
    gens = [g for g in gb.polys if not ring.gb.contains(g)]
    return Ideal(ring, gens, gb=gb)


def ideal(ring: Ring, *gens) -> Ideal:
    if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
        gens = tuple(gens[0])
    return Ideal(ring, gens)


def maximal_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ring.gens)


def unit_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, [ring.ambient.one()])


def zero_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, [], gb=ring.gb)


# -- arithmetic --------------------------------------------------------------

def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    ring = _check_same_ring(A, B)
    return Ideal(ring, A.gens + B.gens)


def _products(fs: Sequence[Polynomial], gs: Sequence[Polynomial]) -> list:
    out = []
    seen = set()
    for f in fs:
        for g in gs:
            h = f * g
            if h and h not in seen:
                seen.add(h)
                out.append(h)
    return out


def ideal_product(A: Ideal, B: Ideal) -> Ideal:
    ring = _check_same_ring(A, B)
    return Ideal(ring, _products(A.gens, B.gens))


def ideal_power(A: Ideal, n: int) -> Ideal:
    if n < 0:
        raise UsageError("ideal powers need n >= 0")
    ring = A.ring
    if n == 0:
        return unit_ideal(ring)
    gens = [g for g in A.gens]
    if all(g.is_monomial() for g in gens):
        monos = [g.leading_monomial() for g in gens]
        prods = set()
        for combo in combinations_with_replacement(range(len(monos)), n):
            e = [0] * ring.ngens
            for i in combo:
                for k, v in enumerate(monos[i]):
                    e[k] += v
            prods.add(tuple(e))
        P = ring.ambient
        return Ideal(ring, [P.monomial(m) for m in _minimal_monomials(prods)])
    base = _echelon([normal_form(g, ring.gb) for g in gens])
    current = base
    for _ in range(n - 1):
        current = _echelon([normal_form(g * a, ring.gb) for g in current for a in base])
    return Ideal(ring, current)


def _echelon(polys: Sequence[Polynomial]) -> list:
    """Basis of the k-span of ``polys`` with pairwise distinct leading monomials."""
    pivots: dict = {}
    for p in polys:
        if not p:
            continue
        P = p.ring
        K = P.field
        key = P.order.key
        terms = dict(p.terms)
        while terms:
            lm = max(terms, key=key)
            piv = pivots.get(lm)
            if piv is None:
                inv = K.inv(terms[lm])
                pivots[lm] = Polynomial(P, {m: K.mul(c, inv) for m, c in terms.items()})
                break
            c = terms[lm]
            for m, cp in piv.terms.items():
                v = K.sub(terms.get(m, K.zero), K.mul(c, cp))
                if v == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = v
    return [pivots[m] for m in sorted(pivots, key=polys[0].ring.order.key)] if pivots else []


def membership(f, A: Ideal) -> bool:
    f = _coerce_poly(A.ring, f)
    return normal_form(f, A.gb).is_zero()


def is_subideal(A: Ideal, B: Ideal) -> bool:
    _check_same_ring(A, B)
    return all(B.gb.contains(g) for g in A.gb.polys)


def ideal_equal(A: Ideal, B: Ideal) -> bool:
    _check_same_ring(A, B)
    return A.gb == B.gb


# -- elimination-based operations -------------------------------------------

def _intersect_ambient(P: PolyRing, F: Sequence[Polynomial], G: Sequence[Polynomial]) -> GroebnerBasis:
    """Reduced basis of (F) meet (G) in ``P`` via t*F + (1-t)*G, t eliminated."""
    n = P.ngens
    ext = P.extend(["_t"])
    pos = list(range(n))
    t = ext.gen(n)
    gens = [t * f.embed(ext, pos) for f in F] + [(1 - t) * g.embed(ext, pos) for g in G]
    E = groebner_basis(gens, EliminationOrder([n], ext.weights), ring=ext)
    keep = []
    for g in E.polys:
        if all(m[n] == 0 for m in g.terms):
            keep.append(g.project(pos, P))
    return groebner_basis(keep, P.order, ring=P)


def _monomial_intersection(ring: Ring, A: Ideal, B: Ideal) -> Ideal:
    P = ring.ambient
    lcms = [monomial_lcm(a, b) for a in A.leading_monomials() for b in B.leading_monomials()]
    return _from_gb(ring, groebner_basis([P.monomial(m) for m in _minimal_monomials(lcms)], ring=P))


def ideal_intersection(A: Ideal, B: Ideal) -> Ideal:
    ring = _check_same_ring(A, B)
    if A.is_unit():
        return B
    if B.is_unit():
        return A
    if A.is_monomial() and B.is_monomial():
        return _monomial_intersection(ring, A, B)
    gb = _intersect_ambient(ring.ambient, A.gb.polys, B.gb.polys)
    return _from_gb(ring, gb)


def divide_exact(g: Polynomial, f: Polynomial) -> Polynomial:
    """``g / f`` when ``f`` divides ``g``; raises otherwise."""
    P = g.ring
    K = P.field
    q = {}
    r = dict(g.terms)
    lf = f.leading_monomial()
    inv = K.inv(f.terms[lf])
    key = P.order.key
    while r:
        lm = max(r, key=key)
        if not monomial_divides(lf, lm):
            raise UsageError(f"{f} does not divide {g}")
        shift = tuple(a - b for a, b in zip(lm, lf))
        c = K.mul(r[lm], inv)
        q[shift] = c
        for m, cf in f.terms.items():
            mm = tuple(a + b for a, b in zip(shift, m))
            v = K.sub(r.get(mm, K.zero), K.mul(c, cf))
            if v == 0:
                r.pop(mm, None)
            else:
                r[mm] = v
    return Polynomial(P, q)


def ideal_quotient(A: Ideal, f) -> Ideal:
    """``A : f = {r : r f in A}``."""
    ring = A.ring
    f = _coerce_poly(ring, f)
    if f.is_zero():
        raise UsageError("colon by the zero element is not supported")
    if not f.is_homogeneous():
        raise UsageError(f"{f} is not homogeneous")
    P = ring.ambient
    if membership(f, A):
        return unit_ideal(ring)
    if A.is_monomial() and f.is_monomial():
        m = f.leading_monomial()
        monos = [tuple(max(a - b, 0) for a, b in zip(g, m)) for g in A.leading_monomials()]
        return _from_gb(ring, groebner_basis([P.monomial(x) for x in _minimal_monomials(monos)], ring=P))
    meet = _intersect_ambient(P, A.gb.polys, [f])
    quotients = [divide_exact(g, f) for g in meet.polys]
    return _from_gb(ring, groebner_basis(quotients, ring=P))


def ideal_colon_ideal(A: Ideal, B: Ideal) -> Ideal:
    """``A : B = {r : r B in A}``."""
    ring = _check_same_ring(A, B)
    result = unit_ideal(ring)
    for g in B.gens:
        if membership(g, A):
            continue
        result = ideal_intersection(result, ideal_quotient(A, g))
    return result


def saturation(A: Ideal, f) -> tuple:
    """``(A : f^infinity, s)`` with ``s`` the first index where the chain ``A : f^n`` repeats."""
    f = _coerce_poly(A.ring, f)
    if f.is_zero():
        raise UsageError("saturation by zero")
    current = A
    s = 0
    while True:
        nxt = ideal_quotient(current, f)
        if nxt == current:
            return current, s
        current = nxt
        s += 1


# -- numerical invariants ----------------------------------------------------

def dimension(A: Ideal) -> int:
    """Krull dimension of ``R/A``."""
    if A.is_unit():
        raise UsageError("dimension of zero ring")
    return krull_dimension(A.leading_monomials(), A.ring.ngens)


def is_m_primary(A: Ideal) -> bool:
    return not A.is_unit() and dimension(A) == 0


def standard_basis(A: Ideal, bound: int | None = None) -> list:
    """Standard monomials of ``A`` (a k-basis of ``R/A``)."""
    return standard_monomials(A.gb, bound)


def colength(A: Ideal) -> int:
    """``length(R/A)`` for m-primary ``A``; the unit ideal has colength 0."""
    if A.is_unit():
        return 0
    i = free_variable(A.leading_monomials(), A.ring.ngens)
    if i is not None:
        name = A.ring.names[i]
        raise NotPrimaryError(f"ideal {A} is not m-primary: R/I is infinite along {name}", name)
    return len(standard_monomials(A.gb))


def is_system_of_parameters(ring: Ring, seq: Sequence[Polynomial]) -> bool:
    seq = [_coerce_poly(ring, f) for f in seq]
    if len(seq) != ring.dim:
        return False
    if ring.dim == 0:
        return True
    J = Ideal(ring, seq)
    return is_m_primary(J)


def require_system_of_parameters(ring: Ring, seq: Sequence[Polynomial]) -> list:
    seq = [_coerce_poly(ring, f) for f in seq]
    if len(seq) != ring.dim:
        raise UsageError(f"a system of parameters needs {ring.dim} elements, got {len(seq)}")
    if not is_system_of_parameters(ring, seq):
        raise UsageError("sequence is not a system of parameters (R/(seq) is not of finite length)")
    return seq


# -- combinatorics of monomial ideals ---------------------------------------

def _minimal_covers(supports: list) -> list:
    """Minimal vertex covers of the hypergraph with edges ``supports``."""
    results: list = []

    def split(chosen: frozenset, remaining: list):
        remaining = [s for s in remaining if not (s & chosen)]
        if not remaining:
            results.append(chosen)
            return
        edge = min(remaining, key=lambda s: (len(s), sorted(s)))
        for v in sorted(edge):
            split(chosen | {v}, remaining)

    split(frozenset(), supports)
    uniq = set(results)
    return sorted((c for c in uniq if not any(o < c for o in uniq)), key=lambda c: (len(c), sorted(c)))


def minimal_primes_monomial(A: Ideal) -> list:
    """Minimal primes of a monomial ideal (ambient, J included), as ideals of variables."""
    if not A.is_monomial():
        raise UnsupportedError("unsupported: minimal primes implemented for monomial ideals only")
    if A.is_unit():
        return []
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in A.leading_monomials()]
    ring = A.ring
    return [Ideal(ring, [ring.ambient.gen(i) for i in sorted(c)]) for c in _minimal_covers(supports)]


def ring_minimal_prime_supports(ring: Ring) -> list:
    """Variable index sets of the minimal primes of a monomial quotient ring."""
    if not ring.is_monomial_quotient():
        raise UnsupportedError("unsupported: minimal primes implemented for monomial ideals only")
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in ring.gb.leading_monomials()]
    return [tuple(sorted(c)) for c in _minimal_covers(supports)]


def is_equidimensional_monomial(ring: Ring) -> bool:
    """All minimal primes of a monomial quotient have dimension ``dim R``."""
    return all(ring.ngens - len(c) == ring.dim for c in ring_minimal_prime_supports(ring))


# -- toric rings --------------------------------------------------------------

def toric_kernel(field: Field, vectors: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> list:
    """Generators of the kernel of ``a_i -> x^{v_i}`` (reduced Groebner basis)."""
    vectors = [tuple(int(e) for e in v) for v in vectors]
    if not vectors:
        raise UsageError("at least one exponent vector is required")
    n = len(vectors[0])
    if any(len(v) != n or min(v) < 0 for v in vectors):
        raise UsageError("exponent vectors must be nonnegative and of equal length")
    m = len(vectors)
    names = list(names) if names is not None else _default_names(m)
    weights = _toric_weights(vectors)
    target = PolyRing(field, names, weights)
    big = PolyRing(field, [f"_x{i}" for i in range(n)] + names, [1] * n + weights)
    xs = big.gens[:n]
    gens = []
    for i, v in enumerate(vectors):
        mono = big.one()
        for k, e in enumerate(v):
            mono = mono * xs[k] ** e
        gens.append(big.gen(n + i) - mono)
    E = groebner_basis(gens, EliminationOrder(range(n), big.weights), ring=big)
    keep = [g.project(range(n, n + m), target) for g in E.polys
            if all(not any(mm[:n]) for mm in g.terms)]
    return list(groebner_basis(keep, target.order, ring=target).polys) if keep else []


def _toric_weights(vectors) -> list:
    degs = [sum(v) for v in vectors]
    if len(set(degs)) == 1:
        return [1] * len(vectors)
    if min(degs) < 1:
        raise UsageError("a zero exponent vector has no positive degree")
    return degs


def _default_names(m: int) -> list:
    letters = "abcdefghijklmnopqrstuvw"
    return list(letters[:m]) if m <= len(letters) else [f"a{i}" for i in range(m)]


def toric_ring(field: Field, vectors: Sequence[Sequence[int]], names: Sequence[str] | None = None,
               name: str | None = None) -> Ring:
    """The semigroup ring ``k[x^{v_1}, ..., x^{v_m}]`` as a quotient of ``k[a_1..a_m]``."""
    vectors = [tuple(v) for v in vectors]
    names = list(names) if names is not None else _default_names(len(vectors))
    rels = toric_kernel(field, vectors, names)
    return make_ring(field, names, _toric_weights(vectors), rels, name=name)
