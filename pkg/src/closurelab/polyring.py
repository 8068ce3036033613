"""Monomials, monomial orders, polynomials and graded quotient presentations.

A monomial is a tuple of nonnegative exponents.  A :class:`Polynomial` keeps a
``dict`` from monomial to raw nonzero coefficient; sorting only happens when an
order is asked for.  :class:`Ring` models ``k[x]/J`` with ``J`` weighted
homogeneous, which is how the engine stands in for the local ring at the
irrelevant maximal ideal.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .coeffs import Field, FieldScalar, QQ
from .errors import UsageError

Monomial = tuple


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomials_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MonomialOrder:
    """Base class.  ``key(m)`` is a tuple of ints; bigger key = bigger monomial."""

    weights: tuple

    def key(self, m: Monomial) -> tuple:
        raise NotImplementedError

    def neg_key(self, m: Monomial) -> tuple:
        return tuple(-k for k in self.key(m))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


class WeightedDegRevLex(MonomialOrder):
    """Weighted degree first, ties broken reverse-lexicographically."""

    def __init__(self, weights: Sequence[int]):
        weights = tuple(int(w) for w in weights)
        if any(w < 1 for w in weights):
            raise UsageError(f"weights must be positive integers, got {weights}")
        self.weights = weights
        self._rev = tuple(range(len(weights) - 1, -1, -1))

    def key(self, m):
        w = self.weights
        deg = 0
        for i, e in enumerate(m):
            deg += w[i] * e
        return (deg,) + tuple(-m[i] for i in self._rev)

    def __eq__(self, other):
        return type(other) is WeightedDegRevLex and other.weights == self.weights

    def __hash__(self):
        return hash(("wdrl", self.weights))

    def __repr__(self):
        return f"WeightedDegRevLex({list(self.weights)})"


class EliminationOrder(MonomialOrder):
    """Block order: total degree in the eliminated variables decides first.

    Any polynomial whose leading monomial avoids the eliminated variables avoids
    them entirely, which is what elimination needs.
    """

    def __init__(self, eliminate: Iterable[int], weights: Sequence[int]):
        self.eliminate = tuple(sorted(eliminate))
        self.base = WeightedDegRevLex(weights)
        self.weights = self.base.weights

    def key(self, m):
        return (sum(m[i] for i in self.eliminate),) + self.base.key(m)

    def __eq__(self, other):
        return (type(other) is EliminationOrder and other.eliminate == self.eliminate
                and other.weights == self.weights)

    def __hash__(self):
        return hash(("elim", self.eliminate, self.weights))

    def __repr__(self):
        return f"EliminationOrder({list(self.eliminate)}, {list(self.weights)})"


class PolyRing:
    """The ambient polynomial ring ``k[x_1..x_n]`` with positive weights."""

    def __init__(self, field: Field, names: Sequence[str], weights: Sequence[int] | None = None):
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise UsageError("one weight per variable is required")
        self.field = field
        self.names = names
        self.weights = weights
        self.ngens = len(names)
        self.order = WeightedDegRevLex(weights)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names and self.weights == other.weights)

    def __hash__(self):
        return hash((self.field, self.names, self.weights))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {list(self.names)}, weights={list(self.weights)})"

    @property
    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.ngens))

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.ngens
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def var(self, name: str) -> "Polynomial":
        try:
            return self.gen(self.names.index(name))
        except ValueError:
            raise UsageError(f"no variable named {name!r} in {list(self.names)}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.convert(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.ngens: c})

    def monomial(self, exponents: Sequence[int], coeff=1) -> "Polynomial":
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.ngens or any(e < 0 for e in exponents):
            raise UsageError(f"bad exponent vector {exponents} for {self.ngens} variables")
        c = self.field.convert(coeff)
        return Polynomial(self, {exponents: c} if c != 0 else {})

    def from_dict(self, terms: Mapping[Monomial, object]) -> "Polynomial":
        conv = self.field.convert
        out = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.ngens:
                raise UsageError(f"monomial {m} has wrong length for {self.ngens} variables")
            c = conv(c)
            if c != 0:
                out[m] = c
        return Polynomial(self, out)

    def degree(self, m: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def extend(self, names: Sequence[str], weights: Sequence[int] | None = None) -> "PolyRing":
        """A ring with extra variables appended after the existing ones."""
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        return PolyRing(self.field, self.names + tuple(names), self.weights + weights)

    def subring(self, keep: Sequence[int]) -> "PolyRing":
        return PolyRing(self.field, [self.names[i] for i in keep], [self.weights[i] for i in keep])


class Polynomial:
    """Immutable sparse polynomial over a :class:`PolyRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        """``[(monomial, raw coeff), ...]`` strictly decreasing in ``order``."""
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        if not self.terms:
            raise UsageError("zero polynomial has no leading monomial")
        return max(self.terms, key=(order or self.ring.order).key)

    def leading_coefficient(self, order: MonomialOrder | None = None) -> FieldScalar:
        return FieldScalar(self.ring.field, self.terms[self.leading_monomial(order)])

    def coefficient(self, m: Sequence[int]) -> FieldScalar:
        return FieldScalar(self.ring.field, self.terms.get(tuple(m), self.ring.field.zero))

    def monomials(self) -> list:
        return [m for m, _ in self.sorted_terms()]

    def degree(self) -> int:
        """Weighted degree (largest over terms); -1 for zero."""
        if not self.terms:
            return -1
        return max(self.ring.degree(m) for m in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.degree(m) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def support(self) -> set:
        """Indices of variables that occur."""
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        K = self.ring.field
        inv = K.inv(self.terms[self.leading_monomial(order)])
        return Polynomial(self.ring, {m: K.mul(c, inv) for m, c in self.terms.items()})

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise UsageError(f"polynomials live in different rings: {self.ring} vs {other.ring}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        K = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = K.add(out.get(m, K.zero), c)
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        K = self.ring.field
        return Polynomial(self.ring, {m: K.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            K = self.ring.field
            c = K.convert(other)
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {m: K.mul(v, c) for m, v in self.terms.items()})
        other = self._coerce(other)
        K = self.ring.field
        add, mul, zero = K.add, K.mul, K.zero
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = add(out.get(m, zero), mul(c1, c2))
        return Polynomial(self.ring, {m: c for m, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.constant(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset((m, str(c)) for m, c in self.terms.items())))
        return self._hash

    # -- substitution ------------------------------------------------------
    def substitute(self, images: Sequence["Polynomial"], target: PolyRing | None = None) -> "Polynomial":
        """Ring map sending variable ``i`` to ``images[i]``."""
        if len(images) != self.ring.ngens:
            raise UsageError("one image per variable is required")
        if target is None:
            target = images[0].ring if images else self.ring
        if target.field != self.ring.field:
            raise UsageError("substitution cannot change the coefficient field")
        result = target.zero()
        cache: dict = {}
        for m, c in self.terms.items():
            term = Polynomial(target, {(0,) * target.ngens: c})
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    term = term * cache[key]
            result = result + term
        return result

    def project(self, keep: Sequence[int], target: PolyRing) -> "Polynomial":
        """Set every variable outside ``keep`` to zero and land in ``target``."""
        keep = list(keep)
        keep_set = set(keep)
        out = {}
        for m, c in self.terms.items():
            if any(e and i not in keep_set for i, e in enumerate(m)):
                continue
            out[tuple(m[i] for i in keep)] = c
        return Polynomial(target, out)

    def embed(self, target: PolyRing, positions: Sequence[int]) -> "Polynomial":
        """Send variable ``i`` to variable ``positions[i]`` of ``target``."""
        out = {}
        for m, c in self.terms.items():
            e = [0] * target.ngens
            for i, k in enumerate(m):
                e[positions[i]] += k
            out[tuple(e)] = c
        return Polynomial(target, out)

    # -- printing ----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        K = self.ring.field
        names = self.ring.names
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            s = K.to_str(c)
            neg = False
            if K.characteristic == 0 and c < 0:
                neg, s = True, K.to_str(-c)
            if mono and s == "1":
                body = mono
            elif mono:
                body = f"{s}*{mono}" if "/" not in s else f"({s})*{mono}"
            else:
                body = s
            parts.append(("- " if neg else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"Polynomial({self})"


class Ring:
    """A graded quotient ``k[x]/J`` with its reduced Groebner basis and dimension cached.

    Built through :func:`make_ring`.  Immutable after construction.
    """

    def __init__(self, ambient: PolyRing, relations: Sequence[Polynomial], gb, dim: int, name: str | None = None):
        self.ambient = ambient
        self.relations = tuple(relations)
        self.gb = gb
        self.dim = dim
        self.name = name

    @property
    def field(self) -> Field:
        return self.ambient.field

    @property
    def names(self) -> tuple:
        return self.ambient.names

    @property
    def weights(self) -> tuple:
        return self.ambient.weights

    @property
    def ngens(self) -> int:
        return self.ambient.ngens

    @property
    def gens(self) -> tuple:
        return self.ambient.gens

    def var(self, name: str) -> Polynomial:
        return self.ambient.var(name)

    def is_polynomial_ring(self) -> bool:
        return not self.gb.polys

    def is_monomial_quotient(self) -> bool:
        return all(g.is_monomial() for g in self.gb.polys)

    def is_squarefree_monomial_quotient(self) -> bool:
        """True for Stanley-Reisner rings, polynomial rings included."""
        return all(g.is_monomial() and max(g.leading_monomial()) <= 1 for g in self.gb.polys)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.ambient == other.ambient and self.gb == other.gb

    def __hash__(self):
        return hash((self.ambient, self.gb))

    def describe(self) -> str:
        field = repr(self.field)
        vars_ = ", ".join(self.names)
        w = "" if all(x == 1 for x in self.weights) else f" weights={list(self.weights)}"
        if not self.relations:
            return f"{field}[{vars_}]{w}"
        rel = ", ".join(str(g) for g in self.gb.polys)
        return f"{field}[{vars_}]/({rel}){w}"

    def __repr__(self):
        label = f"{self.name} = " if self.name else ""
        return f"Ring({label}{self.describe()})"


def make_ring(field: Field, names: Sequence[str], weights: Sequence[int] | None = None,
              relations: Sequence = (), name: str | None = None) -> Ring:
    """Build ``k[names]/(relations)``; every relation must be weighted-homogeneous.

    ``relations`` may hold :class:`Polynomial` objects of the ambient ring or
    callables taking the tuple of variables.
    """
    from .groebner import groebner_basis, krull_dimension

    ambient = PolyRing(field, names, weights)
    rels = []
    for r in relations:
        if callable(r) and not isinstance(r, Polynomial):
            r = r(*ambient.gens)
        if not isinstance(r, Polynomial):
            raise UsageError(f"relation {r!r} is not a polynomial")
        if r.ring != ambient:
            r = ambient.from_dict(r.terms) if r.ring.names == ambient.names else None
            if r is None:
                raise UsageError("relation lives in a different ring")
        if not r.is_homogeneous():
            raise UsageError(f"relation {r} is not homogeneous for weights {list(ambient.weights)}")
        if r:
            rels.append(r)
    gb = groebner_basis(rels, ambient.order) if rels else groebner_basis([], ambient.order, ring=ambient)
    dim = krull_dimension(gb.leading_monomials(), ambient.ngens)
    return Ring(ambient, rels, gb, dim, name=name)


def polynomial_ring(field: Field = QQ, names: Sequence[str] = ("x", "y"),
                    weights: Sequence[int] | None = None, name: str | None = None) -> Ring:
    return make_ring(field, names, weights, (), name=name)


def subsets_by_size(n: int):
    """Variable subsets of ``range(n)``, largest first."""
    for k in range(n, -1, -1):
        yield from combinations(range(n), k)
