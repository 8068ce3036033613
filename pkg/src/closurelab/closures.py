"""Closure-type operations on ideals of graded quotient rings.

``infty_ideal`` (iterated saturation along an ordered sequence), the limit
closure of a parameter ideal, integral closure of monomial ideals through the
Newton polyhedron (componentwise on Stanley-Reisner rings), and membership in
the integral closure through the multiplicity criterion of Rees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ClosureLabError, UnstabilizedError, UnsupportedError, UsageError
from .groebner import groebner_basis
from .idealops import (
    Ideal,
    _coerce_poly,
    _from_gb,
    colength,
    dimension,
    ideal,
    ideal_intersection,
    ideal_quotient,
    is_equidimensional_monomial,
    is_m_primary,
    is_subideal,
    maximal_ideal,
    require_system_of_parameters,
    ring_minimal_prime_supports,
    saturation,
    standard_basis,
    zero_ideal,
)
from .newton import newton_closure_monomials
from .polyring import Polynomial, Ring

LIM_WINDOW = 3
LIM_MAX_N = 20


@dataclass
class ClosureResult:
    closure: Ideal
    method: str
    diagnostics: dict = field(default_factory=dict)


# -- (x_1, ..., x_t)^inf --------------------------------------------------------

def infty_ideal(ring: Ring, seq: Sequence[Polynomial]) -> ClosureResult:
    """Left-to-right iterated saturation: ``(x_1..x_t)^inf = (x_t) + (x_1..x_{t-1})^inf : x_t^inf``.

    The answer depends on the order of ``seq``.  When ``len(seq) == dim R`` the
    result is checked to be m-primary or the unit ideal.
    """
    seq = [_coerce_poly(ring, f) for f in seq]
    if not seq:
        raise UsageError("infty_ideal needs a nonempty sequence")
    for f in seq:
        if f.is_zero():
            raise UsageError("sequence contains the zero element")
        if not f.is_homogeneous():
            raise UsageError(f"{f} is not homogeneous")
    current = zero_ideal(ring)
    exps = []
    for f in seq:
        sat, s = saturation(current, f)
        exps.append(s)
        current = sat + ideal(ring, f)
    diag = {"saturation_exponents": exps}
    if len(seq) == ring.dim:
        if current.is_unit():
            diag["shape"] = "unit"
        elif dimension(current) == 0:
            diag["shape"] = "m-primary"
        else:
            raise ClosureLabError(f"(seq)^inf = {current} is neither m-primary nor the unit ideal")
    return ClosureResult(current, "infty", diag)


# -- limit closure --------------------------------------------------------------

def limit_closure(ring: Ring, seq: Sequence[Polynomial], window: int = LIM_WINDOW,
                  max_n: int = LIM_MAX_N) -> ClosureResult:
    """Union of ``(x_1^{n+1}, ..., x_d^{n+1}) : (x_1...x_d)^n`` over ``n``.

    The chain is ascending; it is declared stable once ``window`` consecutive
    members coincide.  Reaching ``max_n`` first raises :class:`UnstabilizedError`
    carrying the partial chain.
    """
    if window < 2:
        raise UsageError("window must be at least 2")
    seq = require_system_of_parameters(ring, seq)
    chain: list = []
    lengths: list = []
    previous = None
    run = 0
    for n in range(max_n + 1):
        Jn = ideal(ring, [f ** (n + 1) for f in seq])
        for f in seq:
            for _ in range(n):
                Jn = ideal_quotient(Jn, f)
        if previous is not None and not is_subideal(previous, Jn):
            raise ClosureLabError(f"limit-closure chain is not ascending at n={n}")
        lengths.append(colength(Jn))
        run = run + 1 if previous is not None and previous == Jn else 1
        chain.append(str(Jn))
        previous = Jn
        if run >= window:
            return ClosureResult(Jn, "lim", {"stabilized_at": n - window + 1, "last_n": n,
                                            "chain_lengths": lengths, "window": window})
    raise UnstabilizedError(f"limit closure did not stabilise within max_n={max_n}",
                            {"chain_lengths": lengths, "chain": chain, "max_n": max_n, "window": window})


# -- integral closure of monomial ideals ---------------------------------------

def monomial_integral_closure(A: Ideal) -> ClosureResult:
    """Integral closure of a monomial ideal of a polynomial ring (Newton polyhedron)."""
    ring = A.ring
    if not ring.is_polynomial_ring():
        raise UnsupportedError("ring has relations: use stanley_reisner_closure")
    if not A.is_monomial():
        raise UnsupportedError("unsupported: generators are not monomials")
    if A.is_unit():
        return ClosureResult(A, "newton", {})
    monos = newton_closure_monomials(A.leading_monomials(), ring.ngens)
    P = ring.ambient
    C = _from_gb(ring, groebner_basis([P.monomial(m) for m in monos], ring=P))
    return ClosureResult(C, "newton", {"generators": [str(P.monomial(m)) for m in monos]})


def _check_stanley_reisner(A: Ideal):
    ring = A.ring
    if not ring.is_squarefree_monomial_quotient():
        raise UnsupportedError("unsupported: presenting ideal is not squarefree monomial")
    if not A.is_monomial():
        raise UnsupportedError("unsupported: generators are not monomials")


def stanley_reisner_closure(A: Ideal) -> ClosureResult:
    """Integral closure of a monomial ideal in ``k[x]/(squarefree monomials)``.

    Computed modulo every minimal prime (each component is a polynomial ring in
    the surviving variables) and pulled back; the closure is the intersection.
    """
    _check_stanley_reisner(A)
    ring = A.ring
    P = ring.ambient
    if A.is_unit():
        return ClosureResult(A, "stanley-reisner", {"components": {}})
    result = None
    comps = {}
    for support in ring_minimal_prime_supports(ring):
        keep = [i for i in range(ring.ngens) if i not in support]
        image = [tuple(m[i] for i in keep) for m in A.leading_monomials()
                 if all(m[i] == 0 for i in support)]
        closed = newton_closure_monomials(image, len(keep))
        gens = [P.gen(i) for i in support]
        for v in closed:
            e = [0] * ring.ngens
            for i, k in zip(keep, v):
                e[i] = k
            gens.append(P.monomial(e))
        label = "(" + ", ".join(ring.names[i] for i in support) + ")"
        sub = P.subring(keep)
        comps[label] = "(" + ", ".join(str(sub.monomial(v)) for v in closed) + ")" if closed else "(0)"
        pulled = ideal(ring, gens)
        result = pulled if result is None else ideal_intersection(result, pulled)
    return ClosureResult(result, "stanley-reisner", {"components": comps})


def integral_closure(A: Ideal) -> ClosureResult:
    """Dispatch to the Newton or the componentwise routine."""
    if A.ring.is_polynomial_ring():
        return monomial_integral_closure(A)
    return stanley_reisner_closure(A)


def closure_computable(A: Ideal) -> bool:
    return A.is_monomial() and A.ring.is_squarefree_monomial_quotient()


# -- membership through multiplicities ------------------------------------------

def equidimensionality_status(ring: Ring) -> str | None:
    """``"verified"``, ``"violated"`` or ``None`` when the engine cannot decide."""
    if ring.is_squarefree_monomial_quotient():
        return "verified" if is_equidimensional_monomial(ring) else "violated"
    return None


def rees_membership(f, A: Ideal, assume_equidim: bool = False, max_n: int | None = None,
                    window: int | None = None) -> bool:
    """``f`` in the integral closure of ``A``, decided by ``e(A) == e(A + (f))``.

    Valid in formally equidimensional rings: checked automatically for
    Stanley-Reisner rings, otherwise the caller vouches via ``assume_equidim``.
    """
    from .multiplicity import HS_MAX_N, HS_WINDOW, mult_hs

    ring = A.ring
    f = _coerce_poly(ring, f)
    if not f.is_homogeneous():
        raise UsageError(f"{f} is not homogeneous")
    status = equidimensionality_status(ring)
    if status == "violated":
        raise UnsupportedError("ring is not equidimensional: the multiplicity criterion does not apply")
    if status is None and not assume_equidim:
        raise UnsupportedError("cannot verify formal equidimensionality of this ring; "
                               "pass assume_equidim=True to assert it")
    if not is_m_primary(A):
        raise UsageError(f"{A} is not m-primary")
    if A.contains(f):
        return True
    if f.degree() == 0:
        return False
    max_n = max_n or HS_MAX_N
    window = window or HS_WINDOW
    e_small = mult_hs(A, max_n, window).value
    e_big = mult_hs(A + ideal(ring, f), max_n, window).value
    return e_small == e_big


def closure_membership(f, A: Ideal, assume_equidim: bool = False, max_n: int | None = None,
                       window: int | None = None) -> bool:
    """Membership in the integral closure of an m-primary ideal.

    On Stanley-Reisner rings this is tested modulo each minimal prime (every
    component is a polynomial ring, so the Newton polyhedron or the Rees
    criterion applies without extra hypotheses).  Elsewhere falls back to
    :func:`rees_membership`.
    """
    ring = A.ring
    f = _coerce_poly(ring, f)
    if A.contains(f):
        return True
    if not ring.is_squarefree_monomial_quotient():
        return rees_membership(f, A, assume_equidim, max_n, window)
    from .multiplicity import component_ring, project_ideal

    for support in ring_minimal_prime_supports(ring):
        sub, keep = component_ring(ring, support)
        Ap = project_ideal(A, sub, keep)
        fp = f.project(keep, sub.ambient)
        if fp.is_zero() or Ap.contains(fp):
            continue
        if Ap.is_monomial():
            C = monomial_integral_closure(Ap).closure
            if not C.contains(fp):
                return False
            continue
        if not rees_membership(fp, Ap, True, max_n, window):
            return False
    return True


@dataclass
class ClosedStatus:
    closed: bool
    method: str
    witness: Polynomial | None = None


def integral_closedness(A: Ideal, assume_equidim: bool = False, max_n: int | None = None,
                        window: int | None = None) -> ClosedStatus:
    """Decide whether ``A`` equals its integral closure, reporting the route taken."""
    ring = A.ring
    if A.is_unit():
        return ClosedStatus(True, "trivial")
    if not is_m_primary(A):
        raise UsageError(f"{A} is not m-primary")
    if A == maximal_ideal(ring):
        return ClosedStatus(True, "maximal ideal")
    if closure_computable(A):
        C = integral_closure(A)
        if C.closure == A:
            return ClosedStatus(True, C.method)
        witness = next(g for g in C.closure.gb.polys if not A.contains(g))
        return ClosedStatus(False, C.method, witness)
    sr = ring.is_squarefree_monomial_quotient()
    if not sr and equidimensionality_status(ring) is None and not assume_equidim:
        raise UnsupportedError("no closure routine for this input: ideal is not monomial over a "
                               "Stanley-Reisner ring, and equidimensionality is not asserted for the "
                               "multiplicity test")
    # probes standard monomials of degree <= top generator degree only
    top = max(g.degree() for g in A.gens) if A.gens else 0
    for m in standard_basis(A, top):
        if not any(m):
            continue
        g = ring.ambient.monomial(m)
        if closure_membership(g, A, assume_equidim, max_n, window):
            return ClosedStatus(False, "componentwise" if sr else "rees", g)
    return ClosedStatus(True, "componentwise" if sr else "rees")


def is_integrally_closed(A: Ideal, assume_equidim: bool = False) -> bool:
    return integral_closedness(A, assume_equidim).closed
