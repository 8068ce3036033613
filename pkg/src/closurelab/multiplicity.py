"""Hilbert-Samuel multiplicity, computed two independent ways.

* :func:`mult_param` -- for a system of parameters, the colength of the
  iterated-saturation ideal built by :func:`closurelab.closures.infty_ideal`.
* :func:`mult_hs` -- the ``d``-th finite difference of ``n -> length(R/A^n)``,
  read off once it stops moving.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .closures import infty_ideal
from .errors import ReductionNotFound, UnstabilizedError, UnsupportedError, UsageError
from .idealops import (
    Ideal,
    colength,
    ideal,
    is_m_primary,
    is_system_of_parameters,
    require_system_of_parameters,
    ring_minimal_prime_supports,
)
from .polyring import Polynomial, Ring, polynomial_ring
from .report import FAILS, HOLDS, VERIFIED, Report

HS_WINDOW = 3
HS_MAX_N = 12


@dataclass
class MultiplicityResult:
    value: int
    method: str
    diagnostics: dict = field(default_factory=dict)

    def __int__(self):
        return self.value


def mult_param(ring: Ring, seq: Sequence[Polynomial]) -> MultiplicityResult:
    """``e((x_1..x_d))`` as the colength of ``(x_1..x_d)^inf``; exact, no limits."""
    seq = require_system_of_parameters(ring, seq)
    inf = infty_ideal(ring, seq)
    return MultiplicityResult(colength(inf.closure), "infty-colength",
                              {"infty_ideal": str(inf.closure),
                               "saturation_exponents": inf.diagnostics["saturation_exponents"]})


def hilbert_samuel_table(A: Ideal, upto: int) -> list:
    """``[length(R/A^0), ..., length(R/A^upto)]``."""
    table = [0]
    power = A
    for n in range(1, upto + 1):
        if n > 1:
            power = power * A
        table.append(colength(power))
    return table


def _difference(table: list, n: int, d: int) -> int:
    return sum((-1) ** k * comb(d, k) * table[n - k] for k in range(d + 1))


def mult_hs(A: Ideal, max_n: int = HS_MAX_N, window: int = HS_WINDOW) -> MultiplicityResult:
    """Multiplicity from the stabilised ``d``-th difference of the Hilbert-Samuel function.

    Raises :class:`UnstabilizedError` (with the table) if ``window`` consecutive
    differences never agree for ``n <= max_n``.
    """
    if window < 1:
        raise UsageError("window must be positive")
    if not is_m_primary(A):
        raise UsageError(f"{A} is not m-primary")
    d = A.ring.dim
    table = [0]
    diffs: list = []
    power = None
    for n in range(1, max_n + 1):
        power = A if n == 1 else power * A
        table.append(colength(power))
        if n >= d:
            diffs.append(_difference(table, n, d))
            tail = diffs[-window:]
            if len(tail) == window and len(set(tail)) == 1 and tail[0] > 0:
                return MultiplicityResult(tail[0], "hs-differences",
                                          {"table": table, "differences": diffs, "dimension": d})
    raise UnstabilizedError(
        f"finite differences of length(R/A^n) did not stabilise by n={max_n}",
        {"table": table, "differences": diffs, "dimension": d})


# -- additivity over components ---------------------------------------------

def component_ring(ring: Ring, prime_support: Sequence[int]) -> tuple:
    """``(R/P, surviving variable indices)`` for a prime generated by variables."""
    keep = [i for i in range(ring.ngens) if i not in set(prime_support)]
    sub = polynomial_ring(ring.field, [ring.names[i] for i in keep], [ring.weights[i] for i in keep])
    return sub, keep


def project_ideal(A: Ideal, sub: Ring, keep: Sequence[int]) -> Ideal:
    """Image of ``A`` in the component ring obtained by killing variables outside ``keep``."""
    gens = [g.project(keep, sub.ambient) for g in A.gb.polys]
    return ideal(sub, [g for g in gens if g])


def additivity_check(A: Ideal, max_n: int = HS_MAX_N, window: int = HS_WINDOW) -> Report:
    """``e(A, R) = sum_P e(A R/P)`` over top-dimensional minimal primes of a reduced monomial quotient."""
    ring = A.ring
    if not ring.is_squarefree_monomial_quotient():
        raise UnsupportedError("additivity check needs a reduced monomial quotient (Stanley-Reisner ring)")
    if not is_m_primary(A):
        raise UnsupportedError(f"{A} is not m-primary")
    total = mult_hs(A, max_n, window).value
    parts = {}
    for support in ring_minimal_prime_supports(ring):
        if ring.ngens - len(support) != ring.dim:
            continue
        sub, keep = component_ring(ring, support)
        label = "(" + ", ".join(ring.names[i] for i in support) + ")"
        parts[label] = mult_hs(project_ideal(A, sub, keep), max_n, window).value
    rhs = sum(parts.values())
    return Report(
        check="additivity",
        ring=ring.describe(),
        input=str(A),
        quantities={"e": total, "sum_over_components": rhs, "components": parts},
        verdict=HOLDS if total == rhs else FAILS,
        conclusion="e(A) equals the sum over top-dimensional components" if total == rhs
        else "additivity mismatch",
        hypotheses={"reduced monomial quotient": VERIFIED},
    )


# -- minimal reductions -------------------------------------------------------

@dataclass
class Reduction:
    """A verified reduction; iterates like its sequence of elements."""

    seq: list
    seed: object
    coefficients: list
    attempts: int
    multiplicity: int

    def __iter__(self):
        return iter(self.seq)

    def __len__(self):
        return len(self.seq)

    def __getitem__(self, i):
        return self.seq[i]


def random_reduction(A: Ideal, seed=0, max_tries: int = 10,
                     max_n: int = HS_MAX_N, window: int = HS_WINDOW) -> Reduction:
    """``d`` random combinations of ``A``'s generators, verified to be a reduction.

    ``seed`` is an int or a ``random.Random`` (shared generators are advanced in
    place).  Verification: the sequence is a system of parameters and its
    multiplicity by :func:`mult_param` equals :func:`mult_hs` of ``A``.
    """
    ring = A.ring
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    gens = [g for g in A.gens if not ring.gb.contains(g)]
    if not gens:
        raise UsageError("the zero ideal has no reduction")
    if len({g.degree() for g in gens}) != 1:
        raise UsageError("random_reduction needs an ideal generated in a single degree")
    if not is_m_primary(A):
        raise UsageError(f"{A} is not m-primary")
    target = mult_hs(A, max_n, window).value
    K = ring.field
    tried = []
    for attempt in range(1, max_tries + 1):
        coeffs = [[K.random_nonzero(rng) for _ in gens] for _ in range(ring.dim)]
        seq = []
        for row in coeffs:
            f = ring.ambient.zero()
            for c, g in zip(row, gens):
                f = f + g * c
            seq.append(f)
        shown = [[K.to_json(c) for c in row] for row in coeffs]
        if not is_system_of_parameters(ring, seq):
            tried.append({"coefficients": shown, "reason": "not a system of parameters"})
            continue
        e = mult_param(ring, seq).value
        if e == target:
            return Reduction(seq, seed if not isinstance(seed, random.Random) else "shared-rng",
                             shown, attempt, e)
        tried.append({"coefficients": shown, "reason": f"mult_param={e} != mult_hs={target}"})
    raise ReductionNotFound(f"no verified reduction after {max_tries} draws",
                            {"target": target, "attempts": tried})
