"""Equality tests between multiplicity and colength.

Each detector returns a :class:`~closurelab.report.Report`.  Hypotheses that
the engine can check (equidimensionality of Stanley-Reisner rings) are checked;
the rest are caller assertions and are echoed in the report's ledger.
"""

from __future__ import annotations

from typing import Sequence

from .closures import (
    closure_computable,
    closure_membership,
    equidimensionality_status,
    integral_closedness,
    integral_closure,
    limit_closure,
    LIM_MAX_N,
    LIM_WINDOW,
    rees_membership,
)
from .errors import ClosureLabError, UnsupportedError, UsageError
from .idealops import Ideal, colength, ideal, maximal_ideal, require_system_of_parameters
from .multiplicity import HS_MAX_N, HS_WINDOW, mult_hs, mult_param
from .polyring import Polynomial, Ring
from .report import (
    ASSERTED,
    AUTOMATIC,
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    PARTIAL,
    UNVERIFIED,
    VERIFIED,
    VIOLATED,
    Report,
)


def _hypothesis(ring: Ring, asserted: bool) -> str:
    status = equidimensionality_status(ring)
    if status == "verified":
        return VERIFIED
    if status == "violated":
        return VIOLATED
    return ASSERTED if asserted else UNVERIFIED


def _seq_text(seq) -> str:
    return "(" + ", ".join(str(f) for f in seq) + ")"


def check_inequality(A: Ideal, assume_formally_equidim: bool = False, assume_closed: bool = False,
                     max_n: int = HS_MAX_N, window: int = HS_WINDOW) -> Report:
    """For an integrally closed m-primary ``A``: does ``e(A) >= length(R/A)``?

    In a formally equidimensional ring this always holds, so a failure
    witnesses that the ring is not formally equidimensional.
    """
    ring = A.ring
    hyp = {"formally equidimensional": _hypothesis(ring, assume_formally_equidim)}
    if assume_closed:
        hyp["integrally closed"] = ASSERTED
    else:
        status = integral_closedness(A, assume_formally_equidim, max_n, window)
        if not status.closed:
            raise UsageError(f"{A} is not integrally closed (witness {status.witness}); "
                             "see is_integrally_closed")
        hyp["integrally closed"] = f"{VERIFIED} ({status.method})"
    e = mult_hs(A, max_n, window).value
    length = colength(A)
    report = Report("inequality", ring.describe(), str(A), {"e": e, "colength": length},
                    hypotheses=hyp)
    if e >= length:
        report.verdict = HOLDS
        report.conclusion = "e(I) >= length(R/I)"
    else:
        report.verdict = FAILS
        report.conclusion = "hypothesis violation witnessed: R is not formally equidimensional"
        if hyp["formally equidimensional"] == ASSERTED:
            report.notes.append("the caller's equidimensionality assertion is contradicted")
    return report


def check_cm_via_lim(ring: Ring, seq: Sequence[Polynomial], assume_unmixed: bool = False,
                     window: int = LIM_WINDOW, max_n: int = LIM_MAX_N,
                     hs_max_n: int = HS_MAX_N, hs_window: int = HS_WINDOW) -> Report:
    """Compare ``e(J)`` with ``length(R/J^lim)`` for the parameter ideal ``J = (seq)``.

    Strict inequality means R is not Cohen-Macaulay.  Equality means it is,
    provided R is unmixed.
    """
    seq = require_system_of_parameters(ring, seq)
    J = ideal(ring, seq)
    e = mult_param(ring, seq).value
    e_hs = mult_hs(J, hs_max_n, hs_window).value
    if e != e_hs:
        raise ClosureLabError(f"multiplicity routes disagree: infty-colength {e}, hs-differences {e_hs}")
    lim = limit_closure(ring, seq, window, max_n)
    l_lim = colength(lim.closure)
    l_j = colength(J)
    if l_lim > e:
        raise ClosureLabError(f"e(J)={e} < length(R/J^lim)={l_lim}: invariant violated")
    hyp = {"homomorphic image of a Cohen-Macaulay ring": AUTOMATIC,
           "unmixed": _hypothesis(ring, assume_unmixed)}
    report = Report("cm_via_lim", ring.describe(), _seq_text(seq),
                    {"e": e, "colength_lim": l_lim, "colength_J": l_j, "colength_infty": e,
                     "lim": str(lim.closure), "lim_stabilized_at": lim.diagnostics["stabilized_at"]},
                    hypotheses=hyp)
    if e > l_lim:
        report.verdict = FAILS
        report.conclusion = "not Cohen-Macaulay"
    elif hyp["unmixed"] in (VERIFIED, ASSERTED):
        report.verdict = HOLDS
        report.conclusion = "Cohen-Macaulay"
    else:
        report.verdict = INCONCLUSIVE
        report.conclusion = "equality holds but unmixedness is " + (
            "violated" if hyp["unmixed"] == VIOLATED else "not established")
    return report


def check_chain(ring: Ring, seq: Sequence[Polynomial], assume_equidim: bool = False,
                window: int = LIM_WINDOW, max_n: int = LIM_MAX_N,
                hs_max_n: int = HS_MAX_N, hs_window: int = HS_WINDOW) -> Report:
    """Verify ``J <= J^lim <= integral closure of J`` for ``J = (seq)``, element by element."""
    seq = require_system_of_parameters(ring, seq)
    J = ideal(ring, seq)
    lim = limit_closure(ring, seq, window, max_n).closure
    hyp = {"formally equidimensional": _hypothesis(ring, assume_equidim)}
    report = Report("chain", ring.describe(), _seq_text(seq),
                    {"colength_J": colength(J), "colength_lim": colength(lim), "lim": str(lim)},
                    hypotheses=hyp)
    bad = [g for g in J.gens if not lim.contains(g)]
    if bad:
        report.verdict = FAILS
        report.conclusion = "J is not contained in J^lim"
        report.witnesses.extend(bad)
        return report
    lim_gens = lim.minimal_generators()
    if closure_computable(J):
        C = integral_closure(J).closure
        report.quantities["closure"] = str(C)
        report.quantities["colength_closure"] = colength(C)
        outside = [g for g in lim_gens if not C.contains(g)]
        route = "newton polyhedron" if ring.is_polynomial_ring() else "componentwise newton polyhedra"
    elif ring.is_squarefree_monomial_quotient():
        outside = [g for g in lim_gens if not closure_membership(g, J, False, hs_max_n, hs_window)]
        route = "componentwise multiplicity criterion"
    elif hyp["formally equidimensional"] == ASSERTED:
        outside = [g for g in lim_gens if not rees_membership(g, J, True, hs_max_n, hs_window)]
        route = "multiplicity criterion (equidimensionality asserted)"
    else:
        report.verdict = PARTIAL
        report.conclusion = "J <= J^lim verified; closure link skipped (no applicable routine)"
        return report
    report.quantities["closure_route"] = route
    if outside:
        report.verdict = FAILS
        report.conclusion = "J^lim is not contained in the integral closure of J"
        report.witnesses.extend(outside)
        if hyp["formally equidimensional"] == VIOLATED:
            report.notes.append("expected possibility: the ring is not equidimensional")
        return report
    report.verdict = HOLDS
    report.conclusion = "J <= J^lim <= integral closure of J"
    m = maximal_ideal(ring)
    if lim == m:
        # closure of a proper ideal stays inside m
        report.quantities["closure"] = "m"
        report.notes.append("J^lim = m = integral closure of J; this coincidence does not by itself "
                            "imply regularity (compare e(m) via check_regular)")
    return report


def check_regular(ring: Ring, A: Ideal | None = None, assume_unmixed: bool = False,
                  max_n: int = HS_MAX_N, window: int = HS_WINDOW) -> Report:
    """Equality ``e(A) = length(R/A)`` for an integrally closed m-primary ``A`` forces regularity.

    With the default ``A = m`` the test is two-sided: ``e(m) >= 2`` rules
    regularity out.
    """
    m = maximal_ideal(ring)
    A = m if A is None else A
    if A.ring != ring:
        raise UsageError("ideal belongs to a different ring")
    unmixed = _hypothesis(ring, assume_unmixed)
    hyp = {"formally unmixed": unmixed}
    status = integral_closedness(A, assume_unmixed, max_n, window)
    if not status.closed:
        raise UsageError(f"{A} is not integrally closed (witness {status.witness})")
    hyp["integrally closed"] = f"{VERIFIED} ({status.method})"
    e = mult_hs(A, max_n, window).value
    length = colength(A)
    report = Report("regular", ring.describe(), "m" if A == m else str(A),
                    {"e": e, "colength": length}, hypotheses=hyp)
    if unmixed == VIOLATED:
        report.verdict = FAILS
        report.conclusion = "not regular"
        report.notes.append("R is not equidimensional, hence not a domain, hence not regular")
    elif e == length:
        if unmixed in (VERIFIED, ASSERTED):
            report.verdict = HOLDS
            report.conclusion = "regular"
        else:
            report.verdict = INCONCLUSIVE
            report.conclusion = "equality holds but formal unmixedness is not established"
    elif A == m:
        report.verdict = FAILS
        report.conclusion = "not regular"
        report.notes.append(f"e(m) = {e} >= 2")
    else:
        report.verdict = INCONCLUSIVE
        report.conclusion = "inconclusive for this ideal"
    return report


def check_f_rational(*args, **kwargs) -> Report:
    """Reserved slot: tight closure is not computable here."""
    raise UnsupportedError("unsupported: tight closure")
