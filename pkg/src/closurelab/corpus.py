"""A fixed corpus of graded rings with known structure, for property checks.

Each entry records what is known independently of the engine (domain,
Cohen-Macaulay, regular) so that detector verdicts can be compared with it.
Toric rings and the quadric cone are domains, hence equidimensional; the
corpus asserts that on their behalf.  Stanley-Reisner rings need no
assertion because the engine checks them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .closures import integral_closure
from .coeffs import QQ, Field
from .idealops import ideal, maximal_ideal, toric_ring
from .polyring import Ring, make_ring, polynomial_ring


@dataclass
class CorpusRing:
    name: str
    ring: Ring
    # equidimensionality asserted for the multiplicity criterion (domains the engine cannot check)
    assert_equidim: bool
    regular: bool
    cohen_macaulay: Optional[bool]
    # formally equidimensional (the rings for the e >= colength property)
    equidimensional: bool
    sops: list = field(default_factory=list)
    closed_ideals: list = field(default_factory=list)  # (label, Ideal)


def _poly(R: Ring, text: str):
    """Evaluate a polynomial written with ``*``, ``+``, ``-`` and ``^``."""
    from .dsl import parse_expression
    from .runner import Evaluator, RunConfig

    return Evaluator(RunConfig()).eval(parse_expression(text), R)


def _seq(R: Ring, *texts) -> list:
    return [_poly(R, t) for t in texts]


def _monomial_closures(R: Ring, gens_list) -> list:
    out = []
    for gens in gens_list:
        A = integral_closure(ideal(R, _seq(R, *gens))).closure
        out.append((f"closure of ({', '.join(gens)})", A))
    return out


def _powers_of_m(R: Ring, upto: int) -> list:
    m = maximal_ideal(R)
    out = [("m", m)]
    power = m
    for n in range(2, upto + 1):
        power = power * m
        out.append((f"m^{n}", power))
    return out


def build_corpus(K: Field = QQ, m_power: int = 2) -> list:
    """The corpus over ``K``.  ``m_power`` bounds the powers of m used as closed ideals."""
    rings: list = []

    P1 = polynomial_ring(K, ["x"], name="k[x]")
    rings.append(CorpusRing("k[x]", P1, False, True, True, True,
                            sops=[_seq(P1, "x")],
                            closed_ideals=[(f"(x^{n})", ideal(P1, _poly(P1, f"x^{n}"))) for n in (1, 2, 3)]))

    P2 = polynomial_ring(K, ["x", "y"], name="k[x,y]")
    rings.append(CorpusRing("k[x,y]", P2, False, True, True, True,
                            sops=[_seq(P2, "x", "y"), _seq(P2, "x^2", "y^3"), _seq(P2, "x + y", "x - y"),
                                  _seq(P2, "x^2", "x*y + y^2")],
                            closed_ideals=_monomial_closures(P2, [
                                ("x^2", "y"), ("x^2", "y^2"), ("x^3", "y^2"), ("x^4", "y"),
                                ("x^3", "x*y", "y^3"), ("x^4", "x*y^2", "y^3"), ("x^5", "y^3"),
                                ("x^2", "x*y", "y^2"), ("x^4", "x^2*y", "y^2"), ("x^6", "y^4")])))

    P3 = polynomial_ring(K, ["x", "y", "z"], name="k[x,y,z]")
    rings.append(CorpusRing("k[x,y,z]", P3, False, True, True, True,
                            sops=[_seq(P3, "x", "y", "z"), _seq(P3, "x^2", "y^2", "z")],
                            closed_ideals=_monomial_closures(P3, [
                                ("x", "y", "z"), ("x^2", "y", "z"), ("x^2", "y^2", "z^2"),
                                ("x^2", "y^3", "z"), ("x*y", "x^2", "y^2", "z^2"), ("x^3", "y^3", "z^3", "x*y*z")])))

    R4 = toric_ring(K, [[4, 0], [3, 1], [1, 3], [0, 4]], ["a", "b", "c", "d"], name="R4")
    rings.append(CorpusRing("R4", R4, True, False, False, True,
                            sops=[_seq(R4, "a", "d"), _seq(R4, "d", "a")],
                            closed_ideals=_powers_of_m(R4, m_power)))

    R5 = make_ring(K, ["x", "y", "z"], relations=[lambda x, y, z: x ** 2 - y * z], name="R5")
    rings.append(CorpusRing("R5", R5, True, False, True, True,
                            sops=[_seq(R5, "y", "z")],
                            closed_ideals=_powers_of_m(R5, max(m_power, 3))))

    V2 = toric_ring(K, [[2, 0], [1, 1], [0, 2]], ["u", "v", "w"], name="V2")
    rings.append(CorpusRing("V2", V2, True, False, True, True,
                            sops=[_seq(V2, "u", "w")],
                            closed_ideals=_powers_of_m(V2, max(m_power, 3))))

    V3 = toric_ring(K, [[3, 0], [2, 1], [1, 2], [0, 3]], ["a", "b", "c", "d"], name="V3")
    rings.append(CorpusRing("V3", V3, True, False, True, True,
                            sops=[_seq(V3, "a", "d")],
                            closed_ideals=_powers_of_m(V3, m_power)))

    S = toric_ring(K, [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]], ["a", "b", "c", "d"],
                   name="Segre")
    rings.append(CorpusRing("Segre", S, True, False, True, True,
                            sops=[_seq(S, "a", "d", "b + c")],
                            closed_ideals=_powers_of_m(S, 1)))

    R3 = make_ring(K, ["a", "b", "c", "d"],
                   relations=[lambda a, b, c, d: a * c, lambda a, b, c, d: a * d,
                              lambda a, b, c, d: b * c, lambda a, b, c, d: b * d], name="R3")
    rings.append(CorpusRing("R3", R3, False, False, False, True,
                            sops=[_seq(R3, "a + c", "b + d")],
                            closed_ideals=_powers_of_m(R3, m_power) + _monomial_closures(R3, [
                                ("a^2", "b", "c", "d"), ("a", "b", "c^2", "d^2"), ("a^2", "b^2", "c", "d")])))

    N = make_ring(K, ["x", "y"], relations=[lambda x, y: x * y], name="k[x,y]/(xy)")
    rings.append(CorpusRing("k[x,y]/(xy)", N, False, False, True, True,
                            sops=[_seq(N, "x + y")],
                            closed_ideals=_monomial_closures(N, [("x", "y"), ("x^2", "y"), ("x^3", "y^2")])))

    C = make_ring(K, ["x", "y", "z"], relations=[lambda x, y, z: x * y * z], name="k[x,y,z]/(xyz)")
    rings.append(CorpusRing("k[x,y,z]/(xyz)", C, False, False, True, True,
                            sops=[_seq(C, "x + y", "y + z")],
                            closed_ideals=_monomial_closures(C, [("x", "y", "z"), ("x^2", "y", "z"),
                                                                 ("x^2", "y^2", "z^2")])))

    R2 = make_ring(K, ["x", "y", "z"], relations=[lambda x, y, z: x * y, lambda x, y, z: x * z], name="R2")
    rings.append(CorpusRing("R2", R2, False, False, False, False,
                            sops=[_seq(R2, "x + y", "x + z")],
                            closed_ideals=[(f"(x^{n}, y, z)", ideal(R2, _seq(R2, f"x^{n}", "y", "z")))
                                           for n in range(1, 4)]))
    return rings


def by_name(corpus: list) -> dict:
    return {entry.name: entry for entry in corpus}


@dataclass
class PropertyCheck:
    ring: str
    prop: str
    subject: str
    ok: bool
    detail: dict = field(default_factory=dict)


def _cm_consistent(verdict: str, truth: Optional[bool]) -> bool:
    if verdict == "holds":
        return truth is not False
    if verdict == "fails":
        return truth is not True
    # inconclusive contradicts nothing
    return True


def property_suite(corpus: list, max_n: int | None = None, window: int | None = None,
                   on_check: Callable[[PropertyCheck], None] | None = None) -> list:
    """Run the corpus properties; returns one :class:`PropertyCheck` per (ring, property, subject)."""
    from .closures import LIM_MAX_N, LIM_WINDOW, integral_closedness, limit_closure
    from .detectors import check_chain, check_cm_via_lim, check_inequality, check_regular
    from .idealops import colength, is_subideal
    from .multiplicity import HS_MAX_N, HS_WINDOW, mult_hs, mult_param

    lim_max = max_n or LIM_MAX_N
    hs_max = max_n or HS_MAX_N
    lim_window = window or LIM_WINDOW
    hs_window = window or HS_WINDOW
    checks: list = []

    def record(entry, prop, subject, ok, **detail):
        c = PropertyCheck(entry.name, prop, subject, bool(ok), detail)
        checks.append(c)
        if on_check:
            on_check(c)

    for entry in corpus:
        R = entry.ring
        if entry.equidimensional:
            for label, A in entry.closed_ideals:
                status = integral_closedness(A, entry.assert_equidim, hs_max, hs_window)
                if not status.closed:
                    record(entry, "integrally closed", label, False, witness=str(status.witness))
                    continue
                rep = check_inequality(A, entry.assert_equidim, True, hs_max, hs_window)
                record(entry, "e >= colength", label, rep.verdict == "holds",
                       e=rep.quantities["e"], colength=rep.quantities["colength"], closed_by=status.method)
        for seq in entry.sops:
            subject = "(" + ", ".join(str(f) for f in seq) + ")"
            J = ideal(R, seq)
            lim = limit_closure(R, seq, lim_window, lim_max).closure
            e_param = mult_param(R, seq).value
            e_hs = mult_hs(J, hs_max, hs_window).value
            l_lim = colength(lim)
            record(entry, "J <= J^lim", subject, is_subideal(J, lim))
            record(entry, "e routes agree", subject, e_param == e_hs, mult_param=e_param, mult_hs=e_hs)
            record(entry, "colength(J^lim) <= e", subject, l_lim <= e_param, colength_lim=l_lim, e=e_param)
            chain = check_chain(R, seq, entry.assert_equidim, lim_window, lim_max, hs_max, hs_window)
            record(entry, "J^lim <= closure of J", subject, chain.verdict in ("holds", "partial"),
                   verdict=chain.verdict, route=chain.quantities.get("closure_route"))
            cm = check_cm_via_lim(R, seq, entry.assert_equidim, lim_window, lim_max, hs_max, hs_window)
            record(entry, "CM verdict", subject, _cm_consistent(cm.verdict, entry.cohen_macaulay),
                   verdict=cm.verdict, conclusion=cm.conclusion, truth=entry.cohen_macaulay)
        reg = check_regular(R, None, entry.assert_equidim, hs_max, hs_window)
        expected = "holds" if entry.regular else "fails"
        record(entry, "regularity verdict", "m", reg.verdict == expected,
               verdict=reg.verdict, e=reg.quantities["e"], truth=entry.regular)
    return checks
