import pytest

from closurelab import (
    QQ,
    UnsupportedError,
    UsageError,
    check_chain,
    check_cm_via_lim,
    check_f_rational,
    check_inequality,
    check_regular,
    ideal,
    maximal_ideal,
    polynomial_ring,
)
from closurelab.report import ASSERTED, VERIFIED, VIOLATED


def test_inequality_fails_on_r2(R2):
    x, y, z = R2.gens
    rep = check_inequality(ideal(R2, x ** 3, y, z))
    assert rep.verdict == "fails"
    assert "not formally equidimensional" in rep.conclusion
    assert rep.quantities == {"e": 1, "colength": 3}
    assert rep.hypotheses["formally equidimensional"] == VIOLATED


def test_inequality_holds(P2, R3):
    x, y = P2.gens
    rep = check_inequality(ideal(P2, x ** 2, x * y, y ** 2))
    assert rep.verdict == "holds" and rep.quantities == {"e": 4, "colength": 3}
    rep = check_inequality(maximal_ideal(R3))
    assert rep.verdict == "holds" and rep.quantities == {"e": 2, "colength": 1}
    assert rep.hypotheses["formally equidimensional"] == VERIFIED


def test_inequality_rejects_non_closed(P2):
    x, y = P2.gens
    with pytest.raises(UsageError, match="not integrally closed"):
        check_inequality(ideal(P2, x ** 2, y ** 2))


def test_cm_via_lim(P2, R3, R5, R4):
    x, y = P2.gens
    rep = check_cm_via_lim(P2, [x, y])
    assert rep.verdict == "holds" and rep.conclusion == "Cohen-Macaulay"
    a, b, c, d = R3.gens
    rep = check_cm_via_lim(R3, [a + c, b + d])
    assert rep.verdict == "fails" and rep.conclusion == "not Cohen-Macaulay"
    assert rep.quantities["e"] == 2 and rep.quantities["colength_lim"] == 1
    u, v, w = R5.gens
    unflagged = check_cm_via_lim(R5, [v, w])
    assert unflagged.verdict == "inconclusive"
    rep = check_cm_via_lim(R5, [v, w], assume_unmixed=True)
    assert rep.verdict == "holds" and rep.quantities["e"] == rep.quantities["colength_lim"] == 2
    assert rep.hypotheses["unmixed"] == ASSERTED
    a, b, c, d = R4.gens
    rep = check_cm_via_lim(R4, [a, d])
    assert rep.verdict == "fails" and rep.quantities["e"] == 4 and rep.quantities["colength_lim"] == 3


def test_chain(P2, R2, R3, R4):
    x, y = P2.gens
    rep = check_chain(P2, [x ** 2, y ** 2])
    assert rep.verdict == "holds"
    assert rep.quantities["lim"] == "(x^2, y^2)"
    assert rep.quantities["closure"] == "(x^2, x*y, y^2)"
    u, v, w = R2.gens
    assert check_chain(R2, [u + v, u + w]).verdict in ("holds", "partial")
    a, b, c, d = R3.gens
    rep = check_chain(R3, [a + c, b + d])
    assert rep.verdict == "holds" and rep.quantities["closure"] == "m"
    assert any("does not by itself imply regularity" in n for n in rep.notes)
    a, b, c, d = R4.gens
    assert check_chain(R4, [a, d]).verdict == "partial"
    assert check_chain(R4, [a, d], assume_equidim=True).verdict == "holds"


def test_regular(P2, R2, R3, R4, R5):
    x, y = P2.gens
    rep = check_regular(P2, ideal(P2, x ** 2, y))
    assert rep.verdict == "holds" and rep.conclusion == "regular"
    assert rep.quantities == {"e": 2, "colength": 2}
    assert check_regular(P2).conclusion == "regular"
    for R in (R2, R3, R4, R5):
        assert check_regular(R).conclusion == "not regular"
    assert check_regular(R5).quantities == {"e": 2, "colength": 1}


def test_regular_on_r2_uses_equidimensionality(R2):
    x, y, z = R2.gens
    rep = check_regular(R2, ideal(R2, x ** 3, y, z), assume_unmixed=True)
    assert rep.conclusion == "not regular"
    assert rep.hypotheses["formally unmixed"] == VIOLATED


def test_equality_ideals_have_the_interior_form():
    # e(I) = colength(I) for integrally closed I happens for (x^n, y), not for other closed ideals
    P = polynomial_ring(QQ, "xy")
    x, y = P.gens
    for n in range(1, 5):
        rep = check_regular(P, ideal(P, x ** n, y))
        assert rep.quantities["e"] == rep.quantities["colength"] == n
    for A in (ideal(P, x ** 2, x * y, y ** 2), ideal(P, x ** 3, x * y, y ** 3)):
        rep = check_regular(P, A)
        assert rep.quantities["e"] > rep.quantities["colength"]
        assert rep.verdict == "inconclusive"


def test_f_rationality_unsupported(R5):
    with pytest.raises(UnsupportedError, match="tight closure"):
        check_f_rational(R5)


def test_report_serialises(R3):
    rep = check_regular(R3)
    d = rep.to_dict()
    assert d["verdict"] == "fails" and d["quantities"]["e"] == 2
    assert "not regular" in rep.summary()
