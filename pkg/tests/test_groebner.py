import pytest

from closurelab import (
    NotPrimaryError,
    QQ,
    UsageError,
    groebner_basis,
    is_groebner,
    normal_form,
    polynomial_ring,
    standard_monomials,
    toric_kernel,
)
from closurelab.polyring import PolyRing
from oracles import substitute_monomial_map


def _P(names):
    return PolyRing(QQ, names)


def test_single_monomial():
    P = _P("xy")
    x, _ = P.gens
    assert groebner_basis([x]).polys == (x,)


def test_monomials_already_a_basis():
    P = _P("xyz")
    x, y, z = P.gens
    G = groebner_basis([x * y, x * z])
    assert set(G.polys) == {x * y, x * z}


def test_normal_form_examples():
    P = _P("xyz")
    x, y, z = P.gens
    G = groebner_basis([x * y, x * z])
    assert normal_form(x * y + y ** 2, G) == y ** 2
    for g in G.polys:
        assert normal_form(g, G).is_zero()


def test_buchberger_output_is_groebner():
    P = _P("xyz")
    x, y, z = P.gens
    G = groebner_basis([x ** 2 - y * z, x * y - z ** 2, y ** 3 - x * z ** 2])
    assert is_groebner(G)
    # reduced: leading coefficients are 1 and no leading monomial divides another
    lms = G.leading_monomials()
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            if i != j:
                assert not all(p <= q for p, q in zip(a, b))


def test_r4_toric_basis_contains_ad_minus_bc():
    vectors = [(4, 0), (3, 1), (1, 3), (0, 4)]
    kernel = toric_kernel(QQ, vectors, "abcd")
    P = kernel[0].ring
    a, b, c, d = P.gens
    G = groebner_basis(kernel)
    assert G.contains(a * d - b * c)
    for g in G.polys:
        assert substitute_monomial_map(g, vectors) == {}


def test_standard_monomials_examples():
    P = _P("xy")
    x, y = P.gens
    assert standard_monomials(groebner_basis([x, y])) == [(0, 0)]
    Q = _P("xyz")
    x, y, z = Q.gens
    G = groebner_basis([x ** 3, y, z, x * y, x * z])
    assert sorted(standard_monomials(G)) == [(0, 0, 0), (1, 0, 0), (2, 0, 0)]


def test_standard_monomials_infinite_raises():
    P = _P("xy")
    x, _ = P.gens
    with pytest.raises(NotPrimaryError) as info:
        standard_monomials(groebner_basis([x]))
    assert info.value.variable == "y"
    assert len(standard_monomials(groebner_basis([x]), bound=5)) == 6


def test_standard_monomials_ring_mismatch():
    P = _P("xy")
    x, y = P.gens
    G = groebner_basis([x, y])
    with pytest.raises(UsageError):
        standard_monomials(G, 5, ring=polynomial_ring(QQ, "x").ambient)


def test_unit_ideal_has_no_standard_monomials():
    P = _P("xy")
    assert standard_monomials(groebner_basis([P.one()])) == []
