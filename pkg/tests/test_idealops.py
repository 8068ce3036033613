import pytest
from hypothesis import given, settings, strategies as st

from closurelab import (
    NotPrimaryError,
    QQ,
    UsageError,
    colength,
    dimension,
    ideal,
    ideal_intersection,
    ideal_power,
    ideal_quotient,
    is_subideal,
    maximal_ideal,
    minimal_primes_monomial,
    polynomial_ring,
    saturation,
    toric_kernel,
    toric_ring,
    unit_ideal,
    zero_ideal,
)
from closurelab.idealops import ideal_colon_ideal, is_system_of_parameters
from conftest import R4_VECTORS
from oracles import in_semigroup_ideal, semigroup_colength, substitute_monomial_map


def test_sum_product_power(P2):
    x, y = P2.gens
    assert ideal(P2, x) + ideal(P2, y) == maximal_ideal(P2)
    assert ideal_power(maximal_ideal(P2), 2) == ideal(P2, x ** 2, x * y, y ** 2)
    zeroth = ideal_power(ideal(P2, x), 0)
    assert zeroth.is_unit() and colength(zeroth) == 0


def test_nonmonomial_power_matches_repeated_product(P2):
    x, y = P2.gens
    A = ideal(P2, x ** 2 + y ** 2, x * y)
    assert ideal_power(A, 3) == A * A * A


def test_annihilator_in_r2(R2):
    x, y, z = R2.gens
    assert ideal_quotient(zero_ideal(R2), x) == ideal(R2, y, z)


def test_simple_quotient(P2):
    x, _ = P2.gens
    assert ideal_quotient(ideal(P2, x ** 2), x) == ideal(P2, x)


def test_quotient_by_zero_rejected(P2):
    x, _ = P2.gens
    with pytest.raises(UsageError):
        ideal_quotient(ideal(P2, x), P2.ambient.zero())


def test_r4_quotient_picks_up_b_squared(R4):
    a, b, c, d = R4.gens
    assert (ideal_quotient(ideal(R4, a), d)).contains(b ** 2)


def test_colon_ideal(P2):
    x, y = P2.gens
    A = ideal(P2, x ** 2, x * y)
    assert ideal_colon_ideal(A, ideal(P2, x, y)) == ideal(P2, x)


def test_saturations(R2, P2):
    x, y, z = R2.gens
    sat, s = saturation(zero_ideal(R2), x)
    assert sat == ideal(R2, y, z) and s == 1
    u, v = P2.gens
    sat, s = saturation(ideal(P2, u ** 2 * v), v)
    assert sat == ideal(P2, u ** 2) and s == 1
    sat, s = saturation(zero_ideal(P2), u)
    assert sat.is_zero() and s == 0


def test_componentwise_annihilator_oracle(R2):
    # R2 sits inside k[y,z] x k[x]; x kills exactly the first factor's maximal ideal
    x, y, z = R2.gens
    ann = ideal_quotient(zero_ideal(R2), x)
    for f in (y, z, y * z, y ** 3):
        assert ann.contains(f)
    assert not ann.contains(x)
    assert ideal_quotient(zero_ideal(R2), y + z) == ideal(R2, x)


def test_intersections():
    P = polynomial_ring(QQ, "abcd")
    a, b, c, d = P.gens
    I = ideal_intersection(ideal(P, a, b), ideal(P, c, d))
    assert I == ideal(P, a * c, a * d, b * c, b * d)
    Q = polynomial_ring(QQ, "xy")
    x, y = Q.gens
    assert ideal_intersection(ideal(Q, x), ideal(Q, x)) == ideal(Q, x)
    assert ideal_intersection(ideal(Q, x), ideal(Q, y)) == ideal(Q, x * y)


def test_nonmonomial_intersection(P2):
    x, y = P2.gens
    A, B = ideal(P2, x + y), ideal(P2, x - y)
    I = ideal_intersection(A, B)
    assert I == ideal(P2, x ** 2 - y ** 2)
    assert is_subideal(I, A) and is_subideal(I, B)


def test_membership(P2, R4):
    x, y = P2.gens
    A = ideal(P2, x ** 2, y ** 2)
    assert (x ** 2 * y ** 2) in A
    assert (x * y) not in A
    a, b, c, d = R4.gens
    assert not ideal(R4, a, b ** 2, d).contains(c ** 2)
    # semigroup oracle: (2,6) is not in (4,0)+S, (6,2)+S or (0,4)+S
    assert not in_semigroup_ideal((2, 6), R4_VECTORS, [(4, 0), (6, 2), (0, 4)])


def test_dimensions(P2):
    P3 = polynomial_ring(QQ, "xyz")
    x, y, z = P3.gens
    assert dimension(ideal(P3, x * y, x * z)) == 2
    P4 = polynomial_ring(QQ, "abcd")
    a, b, c, d = P4.gens
    assert dimension(ideal(P4, a * c, a * d, b * c, b * d)) == 2
    assert dimension(maximal_ideal(P2)) == 0
    with pytest.raises(UsageError, match="dimension of zero ring"):
        dimension(unit_ideal(P2))


def test_colengths(R2, R3, R4):
    x, y, z = R2.gens
    assert colength(ideal(R2, x ** 3, y, z)) == 3
    assert colength(maximal_ideal(R3)) == 1
    a, b, c, d = R4.gens
    assert colength(ideal(R4, a, b ** 2, d)) == 4


def test_r4_colength_against_semigroup_enumeration(R4):
    a, b, c, d = R4.gens
    points = [(4, 0), (6, 2), (0, 4)]
    expected = semigroup_colength(R4_VECTORS, points, 40)
    assert expected == semigroup_colength(R4_VECTORS, points, 60) == 4
    assert colength(ideal(R4, a, b ** 2, d)) == expected
    expected_ad = semigroup_colength(R4_VECTORS, [(4, 0), (0, 4)], 40)
    assert colength(ideal(R4, a, d)) == expected_ad == 5


def test_colength_of_non_primary_names_a_variable(P2):
    x, _ = P2.gens
    with pytest.raises(NotPrimaryError) as info:
        colength(ideal(P2, x))
    assert info.value.variable == "y"


def test_minimal_primes():
    P3 = polynomial_ring(QQ, "xyz")
    x, y, z = P3.gens
    primes = minimal_primes_monomial(ideal(P3, x * y, x * z))
    assert set(primes) == {ideal(P3, x), ideal(P3, y, z)}
    P4 = polynomial_ring(QQ, "abcd")
    a, b, c, d = P4.gens
    primes = minimal_primes_monomial(ideal(P4, a * c, a * d, b * c, b * d))
    assert set(primes) == {ideal(P4, a, b), ideal(P4, c, d)}
    assert minimal_primes_monomial(ideal(P3, x ** 2)) == [ideal(P3, x)]


def test_toric_kernels():
    kernel = toric_kernel(QQ, R4_VECTORS, "abcd")
    P = kernel[0].ring
    a, b, c, d = P.gens
    from closurelab import groebner_basis

    G = groebner_basis(kernel)
    for f in (a * d - b * c, b ** 3 - a ** 2 * c, c ** 3 - b * d ** 2, b ** 2 * d - a * c ** 2):
        assert G.contains(f)
        assert substitute_monomial_map(f, R4_VECTORS) == {}
    assert toric_kernel(QQ, [(1, 0), (0, 1)]) == []
    cone = toric_kernel(QQ, [(2, 0), (1, 1), (0, 2)], "abc")
    a, b, c = cone[0].ring.gens
    assert groebner_basis(cone) == groebner_basis([b ** 2 - a * c])
    R = toric_ring(QQ, R4_VECTORS, "abcd")
    assert R.dim == 2


def test_system_of_parameters(R4):
    a, b, c, d = R4.gens
    assert is_system_of_parameters(R4, [a, d])
    assert not is_system_of_parameters(R4, [a, b])
    assert not is_system_of_parameters(R4, [a])


exponents = st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(any)


@settings(max_examples=40, deadline=None)
@given(st.lists(exponents, min_size=1, max_size=4), st.lists(exponents, min_size=1, max_size=4))
def test_ideal_lattice_laws(ga, gb):
    P = polynomial_ring(QQ, "xy")
    A = ideal(P, [P.ambient.monomial(e) for e in ga])
    B = ideal(P, [P.ambient.monomial(e) for e in gb])
    meet = ideal_intersection(A, B)
    assert is_subideal(A * B, meet)
    assert is_subideal(meet, A) and is_subideal(meet, B)
    assert is_subideal(A, A + B)
    for g in B.gens:
        assert is_subideal(ideal_quotient(A, g) * ideal(P, g), A)
