"""Exact colength, multiplicity and closure computations in graded quotient rings.

Typical use::

    >>> from closurelab import QQ, toric_ring, infty_ideal, colength
    >>> R = toric_ring(QQ, [[4, 0], [3, 1], [1, 3], [0, 4]], "abcd")
    >>> a, b, c, d = R.gens
    >>> A = infty_ideal(R, [a, d]).closure
    >>> print(A, colength(A))
    (a, d, b^2) 4
"""

from .closures import (
    ClosureResult,
    closure_membership,
    infty_ideal,
    integral_closure,
    integral_closedness,
    is_integrally_closed,
    limit_closure,
    monomial_integral_closure,
    rees_membership,
    stanley_reisner_closure,
)
from .coeffs import DEFAULT_PRIME, GF, QQ, FieldScalar, PrimeField, RationalField, field_from_name
from .detectors import check_chain, check_cm_via_lim, check_f_rational, check_inequality, check_regular
from .errors import (
    ClosureLabError,
    NotPrimaryError,
    ReductionNotFound,
    UnstabilizedError,
    UnsupportedError,
    UsageError,
)
from .groebner import GroebnerBasis, groebner_basis, is_groebner, normal_form, standard_monomials
from .idealops import (
    Ideal,
    colength,
    dimension,
    ideal,
    ideal_colon_ideal,
    ideal_equal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    is_m_primary,
    is_subideal,
    is_system_of_parameters,
    maximal_ideal,
    membership,
    minimal_primes_monomial,
    saturation,
    standard_basis,
    toric_kernel,
    toric_ring,
    unit_ideal,
    zero_ideal,
)
from .multiplicity import (
    MultiplicityResult,
    Reduction,
    additivity_check,
    hilbert_samuel_table,
    mult_hs,
    mult_param,
    random_reduction,
)
from .newton import in_newton_polyhedron
from .polyring import Polynomial, PolyRing, Ring, WeightedDegRevLex, make_ring, polynomial_ring
from .report import Report

__version__ = "0.1.0"
