"""Orders, duals, primes above 2, and the odd determinant-4 lattices.

sympy's round_two is the independent oracle for maximal-order
discriminants; everything else is checked against frozen hand values and
the index-discriminant law disc(suborder) = index^2 * disc(order).
"""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, QQ
from sympy.abc import x as _x
from sympy.polys.numberfields.basis import round_two

from tracelattice._intfactor import is_square
from tracelattice.errors import (
    NotFound,
    NotMaximal,
    Reducible,
    TooLarge,
    TwoInert,
)
from tracelattice.exact_linalg import Matrix, det, inverse
from tracelattice.lattice_core import (
    canonical_key,
    classify_root_type,
    disc_group,
    dual,
    galois_stable,
    odd_trace_witness,
)
from tracelattice.orders_ideals import (
    CubicOrder,
    IdealLattice,
    an_exclusion,
    dedekind_maximalize,
    different_inverse,
    equation_order,
    fake_a3,
    fake_a3_variants,
    is_maximal,
    maximal_order,
    module_product,
    primes_above_2,
    sqrt_different_inverse,
    _make_ideal,
)
from tracelattice.shanks_field import new_field

F = Fraction


def _in_family(t) -> bool:
    try:
        new_field(t)
        return True
    except Reducible:
        return False


def _theta_minpoly_disc_oracle(t: Fraction) -> int:
    """disc of x^3 - p x^2 - q(p+3q) x - q^3 for theta = q*eps."""
    p, q = t.numerator, t.denominator
    return q * q * (p * p + 3 * p * q + 9 * q * q) ** 2


def _round_two_disc(t: Fraction) -> int:
    p, q = t.numerator, t.denominator
    poly = Poly(
        _x**3 - p * _x**2 - q * (p + 3 * q) * _x - q**3, _x, domain=QQ
    )
    _, dk = round_two(poly)
    return int(dk)


def _contains(outer: Matrix, inner: Matrix) -> bool:
    return (inner * inverse(outer)).is_integer()


# ---------------------------------------------------------------------------
# equation orders


def test_equation_order_frozen():
    assert equation_order(1).disc == 169
    assert equation_order(0).disc == 81
    eo = equation_order(F(1, 2))
    assert eo.disc == 7396  # 4 * 43^2
    assert eo.basis == Matrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 4]])


def test_equation_order_rejects_reducible_t():
    with pytest.raises(Reducible):
        equation_order(F(-3, 2))


@given(
    st.fractions(
        min_value=-12, max_value=12, max_denominator=6
    ).filter(_in_family)
)
@settings(max_examples=40, deadline=None)
def test_equation_order_disc_formula(t):
    assert equation_order(t).disc == _theta_minpoly_disc_oracle(F(t))


def test_order_constructor_enforces_closure():
    field = new_field(1)
    with pytest.raises(ValueError):
        CubicOrder(field, [[1, 0, 0], [0, F(1, 2), 0], [0, 0, 1]])
    with pytest.raises(ValueError):
        CubicOrder(field, [[2, 0, 0], [0, 2, 0], [0, 0, 2]])


# ---------------------------------------------------------------------------
# maximalization


def test_maximalize_fixed_point_at_conductor_nine():
    eo = equation_order(0)
    assert dedekind_maximalize(eo, 3).disc == 81


def test_maximalize_strips_even_index():
    eo = equation_order(F(1, 2))
    assert dedekind_maximalize(eo, 2).disc == 1849


@pytest.mark.parametrize(
    "t,dk",
    [
        (F(1), 169),
        (F(0), 81),
        (F(2), 361),
        (F(3), 81),
        (F(5), 49),
        (F(1, 2), 1849),
    ],
)
def test_maximal_order_frozen_discs(t, dk):
    assert maximal_order(t).disc == dk


@pytest.mark.parametrize(
    "t", [F(1), F(3), F(1, 2), F(2, 3), F(-5, 4), F(7, 3), F(11, 5)]
)
def test_maximal_order_matches_round_two(t):
    assert maximal_order(t).disc == _round_two_disc(t)


@given(
    st.fractions(
        min_value=-10, max_value=10, max_denominator=5
    ).filter(_in_family)
)
@settings(max_examples=25, deadline=None)
def test_field_disc_is_square_and_index_law(t):
    eo = equation_order(t)
    mo = maximal_order(t)
    assert is_square(mo.disc)
    index = det(eo.basis) / det(mo.basis)
    assert index.denominator == 1
    assert eo.disc == int(index) ** 2 * mo.disc
    assert _contains(mo.basis, eo.basis)


def test_is_maximal_predicate():
    assert is_maximal(maximal_order(F(1, 2)))
    assert not is_maximal(equation_order(F(1, 2)))


# ---------------------------------------------------------------------------
# the trace dual and its square root


@pytest.mark.parametrize("t", [F(0), F(1), F(2)])
def test_different_inverse_index_is_field_disc(t):
    mo = maximal_order(t)
    d = different_inverse(mo)
    assert det(mo.basis) / det(d.basis) == mo.disc
    assert _contains(d.basis, mo.basis)


def test_different_inverse_trace_pairs_integral():
    mo = maximal_order(F(1, 2))
    d = different_inverse(mo)
    for i in range(3):
        for j in range(3):
            prod = mo.ambient.mul_coords(d.basis.row(i), mo.basis.row(j))
            tr = mo.ambient.trace_coords(prod)
            assert tr.denominator == 1


def test_different_inverse_requires_maximal():
    with pytest.raises(NotMaximal):
        different_inverse(equation_order(F(1, 2)))
    with pytest.raises(NotMaximal):
        different_inverse(equation_order(F(7, 3)))


@pytest.mark.parametrize("t", [F(0), F(1, 2)])
def test_sqrt_different_inverse_squares_to_the_dual(t):
    mo = maximal_order(t)
    d = different_inverse(mo)
    c = sqrt_different_inverse(mo)
    assert module_product(c, c).basis == d.basis
    # sandwiched between the order and the dual, index = conductor each side
    assert _contains(c.basis, mo.basis)
    assert _contains(d.basis, c.basis)
    m = det(mo.basis) / det(c.basis)
    assert m * m == mo.disc


@pytest.mark.parametrize("t", [F(0), F(1, 2)])
def test_sqrt_different_inverse_unimodular_odd(t):
    c = sqrt_different_inverse(maximal_order(t)).lattice()
    assert det(c.gram) == 1
    assert classify_root_type(c) == "unimodular_odd"


def test_sqrt_different_inverse_conductor_cap():
    # delta_13 = 217 = 7 * 31, squarefree, so the conductor is 217 > 200
    with pytest.raises(TooLarge):
        sqrt_different_inverse(maximal_order(13))


# ---------------------------------------------------------------------------
# primes above 2


def test_two_splits_with_even_denominator():
    mo = maximal_order(F(1, 2))
    primes = primes_above_2(mo)
    assert len(primes) == 3
    keys = {canonical_key(p.lattice()) for p in primes}
    assert len(keys) == 3
    for p in primes:
        assert det(mo.basis) / det(p.basis) == F(1, 2)  # index 2 over Z_F


@pytest.mark.parametrize("t", [F(1), F(0)])
def test_two_inert_for_two_adic_integer_t(t):
    mo = maximal_order(t)
    primes = primes_above_2(mo)
    assert len(primes) == 1
    doubled = Matrix([[2 * x for x in mo.basis.row(i)] for i in range(3)])
    assert primes[0].basis == doubled


def test_primes_above_2_deterministic_order():
    mo = maximal_order(F(1, 2))
    a = [p.basis for p in primes_above_2(mo)]
    b = [p.basis for p in primes_above_2(mo)]
    assert a == b


# ---------------------------------------------------------------------------
# the odd determinant-4 lattices


def test_fake_a3_certificates():
    lam = fake_a3(maximal_order(F(1, 2)))
    assert odd_trace_witness(lam) is not None
    assert disc_group(lam) == (1, 1, 4)
    assert classify_root_type(lam) == "diag114"
    assert not galois_stable(lam)
    assert lam.type_tag == "diag114"


def test_fake_a3_dual_also_not_stable():
    lam = fake_a3(maximal_order(F(1, 2)))
    assert not galois_stable(dual(lam))


def test_fake_a3_three_distinct_variants_all_odd():
    variants = fake_a3_variants(maximal_order(F(1, 2)))
    assert len({canonical_key(v) for v in variants}) == 3
    for v in variants:
        assert odd_trace_witness(v) is not None
        assert classify_root_type(v) == "diag114"


def test_fake_a3_rejects_inert_two():
    with pytest.raises(TwoInert):
        fake_a3(maximal_order(1))
    with pytest.raises(TwoInert):
        fake_a3_variants(maximal_order(1))


def test_ideal_stability_enforced():
    mo = maximal_order(1)
    with pytest.raises(ValueError):
        _make_ideal(mo, [[F(1, 3), 0, 0], [0, 1, 0], [0, 0, 1]])


def test_module_product_commutes():
    mo = maximal_order(F(1, 2))
    a = primes_above_2(mo)[0]
    b = sqrt_different_inverse(mo)
    assert module_product(a, b).basis == module_product(b, a).basis


# ---------------------------------------------------------------------------
# the square-class exclusion


def test_an_exclusion_verdicts():
    assert an_exclusion(169, 4) == "not excluded by this criterion"
    assert an_exclusion(229, 4) == "excluded"
    assert an_exclusion(81, 5) == "excluded"
    assert an_exclusion(49, 4) == "not excluded by this criterion"
    assert an_exclusion(12, 3) == "not excluded by this criterion"
    assert an_exclusion(229, 229) == "not excluded by this criterion"


def test_an_exclusion_rejects_zero():
    with pytest.raises(ValueError):
        an_exclusion(0, 4)
