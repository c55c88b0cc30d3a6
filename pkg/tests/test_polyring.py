import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lgschubert import (
    DegreeError,
    PreconditionError,
    SparsePoly,
    VariableCountError,
    add,
    coeff,
    coefficient_of_product,
    elem_sym,
    evaluate,
    is_symmetric,
    mul,
    mul_pruned,
    pruned_product,
    structured_products,
)
from lgschubert.polyring import as_rational, format_rational


def x(i, n):
    return SparsePoly.variable(i, n)


def polys(nvars, max_terms=8, max_exp=3):
    exps = st.tuples(*[st.integers(0, max_exp)] * nvars)
    coefs = st.one_of(st.integers(-6, 6), st.fractions(min_value=-3, max_value=3, max_denominator=4))
    return st.dictionaries(exps, coefs, max_size=max_terms).map(lambda t: SparsePoly(nvars, t))


points = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=3), min_size=3, max_size=3)


def test_add_examples():
    assert add(x(1, 2), -x(1, 2)) == SparsePoly.zero(2)
    assert add(x(1, 2) + x(2, 2), x(2, 2)) == SparsePoly(2, {(1, 0): 1, (0, 1): 2})
    assert add(x(1, 2), -x(1, 2)).is_zero()


@given(polys(3))
def test_add_zero_is_identity(p):
    assert add(p, SparsePoly.zero(3)) == p


def test_mul_examples():
    a = x(1, 2) + x(2, 2)
    b = x(1, 2) - x(2, 2)
    assert mul(a, b) == x(1, 2) ** 2 - x(2, 2) ** 2
    assert mul(SparsePoly.one(2), a) == a
    assert coeff(a**3, (2, 1)) == 3


def test_variable_count_mismatch_rejected():
    with pytest.raises(VariableCountError):
        add(x(1, 2), x(1, 3))
    with pytest.raises(VariableCountError):
        mul(x(1, 2), x(1, 3))
    with pytest.raises(VariableCountError):
        coeff(x(1, 2), (1,))
    with pytest.raises(VariableCountError):
        evaluate(x(1, 2), (1, 2, 3))


def test_constructor_validates_terms():
    with pytest.raises(VariableCountError):
        SparsePoly(2, {(1,): 1})
    with pytest.raises(DegreeError):
        SparsePoly(2, {(-1, 0): 1})
    with pytest.raises(PreconditionError):
        SparsePoly(0)


def test_canonical_form_drops_zeros_and_collapses_integral_fractions():
    p = SparsePoly(2, [((1, 0), Fraction(1, 2)), ((1, 0), Fraction(1, 2)), ((0, 1), 0)])
    assert dict(p.terms) == {(1, 0): 1}
    assert type(p.terms[(1, 0)]) is int
    assert p.nvars == 2


def test_mul_pruned_example():
    x1 = x(1, 1)
    p = x1**2 + x1
    q = x1**2 + 1
    assert mul_pruned(p, q, 2) == x1**2 + x1


def test_mul_pruned_with_full_cap_matches_mul():
    p = (x(1, 2) + 2 * x(2, 2) + 1) ** 2
    q = x(1, 2) - x(2, 2)
    full = mul(p, q)
    assert mul_pruned(p, q, full.total_degree()) == full


def test_mul_pruned_per_variable_caps():
    p = (x(1, 2) + x(2, 2)) ** 3
    pruned = mul_pruned(p, SparsePoly.one(2), (2, 1))
    assert dict(pruned.terms) == {(2, 1): 3}


def test_mul_pruned_rejects_negative_cap():
    with pytest.raises(DegreeError):
        mul_pruned(x(1, 1), x(1, 1), -1)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 4).flatmap(lambda k: st.tuples(polys(k, 30, 4), polys(k, 30, 4))), st.integers(0, 6))
def test_mul_pruned_agrees_with_mul_inside_cap(pq, cap):
    p, q = pq
    pruned = mul_pruned(p, q, cap)
    full = mul(p, q)
    expected = {e: c for e, c in full.terms.items() if max(e) <= cap}
    assert dict(pruned.terms) == expected


def test_pruned_product_of_linear_factors():
    factors = [x(1, 2) + x(2, 2)] * 4
    assert pruned_product(factors, 3, 2) == SparsePoly(2, {(3, 1): 4, (2, 2): 6, (1, 3): 4})


def test_coeff_examples():
    assert coeff((x(1, 2) + x(2, 2)) ** 3, (2, 1)) == 3
    assert coeff(SparsePoly.zero(3), (1, 2, 3)) == 0


def test_coeff_of_vandermonde_times_plusprod():
    sp = structured_products(3)
    product = mul(sp.vandermonde, sp.plusprod)
    assert coeff(product, (2, 2, 2)) == 0
    assert coeff(product, (4, 2, 0)) == 1
    assert coeff(product, (2, 4, 0)) == -1
    for e in [(2, 2, 2), (4, 2, 0), (2, 4, 0), (0, 2, 4), (3, 2, 1)]:
        assert coefficient_of_product(sp.vandermonde, sp.plusprod, e) == coeff(product, e)


@settings(max_examples=100, deadline=None)
@given(polys(3, 10), polys(3, 10), st.tuples(*[st.integers(0, 6)] * 3))
def test_coefficient_of_product_matches_full_product(p, q, e):
    assert coefficient_of_product(p, q, e) == coeff(mul(p, q), e)


def test_evaluate_examples():
    assert evaluate(x(1, 2) * x(2, 2), (2, 3)) == 6
    a = Fraction(7, 3)
    assert evaluate(x(1, 2) - x(2, 2), (a, a)) == 0
    assert evaluate(SparsePoly(1, {(2,): Fraction(1, 2)}), (3,)) == Fraction(9, 2)


def test_evaluate_factorwise_on_identity_integrand():
    P = elem_sym(1, 3) * elem_sym(2, 3)
    sp = structured_products(3)
    F = P * sp.discriminant * sp.plusprod
    point = (1, -2, 3)
    assert evaluate(F, point) == evaluate(P, point) * evaluate(sp.discriminant, point) * evaluate(sp.plusprod, point)


@settings(max_examples=100, deadline=None)
@given(polys(3), polys(3), points)
def test_evaluate_is_a_ring_homomorphism(p, q, t):
    assert evaluate(p * q, t) == evaluate(p, t) * evaluate(q, t)
    assert evaluate(p + q, t) == evaluate(p, t) + evaluate(q, t)


def test_is_symmetric_examples():
    assert is_symmetric(x(1, 2) + x(2, 2))
    assert not is_symmetric(x(1, 2) - x(2, 2))
    assert is_symmetric(elem_sym(2, 4))
    assert is_symmetric(SparsePoly.zero(3))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(-4, 4)), max_size=4), points, st.randoms(use_true_random=False))
def test_symmetric_polys_are_invariant_under_permuted_points(terms, t, rnd):
    p = SparsePoly.zero(3)
    for i, c in terms:
        p = p + c * elem_sym(i, 3) * elem_sym(1, 3) ** i
    assert is_symmetric(p)
    shuffled = list(t)
    rnd.shuffle(shuffled)
    assert evaluate(p, t) == evaluate(p, shuffled)


def test_elem_sym_examples():
    assert elem_sym(1, 2) == x(1, 2) + x(2, 2)
    assert elem_sym(2, 2) == x(1, 2) * x(2, 2)
    assert elem_sym(3, 2).is_zero()
    assert elem_sym(0, 3) == SparsePoly.one(3)
    with pytest.raises(DegreeError):
        elem_sym(-1, 2)


def test_structured_products_small_ranks():
    one = structured_products(1)
    assert one.vandermonde == one.discriminant == one.plusprod == SparsePoly.one(1)
    two = structured_products(2)
    assert two.vandermonde == x(1, 2) - x(2, 2)
    assert two.discriminant == SparsePoly(2, {(1, 1): 2, (2, 0): -1, (0, 2): -1})
    assert two.plusprod == x(1, 2) + x(2, 2)
    with pytest.raises(PreconditionError):
        structured_products(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_discriminant_is_signed_vandermonde_square(n):
    sp = structured_products(n)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    assert sp.discriminant == sign * sp.vandermonde * sp.vandermonde


@settings(max_examples=50, deadline=None)
@given(polys(2, 5), polys(2, 5), polys(2, 5))
def test_ring_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p + q == q + p
    assert p * (q + r) == p * q + p * r
    assert p - p == SparsePoly.zero(2)


def test_power_and_permutation():
    p = x(1, 3) + 2 * x(3, 3)
    assert p**0 == SparsePoly.one(3)
    assert p**3 == p * p * p
    assert p.permuted((2, 1, 0)) == x(3, 3) + 2 * x(1, 3)
    with pytest.raises(DegreeError):
        p ** -1


def test_degree_helpers():
    p = x(1, 2) ** 3 + x(2, 2) + 5
    assert p.total_degree() == 3
    assert p.degrees() == [0, 1, 3]
    assert p.homogeneous_part(1) == x(2, 2)
    assert SparsePoly.zero(2).total_degree() == -1


def test_rendering_is_graded_lex():
    p = x(1, 2) + x(2, 2)
    assert str(p * p) == "x1^2 + 2*x1*x2 + x2^2"
    assert str(SparsePoly.zero(4)) == "0"
    assert str(SparsePoly(2, {(1, 0): -1, (0, 0): Fraction(1, 2)})) == "-x1 + 1/2"
    assert str(SparsePoly(3, {(0, 1, 2): -3, (1, 1, 1): 1})) == "x1*x2*x3 - 3*x2*x3^2"


def test_rationals_are_exact():
    assert as_rational("6/4") == Fraction(3, 2)
    assert as_rational(Fraction(4, 2)) == 2 and type(as_rational(Fraction(4, 2))) is int
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(7) == "7"
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_values_are_hashable_and_shareable():
    rng = random.Random(3)
    polys_ = {SparsePoly(2, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(1, 3)}) for _ in range(20)}
    assert all(isinstance(hash(p), int) for p in polys_)
    assert SparsePoly(2, {(1, 0): 1}) in {x(1, 2)}
