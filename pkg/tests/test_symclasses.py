import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lgschubert import (
    ClassExpr,
    DegreeError,
    PartitionError,
    PreconditionError,
    SparsePoly,
    VariableCountError,
    all_strict_partitions,
    elem_sym,
    is_symmetric,
    qtilde,
    qtilde2,
    qtilde_pfaffian,
    random_class,
    schubert_staircase_poly,
    sigma_monomials,
    special,
    structured_products,
    to_chern_roots,
)
from lgschubert.symclasses import class_degree


def s(i, n):
    return special(i, n)


def test_special_classes():
    assert special(0, 3) == ClassExpr.one(3)
    assert special(4, 3).is_zero()
    assert special(-1, 3).is_zero()
    assert special(2, 3).degree == 2
    assert str(special(3, 3)) == "s3"
    with pytest.raises(PreconditionError):
        special(1, 0)


def test_qtilde2_examples():
    assert str(qtilde2(2, 1, 3)) == "s2*s1 - 2*s3"
    assert qtilde2(2, 1, 2) == s(2, 2) * s(1, 2)
    assert qtilde2(3, 1, 4) == s(3, 4) * s(1, 4) - 2 * s(4, 4)
    assert qtilde2(2, 1, 4) == s(2, 4) * s(1, 4) - 2 * s(3, 4)
    with pytest.raises(PartitionError):
        qtilde2(1, 1, 3)
    with pytest.raises(PartitionError):
        qtilde2(4, 1, 3)
    with pytest.raises(PartitionError):
        qtilde2(2, 0, 3)


def test_qtilde_small_indices():
    assert qtilde((), 3) == ClassExpr.one(3)
    assert qtilde((2,), 3) == s(2, 3)
    assert qtilde((2, 1), 3) == qtilde2(2, 1, 3)


def test_qtilde_three_parts():
    expected = s(4, 4) * s(2, 4) * s(1, 4) - 2 * s(4, 4) * s(3, 4)
    assert qtilde((4, 2, 1), 4) == expected
    assert qtilde((3, 2, 1), 3) == s(3, 3) * s(2, 3) * s(1, 3) - 2 * s(3, 3) ** 2


def test_qtilde_rejects_non_strict_input():
    with pytest.raises(PartitionError):
        qtilde((2, 2), 3)
    with pytest.raises(PartitionError):
        qtilde((5, 1), 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_laplace_expansion_matches_matching_expansion(n):
    for alpha in all_strict_partitions(n):
        q = qtilde(alpha, n)
        assert q == qtilde_pfaffian(alpha, n)
        assert q.is_zero() or q.degree == alpha.weight


def test_class_arithmetic_and_rendering():
    n = 3
    c = s(1, n) ** 2 * s(2, n) ** 2 - Fraction(1, 2) * s(3, n) + 1
    assert str(c) == "s2^2*s1^2 - 1/2*s3 + 1"
    assert c.degrees() == [0, 3, 6]
    assert c.top_degree() == 6
    assert not c.is_homogeneous()
    assert c.degree is None
    assert c.homogeneous_part(3) == -Fraction(1, 2) * s(3, n)
    assert str(ClassExpr.zero(2)) == "0"
    assert 1 - s(1, 2) == -(s(1, 2) - 1)
    assert repr(s(1, 2)) == "ClassExpr(2, 's1')"


def test_ranks_do_not_mix():
    with pytest.raises(VariableCountError):
        s(1, 2) + s(1, 3)
    with pytest.raises(VariableCountError):
        s(1, 2) * s(1, 3)


def test_with_rank():
    c = s(1, 3) * s(3, 3) + s(2, 3)
    assert c.with_rank(2) == s(2, 2)
    assert c.with_rank(4) == s(1, 4) * s(3, 4) + s(2, 4)


def test_to_chern_roots_examples():
    x1, x2 = SparsePoly.variable(1, 2), SparsePoly.variable(2, 2)
    assert to_chern_roots(s(1, 2)) == -(x1 + x2)
    assert to_chern_roots(s(2, 2)) == x1 * x2
    assert to_chern_roots(s(1, 2) ** 2) == (x1 + x2) ** 2
    assert to_chern_roots(ClassExpr.one(2)) == SparsePoly.one(2)
    assert to_chern_roots(s(1, 2) ** 2, cap=1) == 2 * x1 * x2
    with pytest.raises(DegreeError):
        to_chern_roots(s(1, 2), cap=-1)


def test_to_chern_roots_uses_signed_elementary_polynomials():
    n = 4
    for i in range(1, n + 1):
        sign = -1 if i % 2 else 1
        assert to_chern_roots(s(i, n)) == sign * elem_sym(i, n)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 6), st.randoms(use_true_random=False))
def test_chern_root_substitution_is_symmetric_and_multiplicative(n, d, rnd):
    a = random_class(n, rnd, degree=d, terms=2, homogeneous=False)
    b = random_class(n, rnd, degree=2, terms=2, homogeneous=False, rational=True)
    pa = to_chern_roots(a)
    assert is_symmetric(pa)
    assert to_chern_roots(a * b) == pa * to_chern_roots(b)
    assert to_chern_roots(a + b) == pa + to_chern_roots(b)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.randoms(use_true_random=False))
def test_pruned_substitution_keeps_every_term_within_cap(n, rnd):
    c = random_class(n, rnd, terms=3)
    cap = n
    full = to_chern_roots(c)
    pruned = to_chern_roots(c, cap=cap)
    assert dict(pruned.terms) == {e: v for e, v in full.terms.items() if max(e) <= cap}


def test_schubert_staircase_poly():
    assert schubert_staircase_poly(1) == SparsePoly.one(1)
    assert schubert_staircase_poly(2) == -structured_products(2).plusprod
    assert schubert_staircase_poly(3) == -structured_products(3).plusprod
    assert schubert_staircase_poly(4) == structured_products(4).plusprod


def test_sigma_monomials():
    assert sigma_monomials(2, 2) == [(0, 1), (2, 0)]
    assert sorted(sigma_monomials(3, 3)) == [(0, 0, 1), (1, 1, 0), (3, 0, 0)]
    assert sigma_monomials(1, 0) == [(0,)]
    assert all(class_degree(e) == 6 for e in sigma_monomials(3, 6))
    with pytest.raises(DegreeError):
        sigma_monomials(2, -1)


def test_random_class_is_homogeneous_of_requested_degree():
    rng = random.Random(7)
    for n in range(1, 5):
        c = random_class(n, rng)
        assert c.is_zero() or c.degree == n * (n + 1) // 2
        r = random_class(n, rng, degree=2, rational=True)
        assert r.is_zero() or r.degree == 2
