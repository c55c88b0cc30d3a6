"""Integration over LG(n) and G(k, m).

Four independent routes compute the same numbers:

- ``main``: ``(-1)^{n(n+1)/2} c(n) / n!`` with ``c(n)`` the coefficient of
  ``(x1..xn)^{2n-1}`` in ``P * prod_{i!=j}(x_i - x_j) * prod_{i<j}(x_i + x_j)``;
- ``dp``: ``(-1)^{n(n+1)/2}`` times the coefficient of
  ``x1^{2n-1} x2^{2n-2} .. xn^n`` in ``P * prod_{i<j}(x_i - x_j)(x_i + x_j)``;
- ``localization``: an exact fixed-point sum over the ``2^n`` points of LG(n);
- ``grassmannian``: ``∫_{G(n,2n)} c * s_{delta_n}``, which equals the LG(n) integral.

Both coefficient routes read one coefficient of a product whose linear
factors are multiplied once per rank into a pruned kernel (cached), so the
integrand ``P`` is only ever combined with the kernel by
:func:`~lgschubert.polyring.coefficient_of_product`.
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, TypeVar

from .combinat import check_admissible, check_distinct, dim_lg, signed_assignments
from .exceptions import DegreeError, InvariantViolationError, PreconditionError, SymmetryError, VariableCountError
from .polyring import (
    Rational,
    SparsePoly,
    as_rational,
    coefficient_of_product,
    difference_factors,
    evaluate,
    format_rational,
    is_symmetric,
    mul_pruned,
    pruned_product,
    sum_factors,
)
from .symclasses import ClassExpr, schubert_staircase_poly, to_chern_roots

_logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class Route(str, Enum):
    MAIN = "main"
    DP = "dp"
    LOCALIZATION = "localization"
    GRASSMANNIAN = "grassmannian"


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """``[fn(x) for x in items]``, on a thread pool when ``workers > 1``; order is preserved."""
    items = list(items)
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _exact_sum(values: Iterable[Rational]) -> Rational:
    return as_rational(sum(values, Fraction(0)))


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def top_exponent(n: int) -> tuple[int, ...]:
    return (2 * n - 1,) * n


def dp_exponent(n: int) -> tuple[int, ...]:
    return tuple(range(2 * n - 1, n - 1, -1))


@lru_cache(maxsize=8)
def _main_kernel(n: int) -> SparsePoly:
    factors = difference_factors(n, ordered=True) + sum_factors(n)
    return pruned_product(factors, 2 * n - 1, n)


@lru_cache(maxsize=8)
def _dp_kernel(n: int) -> SparsePoly:
    return pruned_product(difference_factors(n) + sum_factors(n), dp_exponent(n), n)


@lru_cache(maxsize=32)
def _grassmannian_kernel(k: int, m: int) -> SparsePoly:
    return pruned_product(difference_factors(k, ordered=True), m - 1, k)


def _check_symmetric_poly(P: SparsePoly, k: int, bound: int) -> None:
    if P.nvars != k:
        raise VariableCountError(k, P.nvars)
    if not is_symmetric(P):
        raise SymmetryError("integrand")
    if P.total_degree() > bound:
        raise DegreeError(f"integrand degree {P.total_degree()} exceeds the dimension {bound}")


def c_coeff(P: SparsePoly, n: int) -> Rational:
    """``c(n)``: coefficient of ``(x1..xn)^{2n-1}`` in ``P * prod_{i!=j}(x_i - x_j) * prod_{i<j}(x_i + x_j)``.

    Raises:
        VariableCountError: If *P* is not in *n* variables.
        SymmetryError: If *P* is not symmetric.
        DegreeError: If ``deg P > n(n+1)/2``.
    """
    _check_symmetric_poly(P, n, dim_lg(n))
    return coefficient_of_product(P, _main_kernel(n), top_exponent(n))


def _integrand(c: ClassExpr, n: int) -> ClassExpr:
    if c.n != n:
        raise VariableCountError(n, c.n, "rank")
    top = c.top_degree()
    if top > dim_lg(n):
        raise DegreeError(f"class degree {top} exceeds dim LG({n}) = {dim_lg(n)}")
    if not c.is_homogeneous():
        _logger.warning("Integrating the degree-%d part of an inhomogeneous class; lower degrees %s discarded", top, c.degrees()[:-1])
        return c.homogeneous_part(top)
    return c


def integrate_lg(c: ClassExpr, n: int) -> Rational:
    """``∫_{LG(n)} c`` by the coefficient formula ``(-1)^{n(n+1)/2} c(n) / n!``.

    Args:
        c: A class of rank *n* and degree at most ``n(n+1)/2``. Only the top
            degree part of an inhomogeneous class is integrated.

    Returns:
        The exact integral; 0 when the degree is below ``n(n+1)/2``.

    Example:
        >>> from lgschubert.parser import parse_class_expr
        >>> integrate_lg(parse_class_expr("s1^2*s2^2", 3), 3)
        4
    """
    c = _integrand(c, n)
    N = dim_lg(n)
    if c.top_degree() < N:
        return 0
    P = to_chern_roots(c, cap=2 * n - 1)
    value = coefficient_of_product(P, _main_kernel(n), top_exponent(n))
    return as_rational(Fraction(_sign(N) * value) / math.factorial(n))


def integrate_lg_dp(c: ClassExpr, n: int) -> Rational:
    """``∫_{LG(n)} c`` from the coefficient of ``x1^{2n-1} .. xn^n`` in ``P * prod_{i<j}(x_i^2 - x_j^2)``."""
    c = _integrand(c, n)
    N = dim_lg(n)
    if c.top_degree() < N:
        return 0
    P = to_chern_roots(c, cap=2 * n - 1)
    return _sign(N) * coefficient_of_product(P, _dp_kernel(n), dp_exponent(n))


def localization_lg(c: ClassExpr, lambdas: Sequence[Rational], n: int, workers: int = 1) -> Rational:
    """``∫_{LG(n)} c`` as the exact fixed-point sum at the torus weights *lambdas*.

    Evaluates ``(-1)^{n(n+1)/2} / 2^n * sum_I P(l_I) / (prod_{i<j}(l_{i,I} + l_{j,I}) * prod_i l_{i,I})``
    with ``P = to_chern_roots(c)``; the whole class is summed, lower degrees
    contribute zero.

    Raises:
        AdmissibilityError: If *lambdas* contain zero or entries with equal squares.
    """
    check_admissible(lambdas, n)
    if c.n != n:
        raise VariableCountError(n, c.n, "rank")
    N = dim_lg(n)
    if c.top_degree() > N:
        raise DegreeError(f"class degree {c.top_degree()} exceeds dim LG({n}) = {N}")
    P = to_chern_roots(c)

    def contribution(sa) -> Fraction:
        v = sa.signed
        euler = math.prod(v[i] + v[j] for i, j in itertools.combinations(range(n), 2)) * math.prod(v)
        return Fraction(evaluate(P, v)) / euler

    points = list(signed_assignments(lambdas, n))
    _logger.debug("localization on LG(%d): %d fixed points, %d workers", n, len(points), workers)
    total = _exact_sum(parallel_map(contribution, points, workers))
    return as_rational(Fraction(_sign(N) * total) / (1 << n))


def localization_grassmannian(P: SparsePoly, lambdas: Sequence[Rational], k: int, m: int, workers: int = 1) -> Rational:
    """``∫_{G(k,m)} P`` as the fixed-point sum ``sum_J P(l_J) / prod_{i in J, j not in J}(l_j - l_i)``.

    Args:
        P: Symmetric polynomial in the *k* Chern roots of the tautological sub-bundle.
        lambdas: *m* pairwise-distinct weights.

    Raises:
        AdmissibilityError: On repeated weights.
    """
    if not 1 <= k <= m:
        raise PreconditionError(f"G(k, m) needs 1 <= k <= m, got k={k}, m={m}")
    values = check_distinct(lambdas, m)
    _check_symmetric_poly(P, k, k * (m - k))

    def contribution(J: tuple[int, ...]) -> Fraction:
        inside = set(J)
        euler = math.prod(values[j] - values[i] for i in J for j in range(m) if j not in inside)
        return Fraction(evaluate(P, [values[i] for i in J])) / euler

    subsets = list(itertools.combinations(range(m), k))
    _logger.debug("localization on G(%d,%d): %d fixed points, %d workers", k, m, len(subsets), workers)
    return _exact_sum(parallel_map(contribution, subsets, workers))


def integrate_grassmannian(P: SparsePoly, k: int, m: int) -> Rational:
    """``∫_{G(k,m)} P`` as ``(-1)^{k(m-k)} / k!`` times the coefficient of ``(x1..xk)^{m-1}`` in ``P * prod_{i!=j}(x_i - x_j)``."""
    if not 1 <= k <= m:
        raise PreconditionError(f"G(k, m) needs 1 <= k <= m, got k={k}, m={m}")
    _check_symmetric_poly(P, k, k * (m - k))
    value = coefficient_of_product(P, _grassmannian_kernel(k, m), (m - 1,) * k)
    return as_rational(Fraction(_sign(k * (m - k)) * value) / math.factorial(k))


def integrate_grassmannian_staircase(
    c: ClassExpr, n: int, lambdas: Sequence[Rational] | None = None, workers: int = 1
) -> Rational:
    """``∫_{G(n,2n)} c * s_{delta_n}``, by localization at *lambdas* or, when omitted, by coefficient extraction."""
    if c.n != n:
        raise VariableCountError(n, c.n, "rank")
    if c.top_degree() > dim_lg(n):
        raise DegreeError(f"class degree {c.top_degree()} exceeds dim LG({n}) = {dim_lg(n)}")
    stair = schubert_staircase_poly(n)
    if lambdas is None:
        P = mul_pruned(to_chern_roots(c, cap=2 * n - 1), stair, 2 * n - 1)
        return integrate_grassmannian(P, n, 2 * n)
    return localization_grassmannian(to_chern_roots(c) * stair, lambdas, n, 2 * n, workers=workers)


def relation1_check(c: ClassExpr, n: int, lambdas: Sequence[Rational], workers: int = 1) -> bool:
    """True iff ``∫_{LG(n)} c`` equals ``∫_{G(n,2n)} c * s_{delta_n}`` computed by localization at *lambdas*."""
    left = integrate_lg(c, n)
    right = integrate_grassmannian_staircase(c, n, lambdas, workers=workers)
    _logger.debug("relation check n=%d: LG side %s, G(n,2n) side %s", n, left, right)
    return left == right


def integrate(
    c: ClassExpr,
    n: int,
    route: Route | str = Route.MAIN,
    lambdas: Sequence[Rational] | None = None,
    workers: int = 1,
) -> Rational:
    """``∫_{LG(n)} c`` by the chosen route.

    Args:
        route: One of :class:`Route`.
        lambdas: Torus weights for the localization routes. ``localization``
            defaults to ``(1, .., n)``; ``grassmannian`` uses coefficient
            extraction on G(n, 2n) when omitted.
    """
    route = Route(route)
    if route is Route.MAIN:
        return integrate_lg(c, n)
    if route is Route.DP:
        return integrate_lg_dp(c, n)
    if route is Route.LOCALIZATION:
        return localization_lg(c, tuple(range(1, n + 1)) if lambdas is None else lambdas, n, workers=workers)
    return integrate_grassmannian_staircase(c, n, lambdas, workers=workers)


@dataclass(frozen=True)
class CoefficientCertificate:
    """An integral together with the coefficient ``c(n)`` it corresponds to.

    For the ``main`` route ``c_n`` is the extracted coefficient; for the other
    routes it is recovered from the integral as ``(-1)^{n(n+1)/2} n! * integral``.
    """

    n: int
    c_n: Rational
    integral: Rational
    route: Route

    def __post_init__(self):
        expected = Fraction(_sign(dim_lg(self.n)) * self.c_n) / math.factorial(self.n)
        if expected != self.integral:
            raise InvariantViolationError(
                f"certificate for n={self.n}: integral {self.integral} != (-1)^N c(n)/n! = {expected}"
            )

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "route": self.route.value,
            "c_n": format_rational(self.c_n),
            "integral": format_rational(self.integral),
        }


def certify(
    c: ClassExpr,
    n: int,
    route: Route | str = Route.MAIN,
    lambdas: Sequence[Rational] | None = None,
    workers: int = 1,
) -> CoefficientCertificate:
    """Integrate *c* over LG(n) by *route* and package the result with ``c(n)``."""
    route = Route(route)
    if route is Route.MAIN:
        top = _integrand(c, n)
        if top.top_degree() < dim_lg(n):
            c_n: Rational = 0
        else:
            P = to_chern_roots(top, cap=2 * n - 1)
            c_n = coefficient_of_product(P, _main_kernel(n), top_exponent(n))
        integral = as_rational(Fraction(_sign(dim_lg(n)) * c_n) / math.factorial(n))
    else:
        integral = integrate(c, n, route, lambdas, workers=workers)
        c_n = as_rational(_sign(dim_lg(n)) * math.factorial(n) * Fraction(integral))
    return CoefficientCertificate(n=n, c_n=c_n, integral=integral, route=route)
