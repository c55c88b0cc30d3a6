"""Executable checks of the symmetric-polynomial identity behind the integral formula.

For a symmetric ``P`` of degree at most ``n(n+1)/2`` and admissible weights
``lambda``::

    sum_I P(l_I) / (prod_{i<j}(l_{i,I} + l_{j,I}) * prod_i l_{i,I}) = 2^n c(n) / n!

The proof goes through two interpolation lemmas over roots of monic
polynomials, both exposed here (:func:`lemma1_sum`, :func:`lemma2_sum`)
together with the reduction linking them to the subset sum. The
``verify_*`` drivers run seeded random instances of each statement and
return a :class:`VerificationReport`.
"""

import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .combinat import (
    all_strict_partitions,
    check_admissible,
    dim_lg,
    dual,
    random_admissible_lambdas,
    random_distinct_weights,
    signed_assignments,
)
from .exceptions import AdmissibilityError, DegreeError, SymmetryError, VariableCountError
from .integrate import c_coeff, integrate_lg, integrate_lg_dp, localization_lg, parallel_map, relation1_check
from .polyring import (
    Rational,
    SparsePoly,
    as_rational,
    coeff,
    evaluate,
    format_rational,
    is_symmetric,
    structured_products,
)
from .symclasses import qtilde, random_class, to_chern_roots

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonicRootSet:
    """Pairwise-distinct roots ``g_0..g_d`` of the monic ``Q(x) = prod (x - g_i)``.

    Raises:
        AdmissibilityError: On repeated roots.
    """

    roots: tuple[Rational, ...]

    def __post_init__(self):
        values = tuple(as_rational(g) for g in self.roots)
        if not values:
            raise AdmissibilityError("a root set needs at least one root", values)
        if len(set(values)) != len(values):
            raise AdmissibilityError("roots must be pairwise distinct", values)
        object.__setattr__(self, "roots", values)

    @classmethod
    def symmetric(cls, lambdas: Sequence[Rational]) -> "MonicRootSet":
        """Roots ``+-l_1, .., +-l_n`` of ``prod_i (x - l_i)(x + l_i)``."""
        return cls(tuple(itertools.chain.from_iterable((v, -v) for v in lambdas)))

    @property
    def d(self) -> int:
        """``deg Q - 1``."""
        return len(self.roots) - 1

    def derivative_values(self) -> tuple[Rational, ...]:
        """``Q'(g_i) = prod_{j != i} (g_i - g_j)`` for every root."""
        return tuple(math.prod(g - h for h in self.roots if h != g) for g in self.roots)


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Rational
    rhs: Rational
    equal: bool

    @classmethod
    def of(cls, lhs: Rational, rhs: Rational) -> "IdentityCheck":
        lhs, rhs = as_rational(lhs), as_rational(rhs)
        return cls(lhs=lhs, rhs=rhs, equal=lhs == rhs)


def lemma1_sum(rs: MonicRootSet, r: int) -> Rational:
    """``sum_i g_i^r / Q'(g_i)``: zero for ``r < d`` and one for ``r = d``.

    Raises:
        DegreeError: Unless ``0 <= r <= d``.
    """
    if not 0 <= r <= rs.d:
        raise DegreeError(f"exponent r={r} outside [0, {rs.d}]")
    return as_rational(sum((Fraction(g) ** r / q for g, q in zip(rs.roots, rs.derivative_values())), Fraction(0)))


def lemma2_sum(F: SparsePoly, root_sets: Sequence[MonicRootSet]) -> Rational:
    """``sum over root tuples of F(a) / prod_i Q_i'(a_i)``, which is the coefficient of ``x^(d_1..d_n)`` in *F*.

    Raises:
        VariableCountError: If *F* does not have one variable per root set.
        DegreeError: If ``deg F`` exceeds ``sum d_i``.
    """
    if F.nvars != len(root_sets):
        raise VariableCountError(F.nvars, len(root_sets), "root set count")
    bound = sum(rs.d for rs in root_sets)
    if F.total_degree() > bound:
        raise DegreeError(f"degree {F.total_degree()} exceeds sum of d_i = {bound}")
    columns = [list(zip(rs.roots, rs.derivative_values())) for rs in root_sets]
    total = Fraction(0)
    for choice in itertools.product(*columns):
        value = evaluate(F, [g for g, _ in choice])
        if value:
            total += Fraction(value) / math.prod(q for _, q in choice)
    return as_rational(total)


def _check_identity_input(P: SparsePoly, lambdas: Sequence[Rational], n: int) -> tuple[Rational, ...]:
    values = check_admissible(lambdas, n)
    if P.nvars != n:
        raise VariableCountError(n, P.nvars)
    return values


def _subset_sum(P: SparsePoly, lambdas: Sequence[Rational], n: int, alternating: bool) -> Fraction:
    total = Fraction(0)
    for sa in signed_assignments(lambdas, n):
        v = sa.signed
        den = math.prod(v[i] + v[j] for i, j in itertools.combinations(range(n), 2))
        if alternating:
            term = Fraction(evaluate(P, v)) / den
            total += -term if (n - sa.size) % 2 else term
        else:
            total += Fraction(evaluate(P, v)) / (den * math.prod(v))
    return total


def theorem1_check(P: SparsePoly, lambdas: Sequence[Rational], n: int) -> IdentityCheck:
    """Both sides of the subset-sum identity for symmetric *P*.

    Returns:
        ``lhs`` the subset sum, ``rhs = 2^n c(n) / n!``.

    Example:
        >>> from lgschubert.parser import parse_class_expr
        >>> P = to_chern_roots(parse_class_expr("s1^2*s2^2", 3))
        >>> theorem1_check(P, (1, 2, 3), 3).lhs
        32
    """
    values = _check_identity_input(P, lambdas, n)
    rhs = Fraction((1 << n) * c_coeff(P, n)) / math.factorial(n)
    return IdentityCheck.of(_subset_sum(P, values, n, alternating=False), rhs)


def remark_check(P: SparsePoly, lambdas: Sequence[Rational], n: int) -> IdentityCheck:
    """The identity with ``prod l_{i,I}`` cleared from the denominators.

    ``sum_I (-1)^{n-|I|} P(l_I) / prod_{i<j}(l_{i,I} + l_{j,I}) = (2^n c(n) / n!) * prod_i l_i``.
    """
    values = _check_identity_input(P, lambdas, n)
    rhs = Fraction((1 << n) * c_coeff(P, n)) / math.factorial(n) * math.prod(values)
    return IdentityCheck.of(_subset_sum(P, values, n, alternating=True), rhs)


def reduction_check(P: SparsePoly, lambdas: Sequence[Rational], n: int) -> IdentityCheck:
    """The subset sum against the interpolation sum it reduces to.

    ``lhs`` is ``(n! / 2^n)`` times the subset sum; ``rhs`` is :func:`lemma2_sum`
    of ``F = P * prod_{i!=j}(x_i - x_j) * prod_{i<j}(x_i + x_j)`` with every
    ``Q_i = prod_j (x - l_j)(x + l_j)``. Both equal ``c(n)``.
    """
    values = _check_identity_input(P, lambdas, n)
    if not is_symmetric(P):
        raise SymmetryError()
    products = structured_products(n)
    F = P * products.discriminant * products.plusprod
    rs = MonicRootSet.symmetric(values)
    lhs = _subset_sum(P, values, n, alternating=False) * math.factorial(n) / (1 << n)
    return IdentityCheck.of(lhs, lemma2_sum(F, [rs] * n))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a seeded verification run.

    Attributes:
        target: What was verified (``identity``, ``lemma1``, ...).
        n: Rank, or ``None`` when the statement has none.
        seed: Seed of the random generator.
        trials: Number of instances checked.
        failures: One description per failing instance.
    """

    target: str
    n: int | None
    seed: int
    trials: int
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {
            "target": self.target,
            "n": self.n,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def _report(target: str, n: int | None, seed: int, trials: int, failures: list[str]) -> VerificationReport:
    report = VerificationReport(target, n, seed, trials, tuple(failures))
    _logger.info("verify %s n=%s seed=%d: %d/%d instances passed", target, n, seed, trials - len(failures), trials)
    return report


def random_root_set(size: int, rng: random.Random) -> MonicRootSet:
    """*size* distinct rationals with small numerators and denominators."""
    roots: list[Fraction] = []
    while len(roots) < size:
        g = Fraction(rng.randint(-20, 20), rng.randint(1, 5))
        if g not in roots:
            roots.append(g)
    return MonicRootSet(tuple(roots))


def random_poly(nvars: int, bound: int, rng: random.Random, terms: int = 5) -> SparsePoly:
    """Random polynomial of total degree at most *bound* with small rational coefficients."""
    acc: dict[tuple[int, ...], Rational] = {}
    for _ in range(terms):
        e = [0] * nvars
        for _ in range(rng.randint(0, bound)):
            e[rng.randrange(nvars)] += 1
        acc[tuple(e)] = acc.get(tuple(e), 0) + Fraction(rng.randint(-9, 9), rng.randint(1, 3))
    return SparsePoly(nvars, acc)


def random_symmetric_poly(n: int, rng: random.Random) -> SparsePoly:
    """Random symmetric polynomial of degree at most ``n(n+1)/2``, built from elementary symmetric ones."""
    return to_chern_roots(random_class(n, rng, terms=rng.randint(1, 4), homogeneous=False, rational=True))


def verify_identity(n: int, seed: int = 0, trials: int = 50) -> VerificationReport:
    """Subset-sum identity and its rewritten form on random symmetric polynomials and weights."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        P = random_symmetric_poly(n, rng)
        lambdas = random_admissible_lambdas(n, rng)
        for name, check in (("identity", theorem1_check), ("rewritten", remark_check)):
            result = check(P, lambdas, n)
            if not result.equal:
                failures.append(f"trial {t} ({name}): P={P}, lambda={lambdas}: {result.lhs} != {result.rhs}")
    return _report("identity", n, seed, trials, failures)


def verify_lemma1(seed: int = 0, trials: int = 200, max_size: int = 6) -> VerificationReport:
    """Lemma pattern ``(0, .., 0, 1)`` on random root sets of size ``2..max_size``."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        rs = random_root_set(rng.randint(2, max_size), rng)
        pattern = [lemma1_sum(rs, r) for r in range(rs.d + 1)]
        if pattern != [0] * rs.d + [1]:
            failures.append(f"trial {t}: roots={[format_rational(g) for g in rs.roots]}: {pattern}")
    return _report("lemma1", None, seed, trials, failures)


def verify_lemma2(n: int, seed: int = 0, trials: int = 200) -> VerificationReport:
    """Interpolation sum equals the coefficient and does not depend on the root sets."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        sizes = [rng.randint(2, 3) for _ in range(n)]
        bound = sum(s - 1 for s in sizes)
        F = random_poly(n, bound, rng)
        first = lemma2_sum(F, [random_root_set(s, rng) for s in sizes])
        second = lemma2_sum(F, [random_root_set(s, rng) for s in sizes])
        expected = coeff(F, [s - 1 for s in sizes])
        if not first == second == expected:
            failures.append(f"trial {t}: F={F}, sizes={sizes}: {first}, {second}, coefficient {expected}")
    return _report("lemma2", n, seed, trials, failures)


def verify_reduction(n: int, seed: int = 0, trials: int = 20) -> VerificationReport:
    """Subset sum against the interpolation sum over ``+-lambda`` roots."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        P = random_symmetric_poly(n, rng)
        lambdas = random_admissible_lambdas(n, rng)
        result = reduction_check(P, lambdas, n)
        if not result.equal:
            failures.append(f"trial {t}: P={P}, lambda={lambdas}: {result.lhs} != {result.rhs}")
    return _report("reduction", n, seed, trials, failures)


def verify_relation(n: int, seed: int = 0, trials: int = 20, workers: int = 1) -> VerificationReport:
    """LG(n) integrals against G(n, 2n) localization with the staircase class, on random classes."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        c = random_class(n, rng, terms=rng.randint(1, 4))
        weights = random_distinct_weights(2 * n, rng)
        if not relation1_check(c, n, weights, workers=workers):
            failures.append(f"trial {t}: class {c}, weights {weights}")
    return _report("relation", n, seed, trials, failures)


def verify_routes(n: int, seed: int = 0, trials: int = 20, workers: int = 1) -> VerificationReport:
    """Main, dp and localization integrals agree on random top-degree classes."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        c = random_class(n, rng, terms=rng.randint(1, 4))
        lambdas = random_admissible_lambdas(n, rng)
        values = (integrate_lg(c, n), integrate_lg_dp(c, n), localization_lg(c, lambdas, n, workers=workers))
        if len(set(values)) != 1:
            failures.append(f"trial {t}: class {c}: main={values[0]}, dp={values[1]}, localization={values[2]}")
    return _report("routes", n, seed, trials, failures)


def verify_duality(n: int, workers: int = 1) -> VerificationReport:
    """Exhaustive pairing check: ``∫ Q_a Q_b`` is 1 for ``b`` the dual of ``a`` and 0 otherwise."""
    N = dim_lg(n)
    pairs = [(a, b) for a in all_strict_partitions(n) for b in all_strict_partitions(n) if a.weight + b.weight == N]

    def pairing(pair) -> str | None:
        a, b = pair
        value = integrate_lg(qtilde(a, n) * qtilde(b, n), n)
        expected = 1 if b == dual(a, n) else 0
        return None if value == expected else f"({a})x({b}): {value}, expected {expected}"

    failures = [f for f in parallel_map(pairing, pairs, workers) if f]
    return _report("duality", n, 0, len(pairs), failures)
