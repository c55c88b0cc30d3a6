"""Enumerative geometry of LG(n): degree, structure constants, lines, quantum products.

Every number here is an integral over a Lagrangian Grassmannian:

- the degree is ``∫_{LG(n)} s1^{n(n+1)/2}`` (also available in closed form);
- the structure constant ``e_{a,b}^g`` is ``∫_{LG(n)} Q_a Q_b Q_{g^v}``;
- the degree-1 Gromov-Witten invariant ``<s_a, s_b, s_d>_1`` is half of
  ``∫_{LG(n+1)} Q_a Q_b Q_d`` with the classes read in rank ``n+1``.

All of them count points or curves, so non-integral or negative results are
reported as :class:`~lgschubert.exceptions.IntegralityError`.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import StrictPartition, as_partition, dim_lg, dual, format_partition, strict_partitions
from .exceptions import IntegralityError, PartitionError, PreconditionError, RouteMismatchError, UnsupportedDegreeError
from .integrate import Route, integrate, integrate_lg, parallel_map
from .polyring import Rational, format_rational
from .symclasses import qtilde, special

_logger = logging.getLogger(__name__)


def _count(value: Rational, what: str) -> int:
    q = Fraction(value)
    if q.denominator != 1 or q < 0:
        raise IntegralityError(what, format_rational(value))
    return q.numerator


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"rank must be a positive integer, got {n!r}")


def degree_lg(n: int) -> int:
    """Degree of LG(n) in its Plucker embedding, in closed form.

    ``(n(n+1)/2)! / prod_{i=1}^n (2i-1)! * prod_{i<j} (2j - 2i)``

    Example:
        >>> degree_lg(3)
        16
    """
    _check_rank(n)
    numerator = math.factorial(dim_lg(n)) * math.prod(2 * (j - i) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    denominator = math.prod(math.factorial(2 * i - 1) for i in range(1, n + 1))
    value, rest = divmod(numerator, denominator)
    if rest:
        raise IntegralityError(f"degree of LG({n})", format_rational(Fraction(numerator, denominator)))
    return value


def degree_lg_via_integral(n: int, route: Route | str = Route.MAIN, workers: int = 1) -> int:
    """``∫_{LG(n)} s1^{n(n+1)/2}`` by *route*, checked against :func:`degree_lg`.

    Raises:
        IntegralityError: If the integral is not a nonnegative integer.
        RouteMismatchError: If it differs from the closed form.
    """
    _check_rank(n)
    route = Route(route)
    value = _count(integrate(special(1, n) ** dim_lg(n), n, route, workers=workers), f"degree of LG({n})")
    closed = degree_lg(n)
    if value != closed:
        raise RouteMismatchError(f"degree of LG({n})", {"closed-form": closed, route.value: value})
    return value


def structure_constant(
    alpha: StrictPartition | Sequence[int],
    beta: StrictPartition | Sequence[int],
    gamma: StrictPartition | Sequence[int],
    n: int,
) -> int:
    """Coefficient ``e_{a,b}^g`` of ``s_g`` in ``s_a * s_b`` on LG(n).

    Raises:
        PartitionError: On partitions outside D_n or ``|g| != |a| + |b|``.
        IntegralityError: If the integral is not a nonnegative integer.
    """
    _check_rank(n)
    alpha, beta, gamma = (as_partition(p, n) for p in (alpha, beta, gamma))
    if gamma.weight != alpha.weight + beta.weight:
        raise PartitionError(f"|{gamma}| = {gamma.weight} must equal |{alpha}| + |{beta}| = {alpha.weight + beta.weight}")
    value = integrate_lg(qtilde(alpha, n) * qtilde(beta, n) * qtilde(dual(gamma, n), n), n)
    return _count(value, f"structure constant e_({alpha}),({beta})^({gamma})")


def gw1(
    alpha: StrictPartition | Sequence[int],
    beta: StrictPartition | Sequence[int],
    delta: StrictPartition | Sequence[int],
    n: int,
) -> int:
    """Degree-1 invariant ``<s_a, s_b, s_d>_1`` of LG(n): half of an LG(n+1) integral.

    Raises:
        PartitionError: On partitions outside D_n or ``|a|+|b|+|d| != (n+1)(n+2)/2``.
        IntegralityError: If the halved integral is not a nonnegative integer.
    """
    _check_rank(n)
    alpha, beta, delta = (as_partition(p, n) for p in (alpha, beta, delta))
    total = alpha.weight + beta.weight + delta.weight
    if total != dim_lg(n + 1):
        raise PartitionError(f"weights of ({alpha}), ({beta}), ({delta}) sum to {total}, expected {dim_lg(n + 1)}")
    m = n + 1
    value = integrate_lg(qtilde(alpha.parts, m) * qtilde(beta.parts, m) * qtilde(delta.parts, m), m)
    return _count(Fraction(value) / 2, f"Gromov-Witten invariant <({alpha}),({beta}),({delta})>_1")


def _gamma_text(gamma: StrictPartition) -> str:
    return f"s[{format_partition(gamma)}]" if gamma.parts else ""


@dataclass(frozen=True)
class QuantumProduct:
    """``s_a * s_b = sum_g e_{a,b}^g s_g + sum_g <s_a, s_b, s_{g^v}>_1 s_g q`` in qH*(LG(n)).

    Only nonzero coefficients are stored, in the enumeration order of
    :func:`~lgschubert.combinat.strict_partitions`.
    """

    n: int
    a: StrictPartition
    b: StrictPartition
    classical: tuple[tuple[StrictPartition, int], ...]
    quantum1: tuple[tuple[StrictPartition, int], ...]

    def coefficient(self, gamma: StrictPartition | Sequence[int], d: int = 0) -> int:
        gamma = as_partition(gamma, self.n)
        terms = self.classical if d == 0 else self.quantum1 if d == 1 else ()
        return dict(terms).get(gamma, 0)

    def __str__(self) -> str:
        out: list[str] = []
        for terms, q in ((self.classical, ""), (self.quantum1, "q")):
            for gamma, coef in terms:
                body = "*".join(p for p in (_gamma_text(gamma), q) if p)
                if not body:
                    out.append(str(coef))
                else:
                    out.append(body if coef == 1 else f"{coef}*{body}")
        return " + ".join(out) if out else "0"

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "a": format_partition(self.a),
            "b": format_partition(self.b),
            "classical": [{"gamma": format_partition(g), "coef": c} for g, c in self.classical],
            "q1": [{"gamma": format_partition(g), "coef": c} for g, c in self.quantum1],
        }


def quantum_product(
    alpha: StrictPartition | Sequence[int],
    beta: StrictPartition | Sequence[int],
    n: int,
    workers: int = 1,
) -> QuantumProduct:
    """Quantum product ``s_a * s_b`` in qH*(LG(n)) up to first order in ``q``.

    Raises:
        UnsupportedDegreeError: If ``|a| + |b| >= 2(n+1)``, where ``q^2`` terms could occur.

    Example:
        >>> str(quantum_product((2, 1), (2,), 3))
        '2*s[3,2] + s[1]*q'
    """
    _check_rank(n)
    alpha, beta = as_partition(alpha, n), as_partition(beta, n)
    w = alpha.weight + beta.weight
    if w >= 2 * (n + 1):
        raise UnsupportedDegreeError(f"|{alpha}| + |{beta}| = {w} >= {2 * (n + 1)}: unsupported degree >= 2 in q")
    N = dim_lg(n)
    classical_gammas = strict_partitions(n, w) if w <= N else []
    w1 = w - (n + 1)
    quantum_gammas = strict_partitions(n, w1) if 0 <= w1 <= N else []
    _logger.debug("quantum product (%s)x(%s) in LG(%d): %d classical, %d degree-1 terms", alpha, beta, n, len(classical_gammas), len(quantum_gammas))

    classical = parallel_map(lambda g: structure_constant(alpha, beta, g, n), classical_gammas, workers)
    quantum1 = parallel_map(lambda g: gw1(alpha, beta, dual(g, n), n), quantum_gammas, workers)
    return QuantumProduct(
        n=n,
        a=alpha,
        b=beta,
        classical=tuple((g, c) for g, c in zip(classical_gammas, classical) if c),
        quantum1=tuple((g, c) for g, c in zip(quantum_gammas, quantum1) if c),
    )
