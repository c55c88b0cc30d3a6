"""Cohomology classes as polynomials in the special classes.

A :class:`ClassExpr` is a polynomial in ``s1..sn`` (``si`` standing for the
special Schubert class of degree ``i``). Schubert classes of LG(n) are built
from the special ones in two stages: :func:`qtilde2` for two-part indices
and :func:`qtilde` (Pfaffian, by Laplace recursion) for longer ones.
:func:`to_chern_roots` turns a class into the symmetric polynomial in the
Chern roots ``x1..xn`` of the tautological sub-bundle that integration
works with.
"""

import itertools
import logging
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .combinat import StrictPartition, as_partition, dim_lg
from .exceptions import DegreeError, PartitionError, PreconditionError, VariableCountError
from .polyring import (
    Exponent,
    Rational,
    SparsePoly,
    elem_sym,
    format_terms,
    mul,
    mul_pruned,
    structured_products,
)

_logger = logging.getLogger(__name__)


def class_degree(e: Exponent) -> int:
    """Graded degree ``sum i*a_i`` of the monomial ``s1^a_1 .. sn^a_n``."""
    return sum((i + 1) * a for i, a in enumerate(e))


def _class_key(e: Exponent) -> tuple:
    return (-class_degree(e), tuple(-a for a in e))


def _sigma_monomial(e: Exponent) -> str:
    return "*".join(f"s{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in reversed(list(enumerate(e))) if a)


class ClassExpr:
    """A polynomial in the special classes ``s1..sn`` with exact coefficients.

    Terms are keyed by multi-degree vectors ``(a_1, .., a_n)`` standing for
    ``s1^a_1 .. sn^a_n``. Printing orders terms by graded degree, highest
    first, then lexicographically descending on the vector; each monomial is
    written with the largest generator first, e.g. ``s2*s1 - 2*s3``.

    Args:
        n: Rank; generators beyond ``sn`` do not exist.
        terms: Mapping (or pairs) from multi-degree vectors to coefficients.
    """

    __slots__ = ("_poly",)

    def __init__(self, n: int, terms: Mapping[Exponent, Rational] | Iterable[tuple[Exponent, Rational]] = ()):
        self._poly = SparsePoly(n, terms)

    @classmethod
    def _wrap(cls, poly: SparsePoly) -> "ClassExpr":
        obj = object.__new__(cls)
        obj._poly = poly
        return obj

    @classmethod
    def zero(cls, n: int) -> "ClassExpr":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "ClassExpr":
        return cls._wrap(SparsePoly.one(n))

    @property
    def n(self) -> int:
        return self._poly.nvars

    @property
    def terms(self) -> Mapping[Exponent, Rational]:
        return self._poly.terms

    @property
    def poly(self) -> SparsePoly:
        """The underlying polynomial in ``s1..sn`` as variables."""
        return self._poly

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def degrees(self) -> list[int]:
        return sorted({class_degree(e) for e in self._poly.terms})

    def top_degree(self) -> int:
        """Largest graded degree of a term; ``-1`` for the zero class."""
        return max((class_degree(e) for e in self._poly.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """The common degree of a nonzero homogeneous class, else ``None``."""
        degs = self.degrees()
        return degs[0] if len(degs) == 1 else None

    def homogeneous_part(self, d: int) -> "ClassExpr":
        return ClassExpr(self.n, {e: c for e, c in self._poly.terms.items() if class_degree(e) == d})

    def with_rank(self, m: int) -> "ClassExpr":
        """The same class read in rank *m*: indices kept, generators beyond ``sm`` set to zero."""
        n = self.n
        out: dict[Exponent, Rational] = {}
        for e, c in self._poly.terms.items():
            if m < n and any(e[m:]):
                continue
            out[(tuple(e[:m]) + (0,) * max(m - n, 0))] = c
        return ClassExpr(m, out)

    def items(self) -> list[tuple[Exponent, Rational]]:
        return sorted(self._poly.terms.items(), key=lambda t: _class_key(t[0]))

    def _coerce(self, other):
        if isinstance(other, ClassExpr):
            if other.n != self.n:
                raise VariableCountError(self.n, other.n, "rank")
            return other._poly
        if isinstance(other, (int, Fraction)):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else ClassExpr._wrap(self._poly + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else ClassExpr._wrap(self._poly - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else ClassExpr._wrap(other - self._poly)

    def __neg__(self) -> "ClassExpr":
        return ClassExpr._wrap(-self._poly)

    def __mul__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else ClassExpr._wrap(self._poly * other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ClassExpr":
        return ClassExpr._wrap(self._poly**k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassExpr):
            return NotImplemented
        return self._poly == other._poly

    def __hash__(self) -> int:
        return hash(("ClassExpr", self._poly))

    def __str__(self) -> str:
        return format_terms(self.items(), _sigma_monomial)

    def __repr__(self) -> str:
        return f"ClassExpr({self.n}, '{self}')"


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"rank must be a positive integer, got {n!r}")


def special(i: int, n: int) -> ClassExpr:
    """``s_i`` in rank *n*: the constant 1 for ``i = 0`` and zero outside ``[0, n]``."""
    _check_rank(n)
    if i == 0:
        return ClassExpr.one(n)
    if not 1 <= i <= n:
        return ClassExpr.zero(n)
    e = [0] * n
    e[i - 1] = 1
    return ClassExpr(n, {tuple(e): 1})


@lru_cache(maxsize=1024)
def _pair(i: int, j: int, n: int) -> ClassExpr:
    total = special(i, n) * special(j, n)
    for k in range(1, n - i + 1):
        term = special(i + k, n) * special(j - k, n)
        total = total + (2 * term if k % 2 == 0 else -2 * term)
    return total


def qtilde2(i: int, j: int, n: int) -> ClassExpr:
    """Two-index class ``Q_i Q_j + 2 sum_{k=1}^{n-i} (-1)^k Q_{i+k} Q_{j-k}``.

    Raises:
        PartitionError: Unless ``n >= i > j > 0``.

    Example:
        >>> str(qtilde2(2, 1, 3))
        's2*s1 - 2*s3'
    """
    _check_rank(n)
    if not n >= i > j > 0:
        raise PartitionError(f"two-index class needs n >= i > j > 0, got i={i}, j={j}, n={n}")
    return _pair(i, j, n)


@lru_cache(maxsize=4096)
def _laplace(parts: tuple[int, ...], n: int) -> ClassExpr:
    if not parts:
        return ClassExpr.one(n)
    if len(parts) == 1:
        return special(parts[0], n)
    if len(parts) == 2:
        return _pair(parts[0], parts[1], n)
    if len(parts) % 2:
        parts = parts + (0,)
    last, rest = parts[-1], parts[:-1]
    total = ClassExpr.zero(n)
    for k, a in enumerate(rest):
        term = _pair(a, last, n) * _laplace(rest[:k] + rest[k + 1 :], n)
        total = total - term if k % 2 else total + term
    return total


def qtilde(alpha: StrictPartition | Sequence[int], n: int) -> ClassExpr:
    """Schubert class ``Q_alpha`` of LG(n) as a polynomial in the special classes.

    Uses the Laplace expansion of the Pfaffian along its last index; an odd
    number of parts is padded with a zero part, ``Q_{m,0}`` meaning ``Q_m``.

    Raises:
        PartitionError: If *alpha* is not in D_n.
    """
    _check_rank(n)
    alpha = as_partition(alpha, n)
    return _laplace(alpha.parts, n)


def _matchings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, other)] + tail


def _crossings(matching: list[tuple[int, int]]) -> int:
    return sum(1 for (a, b), (c, d) in itertools.combinations(matching, 2) if a < c < b < d or c < a < d < b)


def qtilde_pfaffian(alpha: StrictPartition | Sequence[int], n: int) -> ClassExpr:
    """``Q_alpha`` expanded directly as a Pfaffian: a sum over perfect matchings signed by crossing parity."""
    _check_rank(n)
    parts = as_partition(alpha, n).parts
    if len(parts) % 2:
        parts = parts + (0,)
    total = ClassExpr.zero(n)
    for matching in _matchings(list(range(len(parts)))):
        term = ClassExpr.one(n)
        for a, b in matching:
            term = term * _pair(parts[a], parts[b], n)
        total = total - term if _crossings(matching) % 2 else total + term
    return total


@lru_cache(maxsize=4096)
def _root_monomial(e: Exponent, n: int, cap: int | None) -> SparsePoly:
    if not any(e):
        return SparsePoly.one(n)
    i = max(k for k, a in enumerate(e) if a)
    lower = e[:i] + (e[i] - 1,) + e[i + 1 :]
    factor = elem_sym(i + 1, n)
    if (i + 1) % 2:
        factor = -factor
    prev = _root_monomial(lower, n, cap)
    return mul(prev, factor) if cap is None else mul_pruned(prev, factor, cap)


def to_chern_roots(c: ClassExpr, cap: int | None = None) -> SparsePoly:
    """Substitute ``s_i -> (-1)^i e_i(x1..xn)``.

    Args:
        c: The class.
        cap: Optional per-variable exponent bound; terms beyond it are pruned
            while expanding (see :func:`~lgschubert.polyring.mul_pruned`).

    Returns:
        A symmetric polynomial in ``n`` variables (pruned if *cap* is given).
    """
    if cap is not None and cap < 0:
        raise DegreeError(f"exponent cap must be nonnegative, got {cap}")
    n = c.n
    acc: dict[Exponent, Rational] = {}
    for e, coef in c.terms.items():
        for m, v in _root_monomial(e, n, cap).terms.items():
            acc[m] = acc.get(m, 0) + coef * v
    return SparsePoly(n, acc)


def schubert_staircase_poly(n: int) -> SparsePoly:
    """Chern-root representative ``(-1)^{n(n-1)/2} prod_{i<j} (x_i + x_j)`` of the staircase class on G(n, 2n)."""
    plus = structured_products(n).plusprod
    return -plus if (n * (n - 1) // 2) % 2 else plus


@lru_cache(maxsize=256)
def _sigma_vectors(d: int, top: int) -> tuple[Exponent, ...]:
    if top == 0:
        return ((),) if d == 0 else ()
    out = []
    for a in range(d // top, -1, -1):
        out.extend(rest + (a,) for rest in _sigma_vectors(d - a * top, top - 1))
    return tuple(out)


def sigma_monomials(n: int, d: int) -> list[Exponent]:
    """All multi-degree vectors ``(a_1..a_n)`` of graded degree *d*."""
    _check_rank(n)
    if d < 0:
        raise DegreeError(f"degree must be nonnegative, got {d}")
    return list(_sigma_vectors(d, n))


def random_class(
    n: int,
    rng: random.Random,
    degree: int | None = None,
    terms: int = 3,
    homogeneous: bool = True,
    rational: bool = False,
) -> ClassExpr:
    """A random class of rank *n* for property checks.

    Args:
        degree: Degree (or degree bound when not *homogeneous*); defaults to ``n(n+1)/2``.
        terms: Number of monomials drawn.
        homogeneous: Draw every monomial in degree *degree* exactly.
        rational: Allow non-integral coefficients.
    """
    top = dim_lg(n) if degree is None else degree
    out: dict[Exponent, Rational] = {}
    for _ in range(terms):
        d = top if homogeneous else rng.randint(0, top)
        e = rng.choice(sigma_monomials(n, d))
        coef: Rational = rng.choice([k for k in range(-5, 6) if k])
        if rational:
            coef = Fraction(coef, rng.randint(1, 4))
        out[e] = out.get(e, 0) + coef
    return ClassExpr(n, out)
