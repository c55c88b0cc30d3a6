"""Exact sparse multivariate polynomials over the rationals.

:class:`SparsePoly` maps exponent tuples to nonzero coefficients, stored as
``int`` when integral and :class:`fractions.Fraction` otherwise. Values are
canonical and immutable: equal polynomials have equal term maps, and every
operation returns a new value.

Integrals only ever need a single coefficient of a large product, so the
package's hot path is :func:`pruned_product` (iterated :func:`mul_pruned`)
followed by :func:`coefficient_of_product`, which reads one coefficient of a
product without forming it.
"""

import itertools
import logging
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from .exceptions import DegreeError, PreconditionError, VariableCountError

Exponent = tuple[int, ...]
Rational = int | Fraction

_logger = logging.getLogger(__name__)


def as_rational(value: int | Fraction | str) -> Rational:
    """Return *value* as an exact rational, collapsed to ``int`` when integral.

    Raises:
        TypeError: For floats, which are never exact enough here.
    """
    if isinstance(value, float):
        raise TypeError(f"floating-point value {value!r} is not an exact rational")
    q = value if isinstance(value, Fraction) else Fraction(value)
    return q.numerator if q.denominator == 1 else q


def format_rational(value: Rational) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when it is an integer."""
    q = Fraction(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _canon(value: Rational) -> Rational:
    if type(value) is Fraction and value.denominator == 1:
        return value.numerator
    return value


def graded_lex_key(e: Exponent) -> tuple:
    """Sort key putting higher total degree first, then lexicographically larger exponents."""
    return (-sum(e), tuple(-a for a in e))


def format_terms(items: Iterable[tuple[Exponent, Rational]], monomial: Callable[[Exponent], str]) -> str:
    """Render ``(exponent, coefficient)`` pairs as ``"c*m + ..."`` in the given order.

    Args:
        items: Terms in display order.
        monomial: Renders the variable part of one exponent vector (``""`` for 1).
    """
    out: list[str] = []
    for e, c in items:
        mono = monomial(e)
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out) if out else "0"


def _x_monomial(e: Exponent) -> str:
    return "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)


class SparsePoly:
    """Immutable polynomial in ``x1..x_nvars`` with exact rational coefficients.

    Args:
        nvars: Number of variables (positive).
        terms: Mapping (or iterable of pairs) from exponent vectors to
            coefficients. Repeated exponents are summed and zero results dropped.

    Raises:
        PreconditionError: If *nvars* is not positive.
        VariableCountError: If an exponent vector has the wrong length.
        DegreeError: If an exponent is negative.

    Example:
        >>> p = SparsePoly(2, {(1, 0): 1, (0, 1): 1})
        >>> str(p * p)
        'x1^2 + 2*x1*x2 + x2^2'
    """

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Rational] | Iterable[tuple[Exponent, Rational]] = ()):
        if not isinstance(nvars, int) or nvars < 1:
            raise PreconditionError(f"nvars must be a positive integer, got {nvars!r}")
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Rational] = {}
        for e, c in pairs:
            e = tuple(int(a) for a in e)
            if len(e) != nvars:
                raise VariableCountError(nvars, len(e), "exponent length")
            if any(a < 0 for a in e):
                raise DegreeError(f"negative exponent in {e}")
            acc[e] = acc.get(e, 0) + as_rational(c)
        self._nvars = nvars
        self._terms = {e: _canon(c) for e, c in acc.items() if c}
        self._hash: int | None = None

    @classmethod
    def _make(cls, nvars: int, terms: dict[Exponent, Rational]) -> "SparsePoly":
        obj = object.__new__(cls)
        obj._nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, value: Rational, nvars: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "SparsePoly":
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "SparsePoly":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise VariableCountError(nvars, i, "variable index")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponent, Rational]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[Exponent, Rational]]:
        """Terms in graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: graded_lex_key(t[0]))

    def total_degree(self) -> int:
        """Largest total degree of a term; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degrees(self) -> list[int]:
        return sorted({sum(e) for e in self._terms})

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly._make(self._nvars, {e: c for e, c in self._terms.items() if sum(e) == d})

    def permuted(self, perm: Sequence[int]) -> "SparsePoly":
        """Substitute ``x_k -> x_{perm[k]}`` (0-based positions)."""
        if sorted(perm) != list(range(self._nvars)):
            raise VariableCountError(self._nvars, len(perm), "permutation length")
        out: dict[Exponent, Rational] = {}
        for e, c in self._terms.items():
            f = [0] * self._nvars
            for k, a in enumerate(e):
                f[perm[k]] = a
            out[tuple(f)] = c
        return SparsePoly._make(self._nvars, out)

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(other, self._nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._make(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return SparsePoly.zero(self._nvars)
            return SparsePoly._make(self._nvars, {e: _canon(c * other) for e, c in self._terms.items()})
        if isinstance(other, SparsePoly):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if not isinstance(k, int) or k < 0:
            raise DegreeError(f"exponent must be a nonnegative integer, got {k!r}")
        result = SparsePoly.one(self._nvars)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_terms(self.items(), _x_monomial)

    def __repr__(self) -> str:
        return f"SparsePoly({self._nvars}, '{self}')"


def _check_same(p: SparsePoly, q: SparsePoly) -> None:
    if p.nvars != q.nvars:
        raise VariableCountError(p.nvars, q.nvars)


def _strip(acc: dict[Exponent, Rational]) -> dict[Exponent, Rational]:
    return {e: _canon(c) for e, c in acc.items() if c}


def add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Term-wise sum of two polynomials in the same variables."""
    _check_same(p, q)
    out = dict(p._terms)
    for e, c in q._terms.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = _canon(v)
        else:
            out.pop(e, None)
    return SparsePoly._make(p.nvars, out)


def mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Full product of two polynomials in the same variables."""
    _check_same(p, q)
    acc: dict[Exponent, Rational] = {}
    get = acc.get
    plus = operator.add
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            e = tuple(map(plus, e1, e2))
            acc[e] = get(e, 0) + c1 * c2
    return SparsePoly._make(p.nvars, _strip(acc))


def _caps(cap: int | Sequence[int], nvars: int) -> Exponent:
    caps = (cap,) * nvars if isinstance(cap, int) else tuple(cap)
    if len(caps) != nvars:
        raise VariableCountError(nvars, len(caps), "cap length")
    if any(c < 0 for c in caps):
        raise DegreeError(f"exponent cap must be nonnegative, got {cap}")
    return caps


def _within(e: Exponent, caps: Exponent) -> bool:
    return all(a <= b for a, b in zip(e, caps))


def mul_pruned(p: SparsePoly, q: SparsePoly, cap: int | Sequence[int]) -> SparsePoly:
    """Product of *p* and *q* keeping only monomials whose exponents are all within *cap*.

    Every monomial inside the cap gets exactly the coefficient it has in the
    full product, because exponents only grow under multiplication.

    Args:
        cap: A uniform per-variable bound, or one bound per variable.
    """
    _check_same(p, q)
    caps = _caps(cap, p.nvars)
    left = [(e, c) for e, c in p._terms.items() if _within(e, caps)]
    right = [(e, c) for e, c in q._terms.items() if _within(e, caps)]
    acc: dict[Exponent, Rational] = {}
    get = acc.get
    plus = operator.add
    uniform = len(set(caps)) == 1
    bound = caps[0]
    for e1, c1 in left:
        for e2, c2 in right:
            e = tuple(map(plus, e1, e2))
            if (max(e) > bound) if uniform else not _within(e, caps):
                continue
            acc[e] = get(e, 0) + c1 * c2
    return SparsePoly._make(p.nvars, _strip(acc))


def pruned_product(factors: Iterable[SparsePoly], cap: int | Sequence[int], nvars: int) -> SparsePoly:
    """Iterated :func:`mul_pruned` over *factors*, starting from 1."""
    result = SparsePoly.one(nvars)
    count = 0
    for f in factors:
        result = mul_pruned(result, f, cap)
        count += 1
    _logger.debug("pruned product of %d factors in %d variables, cap %s: %d terms", count, nvars, cap, len(result))
    return result


def _check_exponent(p: SparsePoly, e: Sequence[int]) -> Exponent:
    e = tuple(e)
    if len(e) != p.nvars:
        raise VariableCountError(p.nvars, len(e), "exponent length")
    return e


def coeff(p: SparsePoly, e: Sequence[int]) -> Rational:
    """Exact coefficient of the monomial ``x^e`` in *p* (zero when absent)."""
    return p._terms.get(_check_exponent(p, e), 0)


def coefficient_of_product(p: SparsePoly, q: SparsePoly, e: Sequence[int]) -> Rational:
    """Coefficient of ``x^e`` in ``p*q``, computed without forming the product."""
    _check_same(p, q)
    target = _check_exponent(p, e)
    small, large = (p, q) if len(p) <= len(q) else (q, p)
    lookup = large._terms.get
    total: Rational = 0
    for m, c in small._terms.items():
        rest = tuple(t - a for t, a in zip(target, m))
        if min(rest) < 0:
            continue
        other = lookup(rest)
        if other:
            total += c * other
    return _canon(total)


def evaluate(p: SparsePoly, point: Sequence[Rational]) -> Rational:
    """Exact value of *p* at *point*."""
    if len(point) != p.nvars:
        raise VariableCountError(p.nvars, len(point), "point length")
    values = [as_rational(t) for t in point]
    powers: list[dict[int, Rational]] = [{} for _ in values]
    total: Rational = 0
    for e, c in p._terms.items():
        term = c
        for i, k in enumerate(e):
            if k:
                table = powers[i]
                v = table.get(k)
                if v is None:
                    v = table[k] = values[i] ** k
                term *= v
        total += term
    return _canon(total)


def is_symmetric(p: SparsePoly) -> bool:
    """True iff *p* is fixed by every adjacent transposition of its variables."""
    terms = p._terms
    for i in range(p.nvars - 1):
        for e, c in terms.items():
            if e[i] == e[i + 1]:
                continue
            swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2 :]
            if terms.get(swapped) != c:
                return False
    return True


@lru_cache(maxsize=256)
def elem_sym(i: int, n: int) -> SparsePoly:
    """Elementary symmetric polynomial ``e_i(x1..xn)``; 1 for ``i = 0`` and 0 for ``i > n``."""
    if i < 0:
        raise DegreeError(f"elementary symmetric index must be nonnegative, got {i}")
    terms = {}
    for combo in itertools.combinations(range(n), i):
        e = [0] * n
        for k in combo:
            e[k] = 1
        terms[tuple(e)] = 1
    return SparsePoly(n, terms)


def _linear(nvars: int, i: int, j: int, sign: int) -> SparsePoly:
    e_i = [0] * nvars
    e_j = [0] * nvars
    e_i[i] = 1
    e_j[j] = 1
    return SparsePoly._make(nvars, {tuple(e_i): 1, tuple(e_j): sign})


def difference_factors(n: int, ordered: bool = False) -> tuple[SparsePoly, ...]:
    """Linear factors ``x_i - x_j`` over ``i < j``, or over all ``i != j`` when *ordered*."""
    pairs = itertools.permutations(range(n), 2) if ordered else itertools.combinations(range(n), 2)
    return tuple(_linear(n, i, j, -1) for i, j in pairs)


def sum_factors(n: int) -> tuple[SparsePoly, ...]:
    """Linear factors ``x_i + x_j`` over ``i < j``."""
    return tuple(_linear(n, i, j, 1) for i, j in itertools.combinations(range(n), 2))


@dataclass(frozen=True)
class StructuredProducts:
    """The three structured products of rank *n*.

    Attributes:
        vandermonde: ``prod_{i<j} (x_i - x_j)``.
        discriminant: ``prod_{i!=j} (x_i - x_j)``.
        plusprod: ``prod_{i<j} (x_i + x_j)``.
    """

    vandermonde: SparsePoly
    discriminant: SparsePoly
    plusprod: SparsePoly


def _full_product(factors: Iterable[SparsePoly], n: int) -> SparsePoly:
    result = SparsePoly.one(n)
    for f in factors:
        result = mul(result, f)
    return result


@lru_cache(maxsize=16)
def structured_products(n: int) -> StructuredProducts:
    """Vandermonde, discriminant and ``prod (x_i + x_j)`` in *n* variables, fully expanded."""
    if n < 1:
        raise PreconditionError(f"structured products need n >= 1, got {n}")
    return StructuredProducts(
        vandermonde=_full_product(difference_factors(n), n),
        discriminant=_full_product(difference_factors(n, ordered=True), n),
        plusprod=_full_product(sum_factors(n), n),
    )
