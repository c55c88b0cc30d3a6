"""Strict partitions, duals, staircases and signed torus weights.

:class:`StrictPartition` is an element of D_n, the strict partitions with
parts bounded by ``n``. D_n is in bijection with the subsets of ``{1..n}``,
which is what :func:`dual` (complement) and :func:`strict_partitions`
(subsets of a given sum) exploit.

:class:`SignedAssignment` is one torus fixed point of LG(n): a subset
``I`` of ``{1..n}`` together with the weight vector that keeps ``lambda_i``
for ``i`` in ``I`` and negates it otherwise.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exceptions import AdmissibilityError, PartitionError
from .polyring import Rational, as_rational

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StrictPartition:
    """A strict partition with parts in ``[1, n]``.

    Attributes:
        parts: Strictly decreasing positive parts, no trailing zeros.
        n: Ambient bound.

    Raises:
        PartitionError: If the parts are not strictly decreasing or leave ``[1, n]``.
    """

    parts: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if self.n < 0:
            raise PartitionError(f"partition bound must be nonnegative, got n={self.n}")
        if any(a <= b for a, b in zip(self.parts, self.parts[1:])):
            raise PartitionError(f"parts {self.parts} are not strictly decreasing")
        if self.parts and (self.parts[-1] < 1 or self.parts[0] > self.n):
            raise PartitionError(f"parts {self.parts} are not in [1, {self.n}]")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


def as_partition(alpha: StrictPartition | Sequence[int], n: int) -> StrictPartition:
    """Return *alpha* as a member of D_n, validating membership."""
    parts = alpha.parts if isinstance(alpha, StrictPartition) else tuple(alpha)
    return StrictPartition(parts, n)


def dim_lg(n: int) -> int:
    """Dimension ``n(n+1)/2`` of LG(n), also the weight of the full staircase ``(n, .., 1)``."""
    return n * (n + 1) // 2


def dual(alpha: StrictPartition | Sequence[int], n: int) -> StrictPartition:
    """Poincare dual index: the parts of ``{1..n}`` not used by *alpha*, decreasing.

    Example:
        >>> dual((3, 2), 3).parts
        (1,)
    """
    alpha = as_partition(alpha, n)
    used = set(alpha.parts)
    return StrictPartition(tuple(k for k in range(n, 0, -1) if k not in used), n)


@lru_cache(maxsize=256)
def _strict_parts(top: int, remaining: int) -> tuple[tuple[int, ...], ...]:
    if remaining == 0:
        return ((),)
    out = []
    for first in range(min(top, remaining), 0, -1):
        if first * (first + 1) // 2 < remaining:
            break
        out.extend((first,) + rest for rest in _strict_parts(first - 1, remaining - first))
    return tuple(out)


def strict_partitions(n: int, w: int) -> list[StrictPartition]:
    """All members of D_n of weight *w*, lexicographically descending.

    Raises:
        PartitionError: If *w* is outside ``[0, n(n+1)/2]``.
    """
    if n < 0 or not 0 <= w <= dim_lg(n):
        raise PartitionError(f"weight {w} outside [0, {dim_lg(max(n, 0))}] for n={n}")
    return [StrictPartition(parts, n) for parts in _strict_parts(n, w)]


def all_strict_partitions(n: int) -> list[StrictPartition]:
    """The whole of D_n, by increasing weight."""
    return [alpha for w in range(dim_lg(n) + 1) for alpha in strict_partitions(n, w)]


def staircase(n: int) -> StrictPartition:
    """The staircase ``(n-1, .., 1)``, empty for ``n = 1``."""
    if n < 1:
        raise PartitionError(f"staircase needs n >= 1, got {n}")
    return StrictPartition(tuple(range(n - 1, 0, -1)), n)


def parse_partition(text: str, n: int | None = None) -> StrictPartition:
    """Parse ``"3,2,1"`` style text; ``""`` and ``"0"`` denote the empty partition.

    Args:
        text: Comma-separated decreasing positive integers.
        n: Ambient bound; defaults to the largest part.

    Raises:
        PartitionError: On malformed text or parts outside D_n.
    """
    body = text.strip()
    if body in ("", "0"):
        parts: tuple[int, ...] = ()
    else:
        try:
            parts = tuple(int(tok) for tok in body.split(","))
        except ValueError:
            raise PartitionError(f"malformed partition text {text!r}") from None
    return StrictPartition(parts, max(parts, default=0) if n is None else n)


def format_partition(alpha: StrictPartition | Sequence[int]) -> str:
    parts = alpha.parts if isinstance(alpha, StrictPartition) else tuple(alpha)
    return ",".join(str(p) for p in parts)


@dataclass(frozen=True)
class SignedAssignment:
    """One fixed point ``p_I`` of LG(n).

    Attributes:
        n: Rank.
        subset: ``I`` as a sorted tuple of 1-based indices.
        lambdas: The admissible base weights.
        signed: ``lambda_I``: entry ``i`` is ``lambda_i`` if ``i`` is in ``I``, else ``-lambda_i``.
    """

    n: int
    subset: tuple[int, ...]
    lambdas: tuple[Rational, ...]
    signed: tuple[Rational, ...]

    @property
    def size(self) -> int:
        return len(self.subset)


def is_admissible(lambdas: Sequence[Rational]) -> bool:
    """True iff all weights are nonzero with pairwise-distinct squares."""
    squares = [Fraction(v) ** 2 for v in lambdas]
    return all(squares) and len(set(squares)) == len(squares)


def check_admissible(lambdas: Sequence[Rational], n: int) -> tuple[Rational, ...]:
    """Validate and normalise LG(n) torus weights.

    Raises:
        AdmissibilityError: On wrong length, zero entries or equal squares.
    """
    values = tuple(as_rational(v) for v in lambdas)
    if len(values) != n:
        raise AdmissibilityError(f"expected {n} weights, got {len(values)}", values)
    if not is_admissible(values):
        raise AdmissibilityError("weights must be nonzero with pairwise-distinct squares", values)
    return values


def check_distinct(lambdas: Sequence[Rational], m: int) -> tuple[Rational, ...]:
    """Validate ``m`` pairwise-distinct Grassmannian weights."""
    values = tuple(as_rational(v) for v in lambdas)
    if len(values) != m:
        raise AdmissibilityError(f"expected {m} weights, got {len(values)}", values)
    if len(set(values)) != m:
        raise AdmissibilityError("weights must be pairwise distinct", values)
    return values


def signed_assignments(lambdas: Sequence[Rational], n: int) -> Iterator[SignedAssignment]:
    """All ``2^n`` fixed points, subsets enumerated by a binary counter.

    Bit ``i`` of the counter decides whether ``i+1`` belongs to ``I``; the
    first assignment is ``I = {}`` with every weight negated.
    """
    values = check_admissible(lambdas, n)
    for mask in range(1 << n):
        subset = tuple(i + 1 for i in range(n) if mask >> i & 1)
        signed = tuple(v if mask >> i & 1 else -v for i, v in enumerate(values))
        yield SignedAssignment(n, subset, values, signed)


def random_admissible_lambdas(n: int, rng: random.Random) -> tuple[int, ...]:
    """``n`` distinct integers drawn from ``[1, 10n]``; positive and distinct, hence admissible."""
    return tuple(rng.sample(range(1, 10 * n + 1), n))


def random_distinct_weights(m: int, rng: random.Random) -> tuple[int, ...]:
    """``m`` distinct integers drawn from ``[-5m, 5m]``, for Grassmannian localization."""
    return tuple(rng.sample(range(-5 * m, 5 * m + 1), m))
