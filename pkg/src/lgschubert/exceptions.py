"""Exception hierarchy for lg-schubert.

All library exceptions inherit from :class:`LGSchubertError`. Two branches
split them by meaning: :class:`PreconditionError` for inputs that violate a
documented precondition, and :class:`InvariantViolationError` for hard
postconditions (integrality, route agreement) that failed. The CLI maps the
first branch to exit code 2 and the second to exit code 3.
"""

from typing import Any


class LGSchubertError(Exception):
    """Base exception for all lg-schubert errors."""

    pass


class PreconditionError(LGSchubertError):
    """Raised when an operation receives input outside its domain.

    Attributes:
        condition: Human-readable statement of the violated condition.
    """

    def __init__(self, condition: str):
        super().__init__(condition)
        self.condition = condition


class VariableCountError(PreconditionError):
    """Raised when polynomials or vectors disagree on their number of variables.

    Attributes:
        expected: The variable count required by the operation.
        actual: The variable count that was supplied.
    """

    def __init__(self, expected: int, actual: int, what: str = "variable count"):
        super().__init__(f"{what} mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class DegreeError(PreconditionError):
    """Raised when a degree or exponent bound is violated."""

    pass


class PartitionError(PreconditionError):
    """Raised for partitions outside D_n, bad weights, or malformed partition text."""

    pass


class AdmissibilityError(PreconditionError):
    """Raised when torus weights or roots are not admissible.

    Attributes:
        values: The offending weight (or root) vector.
    """

    def __init__(self, msg: str, values: Any = None):
        super().__init__(msg)
        self.values = values


class SymmetryError(PreconditionError):
    """Raised when a symmetric polynomial is required and the input is not symmetric."""

    def __init__(self, what: str = "polynomial"):
        super().__init__(f"{what} must be symmetric in its variables")


class UnsupportedDegreeError(PreconditionError):
    """Raised for quantum products whose expansion could contain q^2 terms."""

    pass


class RankLimitError(PreconditionError):
    """Raised when a rank is outside ``1 <= n <= max_rank``.

    Attributes:
        n: The requested rank.
        limit: The configured maximum.
    """

    def __init__(self, n: int, limit: int):
        super().__init__(f"rank n={n} outside the supported range 1 <= n <= {limit}")
        self.n = n
        self.limit = limit


class ExpressionSyntaxError(PreconditionError):
    """Raised when a class expression cannot be parsed.

    Attributes:
        position: 0-based offset into the source text.
    """

    def __init__(self, msg: str, position: int):
        super().__init__(f"{msg} at position {position}")
        self.position = position


class ConfigurationError(LGSchubertError):
    """Raised for settings problems (unreadable sources, unknown keys, bad values)."""

    def __init__(self, msg: str):
        super().__init__(msg)


class InvariantViolationError(LGSchubertError):
    """Raised when a computed value breaks a hard postcondition.

    This always signals a transcription or implementation error, never bad input.
    """

    pass


class IntegralityError(InvariantViolationError):
    """Raised when an enumerative count is not a nonnegative integer.

    Attributes:
        what: Description of the quantity.
        value: The offending exact value.
    """

    def __init__(self, what: str, value: Any):
        super().__init__(f"{what} must be a nonnegative integer, got {value}")
        self.what = what
        self.value = value


class RouteMismatchError(InvariantViolationError):
    """Raised when two independent computations of the same number disagree.

    Attributes:
        values: Mapping of route name to computed value.
    """

    def __init__(self, what: str, values: dict):
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        super().__init__(f"{what}: routes disagree ({detail})")
        self.values = dict(values)
