import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lgschubert import ClassExpr, ExpressionSyntaxError, parse_class_expr, qtilde, qtilde2, random_class, special
from lgschubert.parser import tokenize


def s(i, n=3):
    return special(i, n)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("s1", s(1)),
        ("s2*s1 - 2*s3", qtilde2(2, 1, 3)),
        ("s2*s1-2*s3", qtilde2(2, 1, 3)),
        ("s1^2*s2^2", s(1) ** 2 * s(2) ** 2),
        ("-s1^2", -(s(1) ** 2)),
        ("(s1 + s2)^2", (s(1) + s(2)) ** 2),
        ("2 + 3*s1", 2 + 3 * s(1)),
        ("s1 - s2 - s3", s(1) - s(2) - s(3)),
        ("s3*s2*s1 - 2*s3^2", qtilde((3, 2, 1), 3)),
        ("0", ClassExpr.zero(3)),
        ("s1^0", ClassExpr.one(3)),
        ("2*-s1", -2 * s(1)),
    ],
)
def test_parse_examples(text, expected):
    assert parse_class_expr(text, 3) == expected


def test_multiplication_binds_tighter_than_addition():
    assert parse_class_expr("s1 + s2*s3", 3) == s(1) + s(2) * s(3)
    assert parse_class_expr("s1*s2 + s3", 3) == s(1) * s(2) + s(3)


@pytest.mark.parametrize(
    ("text", "position", "fragment"),
    [
        ("s1 + x", 5, "unexpected character 'x'"),
        ("s", 0, "needs an index"),
        ("s1^", 3, "expected an exponent"),
        ("(s1 + s2", 8, "expected ')'"),
        ("s4", 0, "outside s1..s3"),
        ("s0*s1", 0, "outside s1..s3"),
        ("s1 s2", 3, "unexpected '2'"),
        ("s1 +", 4, "end of input"),
        ("", 0, "end of input"),
    ],
)
def test_syntax_errors_carry_positions(text, position, fragment):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse_class_expr(text, 3)
    assert exc.value.position == position
    assert fragment in str(exc.value)
    assert str(exc.value).endswith(f"at position {position}")


def test_tokens():
    kinds = [t.kind for t in tokenize("s12*(3 - s1)^2")]
    assert kinds == ["gen", "op", "(", "int", "op", "gen", ")", "op", "int", "end"]
    assert tokenize("s12")[0].value == 12


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.booleans(), st.randoms(use_true_random=False))
def test_printed_classes_parse_back(n, rational, rnd):
    c = random_class(n, rnd, degree=rnd.randint(0, 6), terms=4, homogeneous=False, rational=rational)
    if rational:
        c = c * 12
    assert parse_class_expr(str(c), n) == c
