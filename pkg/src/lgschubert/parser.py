"""Parser for class expressions such as ``s2*s1 - 2*s3``.

Grammar (precedence climbing over the binary operators)::

    expr   := factor (('+' | '-' | '*') factor)*     with '*' binding tighter
    factor := '-' factor | atom ('^' uint)?
    atom   := 's' digit+ | uint | '(' expr ')'

Generators ``s1 .. sn`` are the special classes of the rank the expression is
parsed in. Errors carry the 0-based position of the offending token.
"""

from dataclasses import dataclass

from .exceptions import ExpressionSyntaxError
from .symclasses import ClassExpr, special

_BINARY = {"+": 1, "-": 1, "*": 2}


@dataclass(frozen=True)
class Token:
    kind: str
    value: int | str
    pos: int


def tokenize(text: str) -> list[Token]:
    """Split *text* into generator, integer, operator and parenthesis tokens, ending with ``end``."""
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "s":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ExpressionSyntaxError("generator 's' needs an index", i)
            tokens.append(Token("gen", int(text[i + 1 : j]), i))
            i = j
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", int(text[i:j]), i))
            i = j
        elif ch in "+-*^":
            tokens.append(Token("op", ch, i))
            i += 1
        elif ch in "()":
            tokens.append(Token(ch, ch, i))
            i += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], n: int):
        self.tokens = tokens
        self.n = n
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.advance()
        if tok.kind != kind:
            raise ExpressionSyntaxError(f"expected {what}, found {_describe(tok)}", tok.pos)
        return tok

    def expression(self, min_prec: int = 1) -> ClassExpr:
        lhs = self.factor()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.value not in _BINARY or _BINARY[tok.value] < min_prec:
                return lhs
            self.advance()
            rhs = self.expression(_BINARY[tok.value] + 1)
            if tok.value == "+":
                lhs = lhs + rhs
            elif tok.value == "-":
                lhs = lhs - rhs
            else:
                lhs = lhs * rhs

    def factor(self) -> ClassExpr:
        tok = self.peek()
        if tok.kind == "op" and tok.value == "-":
            self.advance()
            return -self.factor()
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.value == "^":
            self.advance()
            return base ** self.expect("int", "an exponent").value
        return base

    def atom(self) -> ClassExpr:
        tok = self.advance()
        if tok.kind == "gen":
            if not 1 <= tok.value <= self.n:
                raise ExpressionSyntaxError(f"generator s{tok.value} outside s1..s{self.n}", tok.pos)
            return special(tok.value, self.n)
        if tok.kind == "int":
            return ClassExpr.one(self.n) * tok.value
        if tok.kind == "(":
            inner = self.expression()
            self.expect(")", "')'")
            return inner
        raise ExpressionSyntaxError(f"unexpected {_describe(tok)}", tok.pos)


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "end" else repr(str(tok.value))


def parse_class_expr(text: str, n: int) -> ClassExpr:
    """Parse *text* into a :class:`~lgschubert.symclasses.ClassExpr` of rank *n*.

    Raises:
        ExpressionSyntaxError: On malformed text or a generator beyond ``sn``.

    Example:
        >>> str(parse_class_expr("s2*s1-2*s3", 3))
        's2*s1 - 2*s3'
    """
    parser = _Parser(tokenize(text), n)
    result = parser.expression()
    tok = parser.peek()
    if tok.kind != "end":
        raise ExpressionSyntaxError(f"unexpected {_describe(tok)}", tok.pos)
    return result
