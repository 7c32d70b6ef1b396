"""
Tiny series expression language for the ``series`` subcommand.

Grammar::

    expr    := term (("+" | "-") term)*
    term    := unary ("*"? unary)*          juxtaposition multiplies: 5t^2
    unary   := "-" unary | power
    power   := primary ("^" INT)?
    primary := INT | "t" | "(" expr ")" | call
    call    := ("delta" | "Delta") "(" INT "," INT ")"
             | ("head" | "tail") "(" expr ")"
             | "max" "(" expr "," expr ")"

Errors carry the 0-based character position where parsing stopped.
"""

import re
from collections.abc import Callable
from dataclasses import dataclass

from ..algebra.series import IntSeries
from ..exceptions import ExpressionParseError
from ..services.closed_forms import big_delta, delta

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(\S))")

_UNARY_CALLS: dict[str, Callable[[IntSeries], IntSeries]] = {
    "head": IntSeries.head_truncate,
    "tail": IntSeries.tail_truncate,
}
_INT_CALLS: dict[str, Callable[[int, int], IntSeries]] = {"delta": delta, "Delta": big_delta}


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:  # only trailing whitespace is left
            break
        number, name, op = match.groups()
        start = match.start(match.lastindex or 0)
        if number is not None:
            tokens.append(Token("int", number, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        elif op is not None:
            if op not in "+-*^(),":
                raise ExpressionParseError(f"unexpected character {op!r}", start)
            tokens.append(Token("op", op, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionParser:
    """Recursive-descent evaluator over the token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _expect(self, op: str) -> Token:
        token = self.current
        if token.kind != "op" or token.text != op:
            found = token.text or "end of input"
            raise ExpressionParseError(f"expected {op!r}, found {found!r}", token.pos)
        return self._advance()

    def _is_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def _starts_primary(self) -> bool:
        return self.current.kind in ("int", "name") or self._is_op("(")

    def parse(self) -> IntSeries:
        if self.current.kind == "end":
            raise ExpressionParseError("empty expression", 0)
        value = self._expr()
        if self.current.kind != "end":
            raise ExpressionParseError(f"unexpected {self.current.text!r}", self.current.pos)
        return value

    def _expr(self) -> IntSeries:
        value = self._term()
        while self._is_op("+", "-"):
            op = self._advance().text
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> IntSeries:
        value = self._unary()
        while self._is_op("*") or self._starts_primary():
            if self._is_op("*"):
                self._advance()
            value = value * self._unary()
        return value

    def _unary(self) -> IntSeries:
        if self._is_op("-"):
            self._advance()
            return -self._unary()
        return self._power()

    def _power(self) -> IntSeries:
        base = self._primary()
        if self._is_op("^"):
            self._advance()
            exponent = self._integer("exponent")
            return base**exponent
        return base

    def _integer(self, what: str) -> int:
        token = self.current
        if token.kind != "int":
            raise ExpressionParseError(f"{what} must be a non-negative integer", token.pos)
        self._advance()
        return int(token.text)

    def _primary(self) -> IntSeries:
        token = self.current
        if token.kind == "int":
            self._advance()
            return IntSeries([int(token.text)])
        if token.kind == "name":
            return self._name(token)
        if self._is_op("("):
            self._advance()
            value = self._expr()
            self._expect(")")
            return value
        found = token.text or "end of input"
        raise ExpressionParseError(f"unexpected {found!r}", token.pos)

    def _name(self, token: Token) -> IntSeries:
        self._advance()
        if token.text == "t":
            return IntSeries.monomial(1)
        if token.text in _INT_CALLS:
            self._expect("(")
            n = self._integer("n")
            self._expect(",")
            d = self._integer("d")
            self._expect(")")
            return _INT_CALLS[token.text](n, d)
        if token.text in _UNARY_CALLS:
            self._expect("(")
            value = self._expr()
            self._expect(")")
            return _UNARY_CALLS[token.text](value)
        if token.text == "max":
            self._expect("(")
            lhs = self._expr()
            self._expect(",")
            rhs = self._expr()
            self._expect(")")
            return lhs.coeff_max(rhs)
        raise ExpressionParseError(f"unknown name {token.text!r}", token.pos)


def evaluate(text: str) -> IntSeries:
    """
    Evaluate a series expression.

    Args:
        text: Expression such as ``head((1+t)^5*(1-t^2)^2)``

    Returns:
        The resulting IntSeries

    Raises:
        ExpressionParseError: On malformed input, with the failing position
        DegreeRangeError: If delta/Delta get an out-of-range degree
    """
    return ExpressionParser(text).parse()
