"""
Recursive-descent parser for the *-algebra expression language.

Grammar (``#`` starts a comment; whitespace separates tokens)::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := factor (['·'] factor)*
    factor  := primary '*'*
    primary := INT | 'e' '[' INT ',' INT ']' | 's' '[' INT ']' | 'p' '[' INT ']' | '(' expr ')'

``e[j,k]`` is ``e_jk ⊗ 1``, ``s[m]`` is ``1 ⊗ s_m``, ``p[m]`` is ``1 ⊗ s_m s_m*``
and an integer is a multiple of the unit. Juxtaposition multiplies; postfix
``*`` is the adjoint and binds tighter than products.
"""
from __future__ import annotations

import logging
import re
from typing import NamedTuple

from ._exceptions import ExpressionSyntaxError, GeneratorIndexError
from .poly import StarPoly

logger = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<name>[esp])
  | (?P<op>[\[\],()+\-*·])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    value: str
    position: int


def tokenize(text: str) -> list[Token]:
    """
    Split an expression into tokens, dropping whitespace and comments.

    Raises:
        ExpressionSyntaxError: On a character outside the grammar
    """
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(f"Unexpected character {text[position]!r}", position, text)
        kind = match.lastgroup or ""
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def infer_dimensions(tokens: list[Token]) -> tuple[int, int]:
    """Smallest ``(r, n)`` containing every index used (``n`` at least 2)."""
    r, n = 1, 2
    for i, token in enumerate(tokens):
        if token.kind != "name":
            continue
        indices = []
        for following in tokens[i + 2 : i + 5]:
            if following.kind == "int":
                indices.append(int(following.value))
            elif following.value == "]":
                break
        if token.value == "e":
            r = max([r, *indices])
        elif indices:
            n = max(n, indices[0])
    return r, n


class _Parser:
    def __init__(self, text: str, tokens: list[Token], r: int, n: int, term_cap: int | None) -> None:
        self.text = text
        self.tokens = tokens
        self.index = 0
        self.r = r
        self.n = n
        self.term_cap = term_cap

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, value: str) -> Token:
        token = self.current
        if token.value != value or token.kind == "end":
            found = repr(token.value) if token.kind != "end" else "end of input"
            raise ExpressionSyntaxError(f"Expected {value!r}, found {found}", token.position, self.text)
        return self.advance()

    def integer(self) -> tuple[int, int]:
        token = self.current
        if token.kind != "int":
            raise ExpressionSyntaxError("Expected an integer", token.position, self.text)
        self.advance()
        return int(token.value), token.position

    def starts_factor(self) -> bool:
        token = self.current
        return token.kind in ("int", "name") or token.value == "("

    def parse(self) -> StarPoly:
        result = self.expr()
        if self.current.kind != "end":
            raise ExpressionSyntaxError(f"Unexpected {self.current.value!r}", self.current.position, self.text)
        return result

    def expr(self) -> StarPoly:
        sign = 1
        if self.current.value in ("+", "-"):
            sign = -1 if self.advance().value == "-" else 1
        result = self.term() * sign
        while self.current.value in ("+", "-"):
            op = self.advance().value
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> StarPoly:
        result = self.factor()
        while True:
            if self.current.value == "·":
                self.advance()
                result = result * self.factor()
            elif self.starts_factor():
                result = result * self.factor()
            else:
                return result

    def factor(self) -> StarPoly:
        result = self.primary()
        while self.current.value == "*":
            self.advance()
            result = result.adjoint()
        return result

    def index_in_range(self, value: int, limit: int, what: str, position: int) -> int:
        if not 1 <= value <= limit:
            raise GeneratorIndexError(f"{what} index {value} outside 1..{limit}", position)
        return value

    def primary(self) -> StarPoly:
        token = self.current
        if token.kind == "int":
            value, _ = self.integer()
            return StarPoly.scalar(self.r, self.n, value, self.term_cap)
        if token.value == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if token.kind == "name":
            self.advance()
            self.expect("[")
            if token.value == "e":
                j, pj = self.integer()
                self.expect(",")
                k, pk = self.integer()
                self.expect("]")
                j = self.index_in_range(j, self.r, "Matrix unit", pj)
                k = self.index_in_range(k, self.r, "Matrix unit", pk)
                return StarPoly.matrix_unit(self.r, self.n, j, k, self.term_cap)
            m, pm = self.integer()
            self.expect("]")
            m = self.index_in_range(m, self.n, "Isometry", pm)
            if token.value == "s":
                return StarPoly.isometry(self.r, self.n, m, self.term_cap)
            return StarPoly.projection(self.r, self.n, m, self.term_cap)
        found = repr(token.value) if token.kind != "end" else "end of input"
        raise ExpressionSyntaxError(f"Expected an operand, found {found}", token.position, self.text)


def parse(text: str, r: int | None = None, n: int | None = None, term_cap: int | None = None) -> StarPoly:
    """
    Parse an expression into a normalized ``StarPoly``.

    Args:
        text: Expression source
        r: Matrix size (inferred from the largest ``e`` index when omitted)
        n: Cuntz index (inferred from the largest ``s``/``p`` index, at least 2, when omitted)
        term_cap: Normalization term cap (config default when omitted)

    Returns:
        StarPoly: The represented element

    Raises:
        ExpressionSyntaxError: If the text does not conform to the grammar
        GeneratorIndexError: If an index lies outside ``1..r`` or ``1..n``
    """
    tokens = tokenize(text)
    inferred_r, inferred_n = infer_dimensions(tokens)
    result = _Parser(text, tokens, r or inferred_r, n or inferred_n, term_cap).parse()
    logger.debug("parse: %r -> %d terms", text, len(result))
    return result


class ParsedLine(NamedTuple):
    line: int
    source: str
    value: StarPoly


def _active_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        try:
            tokens = tokenize(line)
        except ExpressionSyntaxError as e:
            e.message = f"line {i}: {e.message}"
            raise
        if any(t.kind != "end" for t in tokens):
            out.append((i, line))
    return out


def text_dimensions(text: str, r: int | None = None, n: int | None = None) -> tuple[int, int]:
    """
    Dimensions ``(r, n)`` of a multi-line input.

    Missing values default to the smallest ones covering every line, so an
    index mentioned on one line changes the algebra of all of them.
    """
    if r is None or n is None:
        dims = [infer_dimensions(tokenize(line)) for _, line in _active_lines(text)] or [(1, 2)]
        r = r or max(d[0] for d in dims)
        n = n or max(d[1] for d in dims)
    return r, n


def parse_lines(
    text: str, r: int | None = None, n: int | None = None, term_cap: int | None = None
) -> list[ParsedLine]:
    """
    Parse one expression per line, skipping blank and comment-only lines.

    All lines share one algebra, see :func:`text_dimensions`.
    """
    active = _active_lines(text)
    r, n = text_dimensions(text, r, n)
    out = []
    for i, line in active:
        try:
            value = parse(line, r, n, term_cap)
        except (ExpressionSyntaxError, GeneratorIndexError) as e:
            e.message = f"line {i}: {e.message}"
            raise
        out.append(ParsedLine(i, line.split("#", 1)[0].strip(), value))
    return out
