"""Text format for Laurent polynomials over cyclotomic fields.

Grammar (whitespace insensitive)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" exponent)?
    atom   := INT | "x" | "y" | "z" | "zeta" "(" INT ")" | "(" expr ")"
    exponent := INT | "-" INT | "(" ("-")? INT ")"

Division is allowed by nonzero constants and by monomials. The output of
``str(SparsePoly)`` parses back to the same polynomial.
"""

from dataclasses import dataclass
import re

from rational_tiles.algebra.cyclotomic import zeta
from rational_tiles.algebra.sparse import VAR_NAMES, SparsePoly
from rational_tiles.errors import PolynomialParseError

__all__ = ["parse_polynomial"]

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialParseError(f"unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.tokens = _tokenize(text)
        self.index = 0
        self.nvars = nvars

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> _Token:
        token = self.current
        if token.text != text:
            found = token.text or "end of input"
            raise PolynomialParseError(f"expected {text!r}, found {found!r}", token.position)
        return self.advance()

    def parse(self) -> SparsePoly:
        value = self.expr()
        if self.current.kind != "end":
            raise PolynomialParseError(f"unexpected {self.current.text!r}", self.current.position)
        return value

    def expr(self) -> SparsePoly:
        value = self.term()
        while self.current.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> SparsePoly:
        value = self.unary()
        while self.current.text in ("*", "/"):
            op = self.advance()
            rhs = self.unary()
            value = value * rhs if op.text == "*" else self._divide(value, rhs, op.position)
        return value

    def unary(self) -> SparsePoly:
        if self.current.text == "-":
            self.advance()
            return -self.unary()
        if self.current.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> SparsePoly:
        base = self.atom()
        if self.current.text != "^":
            return base
        caret = self.advance()
        exponent = self.exponent()
        if exponent >= 0:
            return base**exponent
        if not base.is_monomial():
            raise PolynomialParseError("negative powers need a monomial base", caret.position)
        return self._invert_monomial(base) ** (-exponent)

    def exponent(self) -> int:
        if self.current.text == "(":
            self.advance()
            value = self.exponent()
            self.expect(")")
            return value
        sign = 1
        if self.current.text == "-":
            self.advance()
            sign = -1
        token = self.current
        if token.kind != "int":
            raise PolynomialParseError("exponent must be an integer", token.position)
        self.advance()
        return sign * int(token.text)

    def atom(self) -> SparsePoly:
        token = self.current
        if token.kind == "int":
            self.advance()
            return SparsePoly.constant(self.nvars, int(token.text))
        if token.text == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if token.kind == "name":
            self.advance()
            if token.text == "zeta":
                self.expect("(")
                order = self.current
                if order.kind != "int" or int(order.text) < 1:
                    raise PolynomialParseError("zeta needs a positive integer order", order.position)
                self.advance()
                self.expect(")")
                return SparsePoly.constant(self.nvars, zeta(int(order.text)))
            if token.text in VAR_NAMES:
                index = VAR_NAMES.index(token.text)
                if index >= self.nvars:
                    raise PolynomialParseError(
                        f"variable {token.text!r} not allowed with {self.nvars} variable(s)", token.position
                    )
                return SparsePoly.variable(self.nvars, index)
            raise PolynomialParseError(f"unknown name {token.text!r}", token.position)
        found = token.text or "end of input"
        raise PolynomialParseError(f"unexpected {found!r}", token.position)

    def _invert_monomial(self, value: SparsePoly) -> SparsePoly:
        ((exps, coeff),) = value.terms.items()
        return SparsePoly(self.nvars, {tuple(-e for e in exps): coeff.inverse()})

    def _divide(self, lhs: SparsePoly, rhs: SparsePoly, position: int) -> SparsePoly:
        if rhs.is_zero():
            raise PolynomialParseError("division by zero", position)
        if not rhs.is_monomial():
            raise PolynomialParseError("can only divide by a constant or a monomial", position)
        return lhs * self._invert_monomial(rhs)


def _infer_nvars(text: str) -> int:
    used = [i for i, name in enumerate(VAR_NAMES) if re.search(rf"\b{name}\b", text)]
    return max(used, default=0) + 1


def parse_polynomial(text: str, nvars: int | None = None) -> SparsePoly:
    """Parse ``text`` into a :class:`SparsePoly`.

    Parameters
    ----------
    text : str
        Polynomial in the grammar above, e.g.
        ``"zeta(12)^4*x^3 + zeta(12)^3*x^2*y - (zeta(12)^5 - zeta(12))*x^2"``.
    nvars : int, optional
        Arity; defaults to the highest variable used. Variables beyond the
        arity are rejected.

    Raises
    ------
    PolynomialParseError
        With the character ``position`` of the offending token.
    """
    if nvars is not None and not 1 <= nvars <= 3:
        raise PolynomialParseError(f"arity must be 1, 2 or 3, got {nvars}", 0)
    return _Parser(text, nvars or _infer_nvars(text)).parse()
