"""
parsers/poly_parser.py
Parser de expresiones polinomiales sobre Q(i)

Gramática (descendente recursiva):
    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | power
    power := atom ('^' natural)?
    atom  := rational | 'i' | identificador | '(' expr ')'
    rational := entero ('/' entero-positivo)?

'^' liga más fuerte que el menos unario: "-x^2" es -(x^2).
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from algebra.gaussian import I_UNIT, GaussianRational
from algebra.polynomial import MAX_TOTAL_DEGREE, Poly, PolyRing
from exceptions import (
    DegreeOverflowError,
    DimensionMismatchError,
    PolySyntaxError,
    UnknownIdentifierError,
)

TOKEN_PATTERN = re.compile(
    r"(?P<number>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])"
)


class Token(NamedTuple):
    kind: str   # 'number', 'ident', 'op' o 'end'
    text: str
    offset: int  # offset en bytes UTF-8


def tokenize(text: str) -> List[Token]:
    """
    Divide el texto en tokens.

    Raises:
        PolySyntaxError: Ante un carácter que no pertenece a la gramática
    """
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        match = TOKEN_PATTERN.match(text, pos)
        if not match:
            raise PolySyntaxError(f"Carácter inesperado {text[pos]!r}", _byte_offset(text, pos))
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), _byte_offset(text, start)))
        pos = match.end()
    tokens.append(Token("end", "", len(text.encode("utf-8"))))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


class PolyParser:
    """
    Parser de una expresión para un anillo dado.

    Los identificadores deben ser variables del anillo; 'i' es siempre la
    unidad imaginaria.
    """

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self._tokens: List[Token] = []
        self._pos = 0

    def parse(self, text: str) -> Poly:
        self._tokens = tokenize(text)
        self._pos = 0
        if self._peek().kind == "end":
            raise PolySyntaxError("Expresión vacía", 0)
        result = self._expr()
        token = self._peek()
        if token.kind != "end":
            raise PolySyntaxError(f"Token inesperado {token.text!r}", token.offset)
        return result

    # ------------------------------------------------------------------
    # Tokens
    # ------------------------------------------------------------------

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _accept(self, op: str) -> Optional[Token]:
        token = self._peek()
        if token.kind == "op" and token.text == op:
            return self._advance()
        return None

    def _expect_number(self, what: str) -> Tuple[int, Token]:
        token = self._peek()
        if token.kind != "number":
            found = token.text or "fin de la entrada"
            raise PolySyntaxError(f"Se esperaba {what}, se encontró {found!r}", token.offset)
        self._advance()
        return int(token.text), token

    # ------------------------------------------------------------------
    # Reglas
    # ------------------------------------------------------------------

    def _expr(self) -> Poly:
        result = self._term()
        while True:
            if self._accept("+"):
                result = result + self._term()
            elif self._accept("-"):
                result = result - self._term()
            else:
                return result

    def _term(self) -> Poly:
        result = self._unary()
        while self._accept("*"):
            result = result * self._unary()
        return result

    def _unary(self) -> Poly:
        if self._accept("-"):
            return -self._unary()
        return self._power()

    def _power(self) -> Poly:
        base = self._atom()
        caret = self._accept("^")
        if caret is None:
            return base
        exponent, token = self._expect_number("un exponente natural")
        if exponent > MAX_TOTAL_DEGREE:
            raise DegreeOverflowError(
                f"Exponente {exponent} supera el máximo {MAX_TOTAL_DEGREE} (byte {token.offset})"
            )
        return base ** exponent

    def _atom(self) -> Poly:
        token = self._peek()
        if token.kind == "number":
            self._advance()
            value = Fraction(int(token.text))
            if self._accept("/"):
                denominator, den_token = self._expect_number("un denominador")
                if denominator == 0:
                    raise PolySyntaxError("Denominador nulo", den_token.offset)
                value = value / denominator
            return self.ring.constant(GaussianRational(value))
        if token.kind == "ident":
            self._advance()
            if token.text == "i":
                return self.ring.constant(I_UNIT)
            if token.text not in self.ring.variable_names:
                raise UnknownIdentifierError(token.text, token.offset)
            return self.ring.gen(token.text)
        if self._accept("("):
            inner = self._expr()
            if self._accept(")") is None:
                closing = self._peek()
                raise PolySyntaxError("Falta ')'", closing.offset)
            return inner
        found = token.text or "fin de la entrada"
        raise PolySyntaxError(f"Se esperaba un operando, se encontró {found!r}", token.offset)


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """
    Parsea text como polinomio de ring.

    Raises:
        PolySyntaxError: Error de sintaxis, con offset en bytes
        UnknownIdentifierError: Identificador que no es variable del anillo
    """
    return PolyParser(ring).parse(text)


_SCALAR_RING = PolyRing((), "grevlex")


def parse_scalar(text: str) -> GaussianRational:
    """Parsea un elemento de Q(i), p.ej. '3', '-1/2', '1/2*i - 3', '2+3*i'."""
    return parse_poly(text, _SCALAR_RING).constant_value()


def parse_point(text: str, dimension: Optional[int] = None) -> Tuple[GaussianRational, ...]:
    """
    Parsea un punto 'c1,c2,...' de coordenadas en Q(i).

    Los offsets de los errores se cuentan desde el inicio de text.

    Raises:
        PolySyntaxError: Si una coordenada no es un escalar válido
        UnknownIdentifierError: Si una coordenada usa un identificador
        DimensionMismatchError: Si se indica dimension y no coincide
    """
    point: Tuple[GaussianRational, ...] = ()
    start = 0
    for part in text.split(",") if text.strip() else ():
        try:
            point += (parse_scalar(part),)
        except PolySyntaxError as exc:
            raise PolySyntaxError(exc.reason, exc.offset + start) from None
        except UnknownIdentifierError as exc:
            raise UnknownIdentifierError(exc.identifier, exc.offset + start) from None
        start += len(part.encode("utf-8")) + 1
    if dimension is not None and len(point) != dimension:
        raise DimensionMismatchError(
            f"El punto tiene {len(point)} coordenadas, se esperaban {dimension}"
        )
    return point
