"""
algebra/polynomial.py
Polinomios multivariados en forma canónica sobre Q(i).

Un Poly guarda sus términos ordenados de mayor a menor según el orden
monomial del anillo y nunca guarda coeficientes nulos, así que la igualdad
estructural coincide con la igualdad matemática.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.monomials import monomial_div, monomial_mul
from sympy.polys.orderings import monomial_key

from algebra.gaussian import ONE, ZERO, GaussianRational, Scalar
from config.settings import SUPPORTED_ORDERS, settings
from exceptions import (
    DegreeOverflowError,
    DimensionMismatchError,
    InexactDivisionError,
    InvalidVariableNameError,
    RingMismatchError,
)

Monomial = Tuple[int, ...]

MAX_TOTAL_DEGREE = 2 ** 31
RESERVED_NAMES = frozenset({"i"})
IDENTIFIER_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class PolyRing:
    """
    Anillo Q(i)[x_1, ..., x_n] con un orden monomial fijo.

    Attributes:
        variable_names: Nombres de las variables, en orden
        monomial_order: 'grevlex' (por defecto) o 'lex'
    """
    variable_names: Tuple[str, ...]
    monomial_order: str = field(default_factory=lambda: settings.algebra.monomial_order)

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)

        for name in names:
            if not isinstance(name, str) or not IDENTIFIER_PATTERN.match(name):
                raise InvalidVariableNameError(f"Nombre de variable inválido: {name!r}")
            if name in RESERVED_NAMES:
                raise InvalidVariableNameError(
                    f"'{name}' está reservado para la unidad imaginaria"
                )
        if len(set(names)) != len(names):
            raise InvalidVariableNameError(f"Variables repetidas: {list(names)}")
        if self.monomial_order not in SUPPORTED_ORDERS:
            raise InvalidVariableNameError(
                f"Orden monomial desconocido: {self.monomial_order}"
            )

    @property
    def ngens(self) -> int:
        return len(self.variable_names)

    @cached_property
    def order_key(self):
        """Clave de ordenación de sympy para el orden monomial del anillo."""
        return monomial_key(self.monomial_order)

    @cached_property
    def zero(self) -> "Poly":
        return Poly._build(self, {})

    @cached_property
    def one(self) -> "Poly":
        return self.constant(ONE)

    @cached_property
    def gens(self) -> Tuple["Poly", ...]:
        return tuple(self.gen(k) for k in range(self.ngens))

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise InvalidVariableNameError(f"'{name}' no es variable del anillo") from None

    def gen(self, which: Union[int, str]) -> "Poly":
        """Devuelve la variable indicada (por posición o por nombre)."""
        k = self.index(which) if isinstance(which, str) else which
        exponents = tuple(1 if j == k else 0 for j in range(self.ngens))
        return Poly._build(self, {exponents: ONE})

    def constant(self, value: Scalar) -> "Poly":
        return Poly._build(self, {(0,) * self.ngens: GaussianRational.of(value)})

    def coerce(self, value: Union["Poly", Scalar]) -> "Poly":
        """Convierte un escalar en constante; un Poly debe ser de este anillo."""
        if isinstance(value, Poly):
            if value.ring != self:
                raise RingMismatchError(
                    f"El polinomio vive en {value.ring.variable_names}, "
                    f"se esperaba {self.variable_names}"
                )
            return value
        return self.constant(value)

    def extend(self, name: str) -> "PolyRing":
        """Anillo con una variable nueva agregada al final."""
        return PolyRing(self.variable_names + (name,), self.monomial_order)

    def fresh_name(self, base: str = "t") -> str:
        """Primer nombre libre de la forma base, base_1, base_2, ..."""
        candidate, suffix = base, 0
        while candidate in self.variable_names:
            suffix += 1
            candidate = f"{base}_{suffix}"
        return candidate

    def __str__(self) -> str:
        return f"Q(i)[{', '.join(self.variable_names)}] ({self.monomial_order})"


class Poly:
    """
    Polinomio inmutable de un PolyRing.

    Los términos se exponen como tupla de pares (monomio, coeficiente) en
    orden decreciente; el primero es el término líder.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Optional[Mapping[Monomial, Scalar]] = None):
        normalized: Dict[Monomial, GaussianRational] = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != ring.ngens or any(
                not isinstance(e, int) or e < 0 for e in monomial
            ):
                raise DimensionMismatchError(
                    f"Monomio {monomial} inválido para {ring.ngens} variables"
                )
            value = GaussianRational.of(coefficient)
            normalized[monomial] = normalized.get(monomial, ZERO) + value
        self._init(ring, normalized)

    def _init(self, ring: PolyRing, terms: Dict[Monomial, GaussianRational]) -> None:
        key = ring.order_key
        items = []
        for monomial, coefficient in terms.items():
            if coefficient.is_zero():
                continue
            if sum(monomial) > MAX_TOTAL_DEGREE:
                raise DegreeOverflowError(
                    f"Grado total {sum(monomial)} supera el máximo {MAX_TOTAL_DEGREE}"
                )
            items.append((monomial, coefficient))
        items.sort(key=lambda term: key(term[0]), reverse=True)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", tuple(items))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _build(cls, ring: PolyRing, terms: Dict[Monomial, GaussianRational]) -> "Poly":
        """Constructor interno: monomios ya validados, coeficientes ya en Q(i)."""
        poly = cls.__new__(cls)
        poly._init(ring, terms)
        return poly

    def __setattr__(self, name, value):
        raise AttributeError("Poly es inmutable")

    # ------------------------------------------------------------------
    # Acceso
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple[Monomial, GaussianRational], ...]:
        return self._terms

    def as_dict(self) -> Dict[Monomial, GaussianRational]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return self.is_zero() or (len(self._terms) == 1 and not any(self._terms[0][0]))

    def constant_value(self) -> GaussianRational:
        """Valor de un polinomio constante."""
        if not self.is_constant():
            raise ValueError(f"{self} no es constante")
        return self._terms[0][1] if self._terms else ZERO

    def coefficient(self, monomial: Monomial) -> GaussianRational:
        for m, c in self._terms:
            if m == tuple(monomial):
                return c
        return ZERO

    @property
    def leading_term(self) -> Tuple[Monomial, GaussianRational]:
        if not self._terms:
            raise ValueError("El polinomio cero no tiene término líder")
        return self._terms[0]

    @property
    def leading_monomial(self) -> Monomial:
        return self.leading_term[0]

    @property
    def leading_coefficient(self) -> GaussianRational:
        return self.leading_term[1]

    def total_degree(self) -> int:
        """Grado total; -1 para el polinomio cero."""
        return max((sum(m) for m, _ in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def _other(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(
                    f"Anillos distintos: {self.ring.variable_names} y "
                    f"{other.ring.variable_names}"
                )
            return other
        try:
            return self.ring.constant(other)
        except TypeError:
            return None

    def __add__(self, other) -> "Poly":
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms:
            terms[m] = terms.get(m, ZERO) + c
        return Poly._build(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._build(self.ring, {m: -c for m, c in self._terms})

    def __sub__(self, other) -> "Poly":
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms:
            terms[m] = terms.get(m, ZERO) - c
        return Poly._build(self.ring, terms)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms: Dict[Monomial, GaussianRational] = {}
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                m = monomial_mul(m1, m2)
                terms[m] = terms.get(m, ZERO) + c1 * c2
        return Poly._build(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponente inválido: {exponent}")
        if exponent and self.total_degree() * exponent > MAX_TOTAL_DEGREE:
            raise DegreeOverflowError(
                f"({self})^{exponent} supera el grado total máximo {MAX_TOTAL_DEGREE}"
            )
        if len(self._terms) == 1:
            m, c = self._terms[0]
            return Poly._build(self.ring, {tuple(e * exponent for e in m): c ** exponent})
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, coefficient: Scalar) -> "Poly":
        coefficient = GaussianRational.of(coefficient)
        return Poly._build(self.ring, {m: c * coefficient for m, c in self._terms})

    def mul_term(self, monomial: Monomial, coefficient: Scalar) -> "Poly":
        """Multiplica por el término coefficient * x^monomial."""
        coefficient = GaussianRational.of(coefficient)
        return Poly._build(
            self.ring,
            {monomial_mul(m, monomial): c * coefficient for m, c in self._terms},
        )

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self.scale(self.leading_coefficient.inverse())

    def exact_divide(self, divisor: "Poly") -> "Poly":
        """
        Cociente exacto self / divisor.

        Raises:
            ZeroDivisionError: Si el divisor es cero
            InexactDivisionError: Si divisor no divide a self
        """
        divisor = self._other(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("División por el polinomio cero")
        key = self.ring.order_key
        lead_m, lead_c = divisor.leading_term
        remainder = dict(self._terms)
        quotient: Dict[Monomial, GaussianRational] = {}
        while remainder:
            m = max(remainder, key=key)
            q_m = monomial_div(m, lead_m)
            if q_m is None:
                raise InexactDivisionError(f"{divisor} no divide a {self}")
            q_c = remainder[m] / lead_c
            quotient[q_m] = q_c
            for d_m, d_c in divisor._terms:
                target = monomial_mul(d_m, q_m)
                value = remainder.get(target, ZERO) - d_c * q_c
                if value.is_zero():
                    remainder.pop(target, None)
                else:
                    remainder[target] = value
        return Poly._build(self.ring, quotient)

    # ------------------------------------------------------------------
    # Evaluación
    # ------------------------------------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> GaussianRational:
        """Valor exacto del polinomio en un punto de Q(i)^n."""
        if len(point) != self.ring.ngens:
            raise DimensionMismatchError(
                f"El punto tiene {len(point)} coordenadas, el anillo {self.ring.ngens} variables"
            )
        values = [GaussianRational.of(v) for v in point]
        powers = [{0: ONE, 1: v} for v in values]
        total = ZERO
        for monomial, coefficient in self._terms:
            term = coefficient
            for k, e in enumerate(monomial):
                if e:
                    cache = powers[k]
                    if e not in cache:
                        cache[e] = values[k] ** e
                    term = term * cache[e]
            total = total + term
        return total

    def substitute(self, substitution: Sequence["Poly"]) -> "Poly":
        """Sustituye cada variable por un polinomio de un anillo destino común."""
        if len(substitution) != self.ring.ngens:
            raise DimensionMismatchError(
                f"La sustitución tiene {len(substitution)} entradas, "
                f"el anillo {self.ring.ngens} variables"
            )
        if not substitution:
            raise DimensionMismatchError(
                "Sustitución vacía: use constant_value() en un anillo sin variables"
            )
        target = substitution[0].ring
        for value in substitution:
            if value.ring != target:
                raise RingMismatchError("Las entradas de la sustitución viven en anillos distintos")

        powers = [{0: target.one, 1: v} for v in substitution]
        accumulated: Dict[Monomial, GaussianRational] = {}
        for monomial, coefficient in self._terms:
            term = target.constant(coefficient)
            for k, e in enumerate(monomial):
                if e:
                    cache = powers[k]
                    if e not in cache:
                        cache[e] = substitution[k] ** e
                    term = term * cache[e]
            for m, c in term._terms:
                accumulated[m] = accumulated.get(m, ZERO) + c
        return Poly._build(target, accumulated)

    def embed(self, target: PolyRing) -> "Poly":
        """Lleva el polinomio a un anillo cuyas primeras variables son las de este."""
        n = self.ring.ngens
        if target.variable_names[:n] != self.ring.variable_names:
            raise RingMismatchError(
                f"{target.variable_names} no extiende a {self.ring.variable_names}"
            )
        padding = (0,) * (target.ngens - n)
        return Poly._build(target, {m + padding: c for m, c in self._terms})

    # ------------------------------------------------------------------
    # Igualdad, hash y texto
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        try:
            other = GaussianRational.of(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == other

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, self._terms)))
        return self._hash

    def _monomial_text(self, monomial: Monomial) -> str:
        factors = []
        for name, e in zip(self.ring.variable_names, monomial):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for monomial, coefficient in self._terms:
            mono = self._monomial_text(monomial)
            if not mono:
                pieces.append(str(coefficient))
            elif coefficient.is_one():
                pieces.append(mono)
            elif coefficient == -1:
                pieces.append(f"-{mono}")
            elif coefficient.needs_parentheses():
                pieces.append(f"({coefficient})*{mono}")
            else:
                pieces.append(f"{coefficient}*{mono}")
        return " + ".join(pieces).replace(" + -", " - ")

    def __repr__(self) -> str:
        return f"Poly({self}, ring={list(self.ring.variable_names)})"

    def as_expr(self):
        """Convierte a expresión de sympy (para oráculos de test)."""
        import sympy
        symbols = [sympy.Symbol(name) for name in self.ring.variable_names]
        expr = sympy.Integer(0)
        for monomial, coefficient in self._terms:
            term = coefficient.as_expr()
            for symbol, e in zip(symbols, monomial):
                term = term * symbol ** e
            expr = expr + term
        return sympy.expand(expr)


# ----------------------------------------------------------------------
# Operaciones públicas
# ----------------------------------------------------------------------

_ARITH = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
}


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """
    Suma, resta o producto exacto de dos polinomios del mismo anillo.

    Raises:
        RingMismatchError: Si los anillos difieren
        ValueError: Si op no es 'add', 'sub' o 'mul'
    """
    if op not in _ARITH:
        raise ValueError(f"Operación desconocida: {op}")
    if a.ring != b.ring:
        raise RingMismatchError(
            f"Anillos distintos: {a.ring.variable_names} y {b.ring.variable_names}"
        )
    return _ARITH[op](a, b)


def evaluate(p: Poly, point: Sequence[Scalar]) -> GaussianRational:
    return p.evaluate(point)


def symbolic_evaluate(p: Poly, substitution: Sequence[Poly]) -> Poly:
    return p.substitute(substitution)


def poly_sum(ring: PolyRing, polys: Iterable[Poly]) -> Poly:
    """Suma de muchos polinomios acumulando en un solo diccionario."""
    accumulated: Dict[Monomial, GaussianRational] = {}
    for p in polys:
        p = ring.coerce(p)
        for m, c in p.terms:
            accumulated[m] = accumulated.get(m, ZERO) + c
    return Poly._build(ring, accumulated)
