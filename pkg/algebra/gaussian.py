"""
algebra/gaussian.py
Números racionales gaussianos: el cuerpo Q(i) de coeficientes.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union["GaussianRational", int, Fraction]


class GaussianRational:
    """
    Elemento exacto de Q(i), re + im*i.

    Ambas partes son Fraction, que ya viven reducidas y con denominador
    positivo; el cero tiene una sola representación (0/1, 0/1). Los valores
    son inmutables.
    """

    __slots__ = ("_re", "_im", "_hash")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        if not isinstance(re, Rational) or not isinstance(im, Rational):
            raise TypeError(
                f"GaussianRational requiere partes racionales, recibido "
                f"{type(re).__name__}, {type(im).__name__}"
            )
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        """Constructor interno: re e im ya son Fraction."""
        value = object.__new__(cls)
        object.__setattr__(value, "_re", re)
        object.__setattr__(value, "_im", im)
        object.__setattr__(value, "_hash", None)
        return value

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational es inmutable")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def of(cls, value: Scalar) -> "GaussianRational":
        """Convierte int, Fraction o GaussianRational a GaussianRational."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return cls(value, 0)
        raise TypeError(f"No se puede convertir {type(value).__name__} a Q(i)")

    # ------------------------------------------------------------------
    # Predicados
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_one(self) -> bool:
        return self._re == 1 and self._im == 0

    def is_real(self) -> bool:
        return self._im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def __add__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.of(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._make(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._make(-self._re, -self._im)

    def __sub__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.of(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._make(self._re - other._re, self._im - other._im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.of(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        if not b and not d:
            return GaussianRational._make(a * c, b)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Norma re^2 + im^2 (siempre racional)."""
        return self._re * self._re + self._im * self._im

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise ZeroDivisionError("0 no es invertible en Q(i)")
        n = self.norm()
        return GaussianRational._make(self._re / n, -self._im / n)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.of(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.of(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponente inválido: {exponent}")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Igualdad, hash y texto
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, Rational):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self._re, self._im)))
        return self._hash

    def __repr__(self) -> str:
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self) -> str:
        """Texto en la gramática de polinomios: '3', '-1/2*i', '1 - 2*i'."""
        if self._im == 0:
            return str(self._re)
        if self._im == 1:
            imag = "i"
        elif self._im == -1:
            imag = "-i"
        else:
            imag = f"{self._im}*i"
        if self._re == 0:
            return imag
        if imag.startswith("-"):
            return f"{self._re} - {imag[1:]}"
        return f"{self._re} + {imag}"

    def needs_parentheses(self) -> bool:
        """True si el texto tiene parte real e imaginaria (una suma)."""
        return self._re != 0 and self._im != 0

    def as_expr(self):
        """Convierte a expresión de sympy (para oráculos de test)."""
        import sympy
        return sympy.Rational(self._re.numerator, self._re.denominator) + sympy.I * sympy.Rational(
            self._im.numerator, self._im.denominator
        )


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I_UNIT = GaussianRational(0, 1)
