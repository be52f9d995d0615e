"""
groebner/ideal.py
Ideales con base de Gröbner reducida en caché: formas normales, pertenencia,
pertenencia al radical, suma e igualdad de ideales.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import islice, product
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_divides

from algebra.gaussian import ONE, ZERO, GaussianRational
from algebra.polynomial import Monomial, Poly, PolyRing
from exceptions import RingMismatchError
from groebner.buchberger import buchberger, reduce
from utils.logger import setup_logger

logger = setup_logger(__name__)

BASIS_CACHE_SIZE = 512

# Valores de las variables fijadas al cortar V(I) con rectas
FIBER_VALUES: Tuple[GaussianRational, ...] = (
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(-1),
    GaussianRational(2),
    GaussianRational(Fraction(1, 2)),
    GaussianRational(0, 1),
    GaussianRational(-2),
    GaussianRational(3),
)
FIBER_LIMIT = 8


class Ideal:
    """
    Ideal de un PolyRing dado por una lista finita de generadores.

    Los generadores nulos se descartan y los repetidos se eliminan
    conservando el primer orden de aparición. La igualdad (==) es
    estructural sobre los generadores; la igualdad de ideales como
    conjuntos se decide con ideals_equal().

    La base reducida se calcula a demanda y se guarda con una sola
    asignación de una tupla ya construida, así que dos hilos pueden
    calcularla a la vez sin dejar estado a medias. Un ideal construido con
    ideal_sum() parte de la base de su primer sumando, que queda en la
    caché de ese sumando y se comparte entre todas las sumas que lo usan.
    """

    __slots__ = ("ring", "generators", "_basis", "_seed")

    def __init__(
        self,
        ring: PolyRing,
        generators: Iterable[Poly] = (),
        seed: Optional["Ideal"] = None,
    ):
        unique = []
        seen = set()
        for g in generators:
            g = ring.coerce(g)
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            unique.append(g)
        self.ring = ring
        self.generators: Tuple[Poly, ...] = tuple(unique)
        self._basis: Optional[Tuple[Poly, ...]] = None
        self._seed = seed if seed is not None and seed.generators else None

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, (ring.one,))

    @property
    def basis(self) -> Tuple[Poly, ...]:
        """Base de Gröbner reducida (se calcula la primera vez)."""
        basis = self._basis
        if basis is None:
            basis = self._compute_basis()
            self._basis = basis
        return basis

    def _compute_basis(self) -> Tuple[Poly, ...]:
        if self._seed is None:
            return _cached_basis((), _generator_key(self.generators))
        prefix = self._seed.basis
        if prefix == (self.ring.one,):
            return prefix
        seeded = set(self._seed.generators)
        rest = [g for g in self.generators if g not in seeded]
        return _cached_basis(prefix, _generator_key(rest))

    @property
    def has_basis(self) -> bool:
        return self._basis is not None

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        """True si el ideal contiene a 1 (V(ideal) vacío)."""
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.ring, self.generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return f"Ideal({self}, ring={list(self.ring.variable_names)})"


def _generator_key(generators: Iterable[Poly]) -> FrozenSet[Poly]:
    # Los generadores que difieren en un escalar dan el mismo ideal
    return frozenset(g.monic() for g in generators)


@lru_cache(maxsize=BASIS_CACHE_SIZE)
def _cached_basis(prefix: Tuple[Poly, ...], rest: FrozenSet[Poly]) -> Tuple[Poly, ...]:
    """Base reducida de <prefix + rest>, con prefix ya base de Gröbner."""
    if not rest:
        return prefix
    ordered = sorted(rest, key=lambda g: ([g.ring.order_key(m) for m, _ in g.terms], str(g)))
    return buchberger(list(prefix) + ordered, known=len(prefix))


def clear_basis_cache() -> None:
    """Vacía la caché de bases compartida entre ideales."""
    _cached_basis.cache_clear()


def _check_ring(p: Poly, ideal: Ideal) -> None:
    if p.ring != ideal.ring:
        raise RingMismatchError(
            f"El polinomio vive en {p.ring.variable_names}, el ideal en "
            f"{ideal.ring.variable_names}"
        )


def groebner_basis(ideal: Ideal) -> Ideal:
    """Llena la caché de la base reducida y devuelve el mismo ideal."""
    ideal.basis
    return ideal


def normal_form(p: Poly, ideal: Ideal) -> Poly:
    """
    Resto de p módulo la base reducida del ideal.

    normal_form(p, I) == 0 si y solo si p pertenece a I.
    """
    _check_ring(p, ideal)
    return reduce(p, ideal.basis)


def ideal_contains(ideal: Ideal, p: Poly) -> bool:
    return normal_form(p, ideal).is_zero()


def _standard_monomials(ideal: Ideal) -> Optional[List[Monomial]]:
    """
    Monomios estándar de R/I, o None si I no es cero-dimensional.

    I es cero-dimensional cuando cada variable tiene una potencia pura entre
    los monomios líderes de la base; los monomios estándar caen en la caja
    acotada por esas potencias.
    """
    basis = ideal.basis
    if not basis:
        return None
    leads = [g.leading_monomial for g in basis]
    bounds = []
    for k in range(ideal.ring.ngens):
        pure = [m[k] for m in leads if m[k] and sum(m) == m[k]]
        if not pure:
            return None
        bounds.append(min(pure))
    return [
        m for m in product(*(range(b) for b in bounds))
        if not any(monomial_divides(lead, m) for lead in leads)
    ]


def _trace(r: Poly, basis: Tuple[Poly, ...], standard: List[Monomial]) -> GaussianRational:
    """Traza de la multiplicación por r en R/I, con r ya reducido."""
    total = ZERO
    for b in standard:
        total = total + reduce(r.mul_term(b, ONE), basis).coefficient(b)
    return total


def _nilpotent(r: Poly, basis: Sequence[Poly], bound: int) -> bool:
    # Con índice de nilpotencia <= bound basta mirar r^(2^k) con 2^k >= bound
    power = 1
    while r and power < bound:
        r = reduce(r * r, basis)
        power *= 2
    return r.is_zero()


def _fiber_certificate(p: Poly, ideal: Ideal, limit: int = FIBER_LIMIT) -> bool:
    """
    Busca un cero del ideal donde p no se anula sobre rectas verticales.

    Fija todas las variables menos la última en valores de FIBER_VALUES; en
    la recta queda un ideal de una variable, donde la pertenencia al
    radical se decide con bases univariadas. True prueba que p no está en
    el radical; False no decide nada.
    """
    ring = ideal.ring
    if ring.ngens == 0:
        return False
    line = PolyRing((ring.variable_names[-1],), "grevlex")
    t = line.gens[0]
    for values in islice(product(FIBER_VALUES, repeat=ring.ngens - 1), limit):
        substitution = [line.constant(v) for v in values] + [t]
        fiber = buchberger([g.substitute(substitution) for g in ideal.generators])
        p_fiber = p.substitute(substitution)
        if not fiber:
            # La recta entera está en V(I)
            if p_fiber:
                return True
            continue
        if fiber == (line.one,):
            continue
        remainder = reduce(p_fiber, fiber)
        if not _nilpotent(remainder, fiber, fiber[0].total_degree()):
            return True
    return False


def radical_membership(p: Poly, ideal: Ideal) -> bool:
    """
    Decide si p pertenece al radical del ideal.

    Antes de calcular bases se buscan ceros del ideal donde p no se anula
    sobre algunas rectas. Si el ideal es cero-dimensional se decide en el
    cociente R/I: una traza no nula descarta la nilpotencia y si no se
    eleva p al cuadrado hasta superar dim R/I. En otro caso se agrega una
    variable nueva t al final del anillo y se comprueba si 1 pertenece a
    ideal + <1 - t*p>.
    """
    _check_ring(p, ideal)
    if p.is_zero():
        return True
    if ideal.is_zero():
        # V(0) es todo el espacio: p está en el radical solo si es nulo
        return False
    if _fiber_certificate(p, ideal):
        logger.debug("Radical: testigo en una recta")
        return False
    r = normal_form(p, ideal)
    if r.is_zero():
        return True
    if p.is_constant():
        # p es una unidad fuera del ideal, luego el ideal no es <1>
        return False

    standard = _standard_monomials(ideal)
    if standard is not None:
        if not _trace(r, ideal.basis, standard).is_zero():
            return False
        result = _nilpotent(r, ideal.basis, len(standard))
        logger.debug(f"Radical: nilpotencia en R/I de dimensión {len(standard)} -> {result}")
        return result

    # La variable auxiliar va al final y siempre bajo grevlex
    extended = PolyRing(ideal.ring.variable_names + (ideal.ring.fresh_name("t"),), "grevlex")
    t = extended.gens[-1]
    if ideal.ring.monomial_order == "grevlex":
        # Una base grevlex sigue siéndolo con t al final
        prefix = [g.embed(extended) for g in ideal.basis]
        known = len(prefix)
    else:
        prefix = [g.embed(extended) for g in ideal.generators]
        known = 0
    basis = buchberger(prefix + [extended.one - t * p.embed(extended)], known=known)
    result = basis == (extended.one,)
    logger.debug(f"Radical: variable auxiliar {t} -> {result}")
    return result


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    """Ideal generado por los generadores de a seguidos de los de b."""
    if a.ring != b.ring:
        raise RingMismatchError("Suma de ideales de anillos distintos")
    return Ideal(a.ring, a.generators + b.generators, seed=a)


def ideals_equal(a: Ideal, b: Ideal) -> bool:
    """Igualdad de ideales: las bases reducidas son únicas para un orden fijo."""
    if a.ring != b.ring:
        raise RingMismatchError("Comparación de ideales de anillos distintos")
    return a.basis == b.basis
