"""
groebner/buchberger.py
Algoritmo de Buchberger sobre Q(i) con los dos criterios clásicos de
eliminación de pares y selección de pares por azúcar.
"""

import heapq
from typing import Collection, Dict, List, Sequence, Tuple

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul

from algebra.gaussian import ZERO, GaussianRational
from algebra.polynomial import Monomial, Poly
from exceptions import RingMismatchError
from utils.logger import log_metric, setup_logger

logger = setup_logger(__name__)

Pair = Tuple[int, int]
PairKey = Tuple[int, int, int, int]


def spoly(f: Poly, g: Poly) -> Poly:
    """S-polinomio de dos polinomios mónicos."""
    lcm = monomial_lcm(f.leading_monomial, g.leading_monomial)
    s1 = f.mul_term(monomial_div(lcm, f.leading_monomial), f.leading_coefficient.inverse())
    s2 = g.mul_term(monomial_div(lcm, g.leading_monomial), g.leading_coefficient.inverse())
    return s1 - s2


def _negated(key):
    """Invierte una clave de orden de sympy (tuplas anidadas de enteros)."""
    return tuple(_negated(k) if isinstance(k, tuple) else -k for k in key)


def reduce(g: Poly, divisors: Sequence[Poly]) -> Poly:
    """
    Resto completo de la división multivariada de g por divisors.

    Los monomios pendientes se recorren con un heap de mayor a menor; cada
    paso de reducción solo agrega monomios menores que el que elimina.
    """
    ring = g.ring
    key = ring.order_key
    leads = [(f.leading_monomial, f.leading_coefficient, f.terms[1:]) for f in divisors if f]
    if not leads or not g:
        return g

    pending: Dict[Monomial, GaussianRational] = g.as_dict()
    heap = [(_negated(key(m)), m) for m in pending]
    heapq.heapify(heap)
    remainder: Dict[Monomial, GaussianRational] = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = pending.pop(m, None)
        if c is None:
            continue
        for lead_m, lead_c, tail in leads:
            quotient = monomial_div(m, lead_m)
            if quotient is None:
                continue
            factor = c if lead_c.is_one() else c / lead_c
            for f_m, f_c in tail:
                target = monomial_mul(f_m, quotient)
                previous = pending.get(target)
                if previous is None:
                    pending[target] = -(f_c * factor)
                    heapq.heappush(heap, (_negated(key(target)), target))
                    continue
                value = previous - f_c * factor
                if value.is_zero():
                    del pending[target]
                else:
                    pending[target] = value
            break
        else:
            remainder[m] = c
    return Poly._build(ring, remainder)


def _pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


def select(pairs: Dict[Pair, PairKey]) -> Pair:
    """Par de menor azúcar; empates por grado del mcm y luego por índices."""
    return min(pairs, key=pairs.__getitem__)


def _pair_key(basis: Sequence[Poly], sugar: Sequence[int], i: int, j: int) -> PairKey:
    lead_i, lead_j = basis[i].leading_monomial, basis[j].leading_monomial
    lcm_degree = sum(monomial_lcm(lead_i, lead_j))
    pair_sugar = max(
        sugar[i] + lcm_degree - sum(lead_i),
        sugar[j] + lcm_degree - sum(lead_j),
    )
    return (pair_sugar, lcm_degree, i, j)


def _chain_criterion(
    i: int, j: int, lcm: Monomial, basis: Sequence[Poly], pairs: Collection[Pair]
) -> bool:
    """Existe k fuera del par con LM(g_k) | mcm y ambos pares (i,k), (j,k) ya tratados."""
    for k, g in enumerate(basis):
        if k == i or k == j:
            continue
        if _pair(i, k) in pairs or _pair(j, k) in pairs:
            continue
        if monomial_divides(g.leading_monomial, lcm):
            return True
    return False


def minimalize(basis: Sequence[Poly]) -> List[Poly]:
    """Base de Gröbner minimal: descarta elementos con líder divisible por otro."""
    if not basis:
        return []
    key = basis[0].ring.order_key
    minimal: List[Poly] = []
    for f in sorted(basis, key=lambda h: key(h.leading_monomial)):
        if all(not monomial_divides(g.leading_monomial, f.leading_monomial) for g in minimal):
            minimal.append(f)
    return minimal


def interreduce(basis: Sequence[Poly]) -> List[Poly]:
    """Base reducida a partir de una base minimal."""
    reduced = []
    for k, g in enumerate(basis):
        others = list(basis[:k]) + list(basis[k + 1:])
        reduced.append(reduce(g, others).monic())
    return reduced


def buchberger(generators: Sequence[Poly], known: int = 0) -> Tuple[Poly, ...]:
    """
    Base de Gröbner reducida del ideal generado por generators.

    Los generadores nulos se descartan; el ideal cero da la base vacía. La
    base se devuelve ordenada por término líder decreciente, de modo que dos
    cálculos sobre el mismo ideal producen tuplas idénticas.

    Args:
        generators: Generadores del ideal
        known: Los primeros `known` generadores (no nulos) ya son una base
            de Gröbner; sus pares no se vuelven a reducir

    Raises:
        RingMismatchError: Si los generadores viven en anillos distintos
    """
    polys = [f for f in generators if f]
    if not polys:
        return ()
    ring = polys[0].ring
    for f in polys:
        if f.ring != ring:
            raise RingMismatchError("Los generadores viven en anillos distintos")
    if any(f.is_constant() for f in polys):
        return (ring.one,)

    basis: List[Poly] = [f.monic() for f in polys]
    sugar: List[int] = [f.total_degree() for f in basis]
    pairs: Dict[Pair, PairKey] = {
        (i, j): _pair_key(basis, sugar, i, j)
        for j in range(max(known, 1), len(basis))
        for i in range(j)
    }
    processed = 0
    skipped = 0

    while pairs:
        i, j = select(pairs)
        pair_sugar = pairs.pop((i, j))[0]
        lead_i, lead_j = basis[i].leading_monomial, basis[j].leading_monomial
        lcm = monomial_lcm(lead_i, lead_j)
        coprime = lcm == monomial_mul(lead_i, lead_j)
        if coprime or _chain_criterion(i, j, lcm, basis, pairs.keys()):
            skipped += 1
            continue
        processed += 1
        remainder = reduce(spoly(basis[i], basis[j]), basis)
        if not remainder:
            continue
        if remainder.is_constant():
            return (ring.one,)
        basis.append(remainder.monic())
        sugar.append(max(pair_sugar, remainder.total_degree()))
        new = len(basis) - 1
        for k in range(new):
            pairs[(k, new)] = _pair_key(basis, sugar, k, new)

    key = ring.order_key
    reduced = interreduce(minimalize(basis))
    reduced.sort(key=lambda g: key(g.leading_monomial), reverse=True)

    log_metric(logger, "groebner.basis_size", len(reduced), {
        "pairs_reduced": processed,
        "pairs_skipped": skipped,
        "variables": ring.ngens,
    })
    return tuple(reduced)


def is_groebner_basis(basis: Sequence[Poly]) -> bool:
    """Criterio de Buchberger: todo S-polinomio reduce a cero."""
    return all(
        not reduce(spoly(basis[i], basis[j]), basis)
        for j in range(len(basis))
        for i in range(j)
    )
