"""
infinitesimal/quadric.py
Identidades polinomiales del ejemplo de la cuádrica Q = V(x0^2 + x1^2 +
x2^2 + x3^2) ⊂ P^3: rectas L_α, L_β, L_γ, la familia Q_s, los puntos fijos de
la involución θ y los planos F1, F2, F3.

Cada comprobación es una identidad exacta en Q(i)[s, t]; las igualdades
proyectivas se deciden anulando todos los menores 2x2 de los dos vectores
de coordenadas.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from algebra.gaussian import I_UNIT
from algebra.polynomial import Poly, PolyRing
from parsers.poly_parser import parse_poly
from utils.logger import setup_logger

logger = setup_logger(__name__)

Vector = Tuple[Poly, ...]

# Coordenadas de los puntos y rectas: polinomios en s (familia) y t (recta)
POINT_RING = PolyRing(("s", "t"))
# Formas en P^3 con s como parámetro
FORM_RING = PolyRing(("s", "t", "x0", "x1", "x2", "x3"))

FORMS = {
    "q": "x0^2 + x1^2 + x2^2 + x3^2",
    "Q_s": "s^2*x0^2 + x1^2 - x2^2 - s^2*x3^2",
    "F1": "s*x0 + i*x1 - x2 + i*s*x3",
    "F2": "s*x0 - i*x1 + x2 + i*s*x3",
    "F3": "i*x1 + x2",
}

LINES = {
    "L_alpha": "1, t, i*t, i",
    "L_beta": "1, t, -i*t, i",
    "L_gamma": "1, t, -i*t, -i",
}

POINTS = {
    "alpha1": "1, i*s, -s, i",
    "alpha2": "1, -i*s, s, i",
    "gamma1": "1, i*s, s, -i",
    "gamma2": "1, -i*s, -s, -i",
    "beta1": "1, i*s, s, i",
    "beta2": "1, -i*s, -s, i",
}

# Cada punto fijo es la recta evaluada en t = ±i*s
POINT_ON_LINE = {
    "alpha1": ("L_alpha", "i*s"),
    "alpha2": ("L_alpha", "-i*s"),
    "gamma1": ("L_gamma", "i*s"),
    "gamma2": ("L_gamma", "-i*s"),
    "beta1": ("L_beta", "i*s"),
    "beta2": ("L_beta", "-i*s"),
}

INCIDENCES = {
    "F1": ("alpha1", "alpha2", "gamma1"),
    "F2": ("alpha1", "alpha2", "gamma2"),
    "F3": ("beta1", "beta2", "gamma1", "gamma2"),
}


@dataclass(frozen=True)
class QuadricCheck:
    name: str
    description: str
    passed: bool


def _vector(text: str) -> Vector:
    return tuple(parse_poly(part, POINT_RING) for part in text.split(","))


@lru_cache(maxsize=1)
def _data() -> Tuple[Dict[str, Poly], Dict[str, Vector], Dict[str, Vector]]:
    forms = {name: parse_poly(text, FORM_RING) for name, text in FORMS.items()}
    lines = {name: _vector(text) for name, text in LINES.items()}
    points = {name: _vector(text) for name, text in POINTS.items()}
    return forms, lines, points


def theta(v: Sequence[Poly]) -> Vector:
    """(c0, c1, c2, c3) -> (-c3, -c2, c1, c0)."""
    c0, c1, c2, c3 = v
    return (-c3, -c2, c1, c0)


def evaluate_form(form: Poly, v: Sequence[Poly]) -> Poly:
    """Sustituye x0..x3 por las coordenadas de v (s y t quedan libres)."""
    s, t = POINT_RING.gens
    return form.substitute([s, t, *v])


def projectively_equal(v: Sequence[Poly], w: Sequence[Poly]) -> bool:
    """v y w no nulos y proporcionales sobre el cuerpo de fracciones."""
    if all(c.is_zero() for c in v) or all(c.is_zero() for c in w):
        return False
    return all((v[a] * w[b] - v[b] * w[a]).is_zero() for a, b in combinations(range(len(v)), 2))


def is_multiple(v: Sequence[Poly], w: Sequence[Poly], factor) -> bool:
    """v == factor * w coordenada a coordenada."""
    return all((a - b * factor).is_zero() for a, b in zip(v, w))


def _on_line(line: Vector, value: Poly) -> Vector:
    s, t = POINT_RING.gens
    return tuple(c.substitute([s, value]) for c in line)


def _form_fixed(form: Poly, factor) -> bool:
    """form ∘ θ == factor * form como identidad en Q(i)[s, t, x]."""
    s, t, *x = FORM_RING.gens
    return (form.substitute([s, t, *theta(x)]) - form * factor).is_zero()


def quadric_example_checks() -> List[QuadricCheck]:
    forms, lines, points = _data()
    q, q_s = forms["q"], forms["Q_s"]
    checks: List[QuadricCheck] = []

    def add(name: str, description: str, passed: bool) -> None:
        checks.append(QuadricCheck(name, description, passed))

    for name, line in lines.items():
        add(f"{name} ⊂ Q", f"q({', '.join(map(str, line))}) = 0", evaluate_form(q, line).is_zero())

    for name, point in points.items():
        add(f"{name} ∈ Q", f"q({name}) = 0", evaluate_form(q, point).is_zero())
        add(f"{name} ∈ Q_s", f"s^2*x0^2 + x1^2 - x2^2 - s^2*x3^2 en {name} = 0",
            evaluate_form(q_s, point).is_zero())

    for form_name, names in INCIDENCES.items():
        for name in names:
            add(f"{form_name}({name}) = 0", f"{FORMS[form_name]} se anula en {name}",
                evaluate_form(forms[form_name], points[name]).is_zero())

    add("θ fija q", "q ∘ θ = q", _form_fixed(q, 1))
    add("θ fija Q_s", "Q_s ∘ θ = -Q_s", _form_fixed(q_s, -1))
    for name in ("L_alpha", "L_gamma"):
        add(f"θ fija {name}", f"θ({name}(t)) ∼ {name}(t)",
            projectively_equal(theta(lines[name]), lines[name]))
    for name in ("alpha1", "alpha2", "gamma1", "gamma2"):
        add(f"θ fija {name}", f"θ({name}) ∼ {name}",
            projectively_equal(theta(points[name]), points[name]))
    add("θ: beta1 ↦ beta2", "θ(beta1) ∼ beta2",
        projectively_equal(theta(points["beta1"]), points["beta2"]))
    add("θ: beta2 ↦ beta1", "θ(beta2) ∼ beta1",
        projectively_equal(theta(points["beta2"]), points["beta1"]))

    for name, (line_name, value) in POINT_ON_LINE.items():
        on_line = _on_line(lines[line_name], parse_poly(value, POINT_RING))
        add(f"{name} = {line_name}({value})", f"{name} ∼ {line_name}({value})",
            projectively_equal(on_line, points[name]))

    add("θ = -i en L_alpha", "θ(L_alpha(t)) = -i·L_alpha(t)",
        is_multiple(theta(lines["L_alpha"]), lines["L_alpha"], -I_UNIT))
    add("θ = +i en L_gamma", "θ(L_gamma(t)) = i·L_gamma(t)",
        is_multiple(theta(lines["L_gamma"]), lines["L_gamma"], I_UNIT))

    x = FORM_RING.gens[2:]
    add("θ∘θ = -Id", "θ(θ(x)) = -x", is_multiple(theta(theta(x)), x, -1))

    def direction(line: Vector) -> Vector:
        s, t = POINT_RING.gens
        return tuple(c.substitute([s, POINT_RING.one]) - c.substitute([s, POINT_RING.zero]) for c in line)

    add("L_gamma ∩ L_beta en t = ∞", "L_gamma y L_beta tienen la misma dirección",
        projectively_equal(direction(lines["L_gamma"]), direction(lines["L_beta"])))

    failed = [c.name for c in checks if not c.passed]
    if failed:
        logger.error(f"Comprobaciones de la cuádrica fallidas: {failed}")
    return checks
