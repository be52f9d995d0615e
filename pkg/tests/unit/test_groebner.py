from fractions import Fraction

import pytest
import sympy

from algebra.gaussian import GaussianRational
from algebra.polynomial import Poly, PolyRing, poly_sum
from exceptions import RingMismatchError
from groebner.buchberger import buchberger, is_groebner_basis, reduce, spoly
from groebner.ideal import (
    Ideal,
    clear_basis_cache,
    groebner_basis,
    ideal_contains,
    ideal_sum,
    ideals_equal,
    normal_form,
    radical_membership,
)
from zerolocus.fuzzing import random_poly


def sympy_basis(generators, ring):
    symbols = sympy.symbols(ring.variable_names)
    exprs = [g.as_expr() for g in generators]
    return sympy.groebner(exprs, *symbols, order=ring.monomial_order)


def from_sympy(expr, ring):
    """Convierte una expresión de sympy con coeficientes en Q(i) a Poly."""
    symbols = sympy.symbols(ring.variable_names)
    terms = {}
    for monomial, coefficient in sympy.Poly(expr, *symbols).as_dict(native=False).items():
        coefficient = sympy.expand(coefficient)
        re, im = sympy.re(coefficient), sympy.im(coefficient)
        terms[monomial] = GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
    return Poly(ring, terms)


class TestBuchberger:

    def test_zero_ideal(self, ring_xy):
        assert buchberger([]) == ()
        assert buchberger([ring_xy.zero]) == ()

    def test_constant_gives_unit(self, ring_xy):
        x, _ = ring_xy.gens
        assert buchberger([x, ring_xy.constant(3)]) == (ring_xy.one,)

    def test_inconsistent_system(self, ring_xy):
        x, y = ring_xy.gens
        assert buchberger([x * y - 1, x]) == (ring_xy.one,)

    def test_known_basis(self):
        ring = PolyRing(("x", "y"), "lex")
        x, y = ring.gens
        basis = buchberger([x ** 2 + y, x * y])
        # <x^2 + y, xy> = <x^2 + y, xy, y^2>
        assert set(basis) == {x ** 2 + y, x * y, y ** 2}

    def test_spoly(self, ring_xy):
        x, y = ring_xy.gens
        assert spoly(x ** 2 + y, x * y) == y ** 2

    def test_reduce_full_remainder(self, ring_xy):
        x, y = ring_xy.gens
        assert reduce(x ** 2 + y + 1, [x]) == y + 1

    def test_ring_mismatch(self, ring_xy, ring_x):
        with pytest.raises(RingMismatchError):
            buchberger([ring_xy.gens[0], ring_x.gens[0]])

    @pytest.mark.parametrize("order", ["grevlex", "lex"])
    def test_matches_sympy(self, rng, order):
        ring = PolyRing(("x", "y"), order)
        for _ in range(15):
            generators = [random_poly(rng, ring, 2, 3) for _ in range(rng.randint(1, 3))]
            generators = [g for g in generators if g] or [ring.gens[0]]
            ours = buchberger(generators)
            theirs = sympy_basis(generators, ring)
            assert set(ours) == {from_sympy(e, ring).monic() for e in theirs.exprs}

    def test_reduced_basis_is_unique_under_shuffles(self, rng, ring_xy):
        for _ in range(50):
            generators = [random_poly(rng, ring_xy, 2, 3) for _ in range(3)]
            expected = buchberger(generators)
            shuffled = list(generators)
            rng.shuffle(shuffled)
            assert buchberger(shuffled) == expected

    def test_s_polynomials_reduce_to_zero(self, rng, ring_xy):
        for _ in range(20):
            generators = [random_poly(rng, ring_xy, 2, 3) for _ in range(3)]
            basis = buchberger(generators)
            assert is_groebner_basis(basis)
            for g in basis:
                assert g.leading_coefficient == 1

    def test_basis_sorted_by_leading_monomial(self, rng, ring_xy):
        key = ring_xy.order_key
        for _ in range(10):
            basis = buchberger([random_poly(rng, ring_xy, 2, 3) for _ in range(3)])
            leads = [key(g.leading_monomial) for g in basis]
            assert leads == sorted(leads, reverse=True)


class TestIdeal:

    def test_generators_deduplicated(self, ring_xy):
        x, y = ring_xy.gens
        ideal = Ideal(ring_xy, [x, ring_xy.zero, x, y])
        assert ideal.generators == (x, y)
        assert len(ideal) == 2

    def test_basis_is_cached(self, ring_xy, mocker):
        import groebner.ideal as ideal_module
        clear_basis_cache()
        spy = mocker.spy(ideal_module, "buchberger")
        x, y = ring_xy.gens
        ideal = Ideal(ring_xy, [x ** 2, x * y])
        assert not ideal.has_basis
        ideal.basis
        ideal.basis
        assert spy.call_count == 1
        assert groebner_basis(ideal) is ideal

    def test_normal_form_membership(self, ring_xy):
        x, y = ring_xy.gens
        ideal = Ideal(ring_xy, [x ** 2 + y ** 2, x * y])
        # x^3 = x*(x^2 + y^2) - y*(x*y)
        assert normal_form(x ** 3, ideal).is_zero()
        assert x ** 3 == x * (x ** 2 + y ** 2) - y * (x * y)
        assert not ideal_contains(ideal, x ** 2)

    def test_unit_and_zero(self, ring_xy):
        assert Ideal.unit(ring_xy).is_unit()
        assert Ideal.zero(ring_xy).is_zero()
        assert not Ideal.zero(ring_xy).is_unit()

    def test_ideals_equal(self, ring_xy):
        x, y = ring_xy.gens
        a = Ideal(ring_xy, [x + y, x - y])
        b = Ideal(ring_xy, [x, y])
        assert a != b
        assert ideals_equal(a, b)
        assert not ideals_equal(b, Ideal(ring_xy, [x]))

    def test_ideal_sum(self, ring_xy, ring_x):
        x, y = ring_xy.gens
        total = ideal_sum(Ideal(ring_xy, [x]), Ideal(ring_xy, [y, x]))
        assert total.generators == (x, y)
        with pytest.raises(RingMismatchError):
            ideal_sum(Ideal(ring_xy, [x]), Ideal(ring_x, []))

    def test_str(self, ring_xy):
        x, y = ring_xy.gens
        assert str(Ideal(ring_xy, [x, y - 1])) == "<x, y - 1>"


class TestRadicalMembership:

    def test_power_in_radical(self, ring_xy):
        x, _ = ring_xy.gens
        assert radical_membership(x, Ideal(ring_xy, [x ** 2]))

    def test_not_in_radical(self, ring_xy):
        x, y = ring_xy.gens
        assert not radical_membership(y, Ideal(ring_xy, [x]))

    def test_unit_ideal_contains_everything(self, ring_xy):
        _, y = ring_xy.gens
        assert radical_membership(y, Ideal.unit(ring_xy))

    def test_zero_ideal(self, ring_xy):
        x, _ = ring_xy.gens
        assert not radical_membership(x, Ideal.zero(ring_xy))
        assert radical_membership(ring_xy.zero, Ideal.zero(ring_xy))

    def test_product_of_coordinates(self, ring_xy):
        x, y = ring_xy.gens
        ideal = Ideal(ring_xy, [x, y])
        assert radical_membership(x * y, ideal)
        assert radical_membership(x + y, Ideal(ring_xy, [(x + y) ** 3, y ** 2 - x * y]))

    def test_fresh_variable_avoids_collision(self):
        ring = PolyRing(("t", "x"))
        t, x = ring.gens
        assert radical_membership(t, Ideal(ring, [t ** 3]))
        assert not radical_membership(t, Ideal(ring, [x]))

    def test_lex_ring(self):
        ring = PolyRing(("x", "y"), "lex")
        x, y = ring.gens
        assert radical_membership(x * y, Ideal(ring, [x ** 2, y ** 3]))

    def test_generator_not_dividing_power(self, ring_xy):
        x, y = ring_xy.gens
        # (1, 1) anula el generador pero no a x + y
        assert not radical_membership(x + y, Ideal(ring_xy, [(x + y) ** 3 * (x - y)]))

    def test_membership_implies_radical(self, rng, ring_xy):
        for _ in range(30):
            generators = [random_poly(rng, ring_xy, 2, 3) for _ in range(2)]
            ideal = Ideal(ring_xy, generators)
            h = poly_sum(ring_xy, (random_poly(rng, ring_xy, 1, 3) * g for g in ideal.generators))
            assert normal_form(h, ideal).is_zero()
            assert radical_membership(h, ideal)

    def test_square_root_of_combination(self, rng, ring_xy):
        for _ in range(20):
            g1, g2 = random_poly(rng, ring_xy, 2, 3), random_poly(rng, ring_xy, 2, 3)
            c, d = random_poly(rng, ring_xy, 1, 3), random_poly(rng, ring_xy, 1, 3)
            # (c*g1 + d*g2)^2 pertenece a <g1^2, g2>
            assert radical_membership(c * g1 + d * g2, Ideal(ring_xy, [g1 ** 2, g2]))

    def test_agrees_with_extra_variable_test(self, rng, ring_xy):
        for _ in range(30):
            ideal = Ideal(ring_xy, [random_poly(rng, ring_xy, 2, 3) for _ in range(2)])
            p = random_poly(rng, ring_xy, 2, 3)
            assert radical_membership(p, ideal) == one_with_extra_variable(p, ideal)

    def test_finite_quotient_avoids_extra_variable(self, ring_xy, mocker):
        import groebner.ideal as ideal_module
        clear_basis_cache()
        spy = mocker.spy(ideal_module, "buchberger")
        x, y = ring_xy.gens
        ideal = Ideal(ring_xy, [x ** 2, y ** 2])
        assert radical_membership(x + y, ideal)
        assert not radical_membership(x + 1, ideal)
        rings = {g.ring for call in spy.call_args_list for g in call.args[0]}
        assert all(ring.ngens <= 2 for ring in rings)

    def test_finite_quotient_with_simple_points(self, ring_xy):
        x, y = ring_xy.gens
        # V = {(1, 0), (-1, 0)}
        ideal = Ideal(ring_xy, [x ** 2 - 1, y])
        assert not radical_membership(x - 1, ideal)
        assert radical_membership((x - 1) * (x + 1) + y, ideal)
        assert radical_membership(y * (x + 3), ideal)


def one_with_extra_variable(p, ideal):
    ring = ideal.ring
    extended = PolyRing(ring.variable_names + ("t",), "grevlex")
    t = extended.gens[-1]
    generators = [g.embed(extended) for g in ideal.generators]
    generators.append(extended.one - t * p.embed(extended))
    return buchberger(generators) == (extended.one,)


class TestNormalForm:

    def test_idempotent(self, rng, ring_xy):
        for _ in range(30):
            ideal = Ideal(ring_xy, [random_poly(rng, ring_xy, 2, 3) for _ in range(3)])
            p = random_poly(rng, ring_xy, 3, 5)
            once = normal_form(p, ideal)
            assert normal_form(once, ideal) == once

    def test_cofactor_combinations_reduce_to_zero(self, rng, ring_xy):
        for _ in range(100):
            generators = [g for g in (random_poly(rng, ring_xy, 2, 3) for _ in range(3)) if g]
            ideal = Ideal(ring_xy, generators)
            h = poly_sum(ring_xy, (random_poly(rng, ring_xy, 2, 3) * g for g in generators))
            assert normal_form(h, ideal).is_zero()

    def test_reduce_matches_difference_of_representatives(self, rng, ring_xy):
        for _ in range(20):
            ideal = Ideal(ring_xy, [random_poly(rng, ring_xy, 2, 3) for _ in range(2)])
            p, h = random_poly(rng, ring_xy, 3, 3), random_poly(rng, ring_xy, 1, 3)
            shifted = p + poly_sum(ring_xy, (h * g for g in ideal.generators))
            assert normal_form(shifted, ideal) == normal_form(p, ideal)


class TestIncrementalBasis:

    def test_known_prefix_gives_same_basis(self, rng, ring_xy):
        for _ in range(20):
            first = [random_poly(rng, ring_xy, 2, 3) for _ in range(2)]
            extra = [random_poly(rng, ring_xy, 2, 3) for _ in range(2)]
            prefix = list(buchberger(first))
            assert buchberger(prefix + extra, known=len(prefix)) == buchberger(first + extra)

    def test_sum_reuses_first_summand_basis(self, rng, ring_xy):
        for _ in range(20):
            a = Ideal(ring_xy, [random_poly(rng, ring_xy, 2, 3) for _ in range(2)])
            b = Ideal(ring_xy, [random_poly(rng, ring_xy, 2, 3)])
            total = ideal_sum(a, b)
            plain = Ideal(ring_xy, a.generators + b.generators)
            assert total.basis == plain.basis
            if not a.is_zero():
                assert a.has_basis

    def test_unit_summand_short_circuits(self, ring_xy, mocker):
        import groebner.ideal as ideal_module
        x, y = ring_xy.gens
        unit = Ideal(ring_xy, [x, x - 1])
        assert unit.is_unit()
        spy = mocker.spy(ideal_module, "buchberger")
        assert ideal_sum(unit, Ideal(ring_xy, [y ** 3 - x])).is_unit()
        assert spy.call_count == 0

    def test_scalar_multiples_share_cached_basis(self, ring_xy, mocker):
        import groebner.ideal as ideal_module
        clear_basis_cache()
        spy = mocker.spy(ideal_module, "buchberger")
        x, y = ring_xy.gens
        first = Ideal(ring_xy, [x ** 2 - y, x * y])
        second = Ideal(ring_xy, [3 * (x ** 2 - y), -(x * y)])
        assert first.basis == second.basis
        assert spy.call_count == 1
