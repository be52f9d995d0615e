from fractions import Fraction

import pytest

from algebra.gaussian import I_UNIT, GaussianRational
from algebra.polynomial import MAX_TOTAL_DEGREE, PolyRing
from exceptions import (
    DegreeOverflowError,
    DimensionMismatchError,
    PolySyntaxError,
    UnknownIdentifierError,
)
from parsers.poly_parser import PolyParser, parse_point, parse_poly, parse_scalar, tokenize
from zerolocus.fuzzing import random_poly


@pytest.fixture
def ring_form():
    return PolyRing(("s", "x0", "x1", "x2", "x3"))


class TestTokenize:

    def test_kinds_and_offsets(self):
        tokens = tokenize("2*x^3 - i")
        assert [t.kind for t in tokens] == ["number", "op", "ident", "op", "number", "op", "ident", "end"]
        assert [t.offset for t in tokens] == [0, 1, 2, 3, 4, 6, 8, 9]

    def test_unexpected_character(self):
        with pytest.raises(PolySyntaxError) as exc_info:
            tokenize("x + 2.5")
        assert exc_info.value.offset == 5

    def test_offsets_are_bytes(self):
        with pytest.raises(PolySyntaxError) as exc_info:
            tokenize("x + ξ")
        assert exc_info.value.offset == 4
        assert tokenize("\u00a0x")[0].offset == 2


class TestParsePoly:

    def test_sum_of_squares(self, ring_xy):
        x, y = ring_xy.gens
        assert parse_poly("x^2 + y^2", ring_xy) == x ** 2 + y ** 2

    def test_plane_with_gaussian_coefficients(self, ring_form):
        s, x0, x1, x2, x3 = ring_form.gens
        parsed = parse_poly("s*x0 + i*x1 - x2 + i*s*x3", ring_form)
        assert parsed == s * x0 + I_UNIT * x1 - x2 + I_UNIT * s * x3

    def test_unary_minus_binds_weaker_than_power(self, ring_xy):
        x, _ = ring_xy.gens
        assert parse_poly("-x^2", ring_xy) == -(x ** 2)
        assert parse_poly("(-x)^2", ring_xy) == x ** 2
        assert parse_poly("--x", ring_xy) == x
        assert parse_poly("-2^2", ring_xy) == -4
        assert parse_poly("x*-y", ring_xy) == -(x * ring_xy.gens[1])

    def test_parentheses_and_products(self, ring_xy):
        x, y = ring_xy.gens
        assert parse_poly("(x + 1)*(x - 1)", ring_xy) == x ** 2 - 1
        assert parse_poly("2*(x*y)^2", ring_xy) == 2 * x ** 2 * y ** 2

    def test_rational_coefficients(self, ring_xy):
        x, _ = ring_xy.gens
        assert parse_poly("3/6*x", ring_xy) == x * Fraction(1, 2)

    def test_whitespace_ignored(self, ring_xy):
        assert parse_poly("  x\t*\ny ", ring_xy) == parse_poly("x*y", ring_xy)

    @pytest.mark.parametrize("text, offset", [
        ("", 0),
        ("   ", 0),
        ("x +", 3),
        ("x * * y", 4),
        ("(x + y", 6),
        ("x y", 2),
        ("1/0", 2),
        ("x^y", 2),
    ])
    def test_syntax_errors(self, ring_xy, text, offset):
        with pytest.raises(PolySyntaxError) as exc_info:
            parse_poly(text, ring_xy)
        assert exc_info.value.offset == offset

    def test_unknown_identifier(self, ring_xy):
        with pytest.raises(UnknownIdentifierError) as exc_info:
            parse_poly("x + z", ring_xy)
        assert exc_info.value.identifier == "z"
        assert exc_info.value.offset == 4

    def test_exponent_limit(self, ring_xy):
        with pytest.raises(DegreeOverflowError):
            parse_poly(f"x^{MAX_TOTAL_DEGREE + 1}", ring_xy)

    def test_parser_reusable(self, ring_xy):
        parser = PolyParser(ring_xy)
        assert parser.parse("x") == ring_xy.gens[0]
        assert parser.parse("y") == ring_xy.gens[1]

    def test_str_round_trip(self, rng, ring_xy):
        for _ in range(50):
            p = random_poly(rng, ring_xy, 3, 5)
            assert parse_poly(str(p), ring_xy) == p


class TestScalarsAndPoints:

    @pytest.mark.parametrize("text, value", [
        ("3", GaussianRational(3)),
        ("-1/2", GaussianRational(Fraction(-1, 2))),
        ("1/2*i - 3", GaussianRational(-3, Fraction(1, 2))),
        ("2+3*i", GaussianRational(2, 3)),
        ("i^2", GaussianRational(-1)),
    ])
    def test_parse_scalar(self, text, value):
        assert parse_scalar(text) == value

    def test_scalar_rejects_variables(self):
        with pytest.raises(UnknownIdentifierError):
            parse_scalar("x")

    def test_parse_point(self):
        assert parse_point("0, -1/2, i") == (
            GaussianRational(0), GaussianRational(Fraction(-1, 2)), I_UNIT,
        )
        assert parse_point("") == ()

    def test_point_dimension(self):
        with pytest.raises(DimensionMismatchError):
            parse_point("1,2", dimension=3)

    def test_point_error_offset_spans_whole_text(self):
        with pytest.raises(PolySyntaxError) as exc_info:
            parse_point("1, 2*")
        assert exc_info.value.offset == 5

    def test_point_unknown_identifier_offset(self):
        with pytest.raises(UnknownIdentifierError) as exc_info:
            parse_point("0,1/2,x")
        assert exc_info.value.offset == 6

    def test_point_empty_coordinate_offset(self):
        with pytest.raises(PolySyntaxError) as exc_info:
            parse_point("1,,2")
        assert exc_info.value.offset == 2
