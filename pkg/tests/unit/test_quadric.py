import pytest

from infinitesimal.quadric import (
    FORM_RING,
    POINT_RING,
    evaluate_form,
    is_multiple,
    projectively_equal,
    quadric_example_checks,
    theta,
)
from parsers.poly_parser import parse_poly


def vector(text):
    return tuple(parse_poly(part, POINT_RING) for part in text.split(","))


class TestQuadricExample:

    def test_all_checks_pass(self):
        checks = quadric_example_checks()
        failed = [c.name for c in checks if not c.passed]
        assert failed == []
        assert len(checks) > 30

    def test_names_unique(self):
        names = [c.name for c in quadric_example_checks()]
        assert len(names) == len(set(names))

    def test_theta_swaps_beta_points(self):
        beta1 = vector("1, i*s, s, i")
        beta2 = vector("1, -i*s, -s, i")
        assert projectively_equal(theta(beta1), beta2)
        assert not projectively_equal(beta1, beta2)

    def test_theta_squared(self):
        v = vector("1, t, s, s*t")
        assert is_multiple(theta(theta(v)), v, -1)

    def test_evaluate_form(self):
        q = parse_poly("x0^2 + x1^2 + x2^2 + x3^2", FORM_RING)
        assert evaluate_form(q, vector("1, t, i*t, i")).is_zero()
        assert evaluate_form(q, vector("1, 0, 0, 0")) == 1

    def test_zero_vector_is_not_a_point(self):
        zero = vector("0, 0, 0, 0")
        assert not projectively_equal(zero, zero)


class TestQuadricFailureReporting:

    def test_failure_is_logged(self, mocker, caplog):
        mocker.patch("infinitesimal.quadric.projectively_equal", return_value=False)
        with caplog.at_level("ERROR"):
            checks = quadric_example_checks()
        assert any(not c.passed for c in checks)
        assert "fallidas" in caplog.text


@pytest.mark.parametrize("text", ["1, i*s, -s, i", "1, -i*s, s, i"])
def test_alpha_points_fixed(text):
    point = vector(text)
    assert projectively_equal(theta(point), point)
