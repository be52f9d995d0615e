import pytest

from config.settings import SUPPORTED_ORDERS, Settings
from exceptions import ConfigurationError, InvalidConfigurationError


class TestSettings:

    def test_defaults_are_valid(self):
        settings = Settings()
        settings.validate()
        assert settings.algebra.monomial_order in SUPPORTED_ORDERS
        assert settings.compute.workers >= 1

    def test_sections(self):
        settings = Settings()
        assert hasattr(settings, 'algebra')
        assert hasattr(settings, 'compute')
        assert hasattr(settings, 'fuzz')
        assert hasattr(settings, 'cli')
        assert settings.logging.level in ['DEBUG', 'INFO', 'WARNING', 'ERROR']

    def test_unknown_monomial_order(self):
        settings = Settings()
        settings.algebra.monomial_order = "deglex"
        with pytest.raises(InvalidConfigurationError):
            settings.validate()

    def test_workers_must_be_positive(self):
        settings = Settings()
        settings.compute.workers = 0
        with pytest.raises(InvalidConfigurationError) as exc_info:
            settings.validate()
        assert "ZEROLOCUS_WORKERS" in str(exc_info.value)

    @pytest.mark.parametrize("section, name, value", [
        ("fuzz", "points_per_presentation", 0),
        ("fuzz", "max_variables", 0),
        ("fuzz", "max_rows", -1),
        ("fuzz", "max_cols", 0),
        ("fuzz", "coefficient_bound", 0),
        ("fuzz", "max_degree", -1),
        ("cli", "grid_radius", -1),
        ("compute", "witness_points", -1),
    ])
    def test_invalid_bounds(self, section, name, value):
        settings = Settings()
        setattr(getattr(settings, section), name, value)
        with pytest.raises(InvalidConfigurationError):
            settings.validate()

    def test_witness_search_can_be_disabled(self):
        settings = Settings()
        settings.compute.witness_points = 0
        settings.validate()

    def test_zero_degree_allowed(self):
        settings = Settings()
        settings.fuzz.max_degree = 0
        settings.validate()

    def test_configuration_error_is_catchable(self):
        settings = Settings()
        settings.compute.workers = -3
        with pytest.raises(ConfigurationError):
            settings.validate()
