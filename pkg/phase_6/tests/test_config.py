"""
Unit tests for phase_6/config.py (environment settings, overrides)
"""

import pytest

from phase_6.config import DEFAULT_LOG_LEVEL, DEFAULT_OUTPUT, Settings, load_settings


class TestLoadSettings:
    def test_defaults_from_empty_env(self):
        settings = load_settings({})
        assert settings == Settings()
        assert settings.output == DEFAULT_OUTPUT
        assert settings.log_level == DEFAULT_LOG_LEVEL
        assert settings.probes == 8
        assert settings.seed == 0
        assert settings.workers == 1

    def test_reads_prefixed_keys(self):
        settings = load_settings({
            "LAZARD_CAD_SEED": "42",
            "LAZARD_CAD_PROBES": "3",
            "LAZARD_CAD_OUTPUT": "JSON",
            "LAZARD_CAD_LOG_LEVEL": "debug",
            "LAZARD_CAD_WORKERS": "4",
        })
        assert settings == Settings(seed=42, probes=3, output="json", log_level="DEBUG", workers=4)

    def test_blank_value_keeps_default(self):
        assert load_settings({"LAZARD_CAD_SEED": "  "}).seed == 0

    def test_non_integer_rejected(self):
        with pytest.raises(ValueError, match="LAZARD_CAD_PROBES must be an integer"):
            load_settings({"LAZARD_CAD_PROBES": "many"})

    def test_unknown_output_rejected(self):
        with pytest.raises(ValueError, match="LAZARD_CAD_OUTPUT must be one of"):
            load_settings({"LAZARD_CAD_OUTPUT": "yaml"})

    def test_negative_probes_rejected(self):
        with pytest.raises(ValueError, match="LAZARD_CAD_PROBES must be non-negative"):
            load_settings({"LAZARD_CAD_PROBES": "-1"})

    def test_zero_workers_rejected(self):
        with pytest.raises(ValueError, match="LAZARD_CAD_WORKERS must be positive"):
            load_settings({"LAZARD_CAD_WORKERS": "0"})


class TestOverride:
    def test_none_values_ignored(self):
        base = Settings(seed=5)
        assert base.override(seed=None, probes=None) == base

    def test_values_applied(self):
        assert Settings().override(seed=7, output="json") == Settings(seed=7, output="json")

    def test_override_is_validated(self):
        with pytest.raises(ValueError, match="LAZARD_CAD_LOG_LEVEL"):
            Settings().override(log_level="LOUD")
