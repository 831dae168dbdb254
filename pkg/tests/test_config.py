import dataclasses
import logging

import pytest

from kcones import Config


class TestConfig:
    def test_defaults(self):
        config = Config.from_env({})
        assert config.generator_cap == 20
        assert config.verify_jobs == 1
        assert not config.latex

    def test_environment_override(self):
        assert Config.from_env({'K_CONE_GEN_CAP': '5'}).generator_cap == 5

    def test_explicit_override_wins(self):
        config = Config.from_env({'K_CONE_GEN_CAP': '5'}, generator_cap=7)
        assert config.generator_cap == 7

    def test_malformed_value_is_ignored(self, caplog):
        with caplog.at_level(logging.WARNING, logger='kcones.config'):
            config = Config.from_env({'K_CONE_GEN_CAP': 'many'})
        assert config.generator_cap == 20
        assert 'K_CONE_GEN_CAP' in caplog.text

    @pytest.mark.parametrize('kwargs', [
        {'generator_cap': -1}, {'verify_jobs': 0}])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            Config(**kwargs)

    def test_frozen(self):
        with pytest.raises(dataclasses.FrozenInstanceError):
            Config().latex = True
