import pytest

from sic.config.main import Config
from sic.config.environment import set_sic_env_var


def test_defaults():
    config = Config()
    assert config.get_int('seed') == 0
    assert config.get_int('guard_n') == 8
    assert config['guard_rows'] == 24
    assert not config.is_true('debug')
    assert config.get('unknown') is None


def test_env_overrides():
    config = Config()
    set_sic_env_var('guard_n', 3)
    set_sic_env_var('debug', 'yes')
    assert config.get_int('guard_n') == 3
    assert config.is_true('debug')


def test_invalid_int():
    set_sic_env_var('seed', 'abc')
    with pytest.raises(ValueError):
        Config().get_int('seed')


def test_timezone_fallback():
    set_sic_env_var('timezone', 'Not/AZone')
    assert Config().timezone_str == 'UTC'


def test_blank_env_uses_default():
    set_sic_env_var('guard_n', '  ')
    assert Config().get_int('guard_n') == 8
