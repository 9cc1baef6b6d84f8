from importlib.metadata import version, PackageNotFoundError
from sys import stderr

from pytz import all_timezones, timezone, BaseTzInfo

from sic.config.environment import get_sic_env_var, get_sic_env_var_or_default
from sic.config.defaults import CONFIG_DEFAULTS


def __get_module_version() -> str:
    env_version = get_sic_env_var_or_default('version')
    if env_version is not None:
        return env_version

    try:
        return version('selfish-index-coding')

    except PackageNotFoundError:
        # NOTE: not able to use sic.utils.debug.log_warn because of circular dependency
        stderr.write('\x1b[1;33mWARNING: Module version could not be determined!\x1b[0m\n')
        return '0.0.0'


VERSION = __get_module_version()


class Config:
    @staticmethod
    def _from_env_or_default(setting: str) -> any:
        env_var_value = get_sic_env_var(setting)
        if env_var_value is not None:
            return env_var_value

        if setting not in CONFIG_DEFAULTS:
            return None

        return CONFIG_DEFAULTS[setting]

    def get(self, setting: str) -> any:
        return self._from_env_or_default(setting)

    def __getitem__(self, setting):
        return self._from_env_or_default(setting)

    def get_int(self, setting: str) -> int:
        val = self.get(setting)
        try:
            return int(val)

        except (TypeError, ValueError):
            raise ValueError(f"Setting '{setting}' has to be an integer: '{val}'").with_traceback(None) from None

    @property
    def timezone_str(self) -> str:
        tz_str = self.get('timezone')

        if tz_str not in all_timezones:
            return 'UTC'

        return tz_str

    @property
    def timezone(self) -> BaseTzInfo:
        return timezone(self.timezone_str)

    def is_true(self, setting: str, fallback: bool = False) -> bool:
        val = self.get(setting)
        if val is None:
            return fallback

        if isinstance(val, bool):
            return val

        return str(val).lower() in ['1', 'true', 'y', 'yes']


config = Config()


def init_config():
    # pylint: disable=W0603
    global config
    config = Config()
