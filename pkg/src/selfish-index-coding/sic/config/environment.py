from os import environ
from functools import cache

from sic.config.defaults import CONFIG_DEFAULTS
from sic.config.hardcoded import ENV_KEY_CONFIG

SIC_ENV_VARS = {
    'seed': ['SIC_SEED'],
    'guard_n': ['SIC_GUARD_N'],
    'guard_cycles': ['SIC_GUARD_CYCLES'],
    'guard_audit': ['SIC_GUARD_AUDIT'],
    'guard_rows': ['SIC_GUARD_ROWS'],
    'guard_matching': ['SIC_GUARD_MATCHING'],
    'workers': ['SIC_WORKERS'],
    'runs': ['SIC_RUNS'],
    'debug': ['SIC_DEBUG'],
    'deployment': ['SIC_ENV'],
    'timezone': ['SIC_TIMEZONE', 'TZ'],
    'version': ['SIC_VERSION'],
    'config': [ENV_KEY_CONFIG],
}

SIC_ENV_VARS_REV = {}
for key_config, keys_env in SIC_ENV_VARS.items():
    for key_env in keys_env:
        SIC_ENV_VARS_REV[key_env] = key_config


def get_sic_env_var(var: str) -> (str, None):
    if var in SIC_ENV_VARS:
        for key in SIC_ENV_VARS[var]:
            # blank values count as unset
            if environ.get(key, '').strip() != '':
                return environ[key]

    return None


@cache
def get_sic_env_var_or_default(var: str) -> (str, int, None):
    # only for settings that never change at runtime (version)
    val = get_sic_env_var(var)
    if val is None:
        val = CONFIG_DEFAULTS.get(var, None)

    return val


def set_sic_env_var(var: str, value: any):
    environ[SIC_ENV_VARS[var][0]] = str(value)
