from sic.config.environment import get_sic_env_var


def deployment_dev() -> bool:
    return get_sic_env_var('deployment') == 'dev'


def deployment_staging() -> bool:
    return get_sic_env_var('deployment') == 'staging'

