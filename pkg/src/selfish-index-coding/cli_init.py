from os import path as os_path
from sys import path as sys_path


def init_cli():
    # pylint: disable=E0401,C0415
    try:
        from sic.config.main import init_config

    except ModuleNotFoundError:
        # source checkout without install
        sys_path.append(os_path.dirname(os_path.abspath(__file__)))
        from sic.config.main import init_config

    # settings are read lazily, CLI options and the config-file are applied later
    init_config()

    from sic.utils.debug import warn_if_development
    warn_if_development()
