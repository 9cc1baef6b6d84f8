from datetime import datetime

# need to be referenced multiple times without import dependencies
CONFIG_DEFAULTS = {
    'seed': 0,
    'guard_n': 8,  # vcg_general clients
    'guard_cycles': 10,  # cycle enumeration/packing clients
    'guard_audit': 6,
    'guard_rows': 24,  # candidate rows of the row-subset oracles
    'guard_matching': 14,  # brute-force matching vertices
    'workers': 1,
    'runs': 500,
    'debug': False,
    'deployment': 'prod',
    'timezone': datetime.now().astimezone().tzname(),
}
