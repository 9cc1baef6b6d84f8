# 1 transmission = 1.0 valuation unit
MICRO = 1_000_000
MICRO_DIGITS = 6
THRESHOLD_SENTINEL = MICRO + 1
LOG_TIME_FORMAT = '%Y-%m-%d %H:%M:%S %z'
ENV_KEY_CONFIG = 'SIC_CONFIG'
ENV_KEY_PREFIX = 'SIC_'
JSON_INDENT = 2
CSV_HEADER = ['n', 'side', 'mechanism', 'mean_welfare', 'mean_value', 'mean_eta', 'baseline_value']
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SIZE_GUARD = 2
EXPERIMENT_DEFAULT_CLIENTS = [10, 16, 22, 28, 34, 40, 46]
EXPERIMENT_DEFAULT_SIDES = [3, 6]
EXPERIMENT_DEFAULT_MECHANISMS = ['alg1_instant', 'alg2_maxc', 'sqrtn']
