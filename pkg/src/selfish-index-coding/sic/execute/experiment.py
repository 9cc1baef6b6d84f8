from concurrent.futures import ProcessPoolExecutor
from csv import writer as csv_writer
from dataclasses import dataclass
from io import StringIO
from pathlib import Path

from yaml import safe_load as yaml_load
from yaml import YAMLError

from sic.config.main import config
from sic.config.hardcoded import (
    MICRO, CSV_HEADER, EXPERIMENT_DEFAULT_CLIENTS, EXPERIMENT_DEFAULT_SIDES, EXPERIMENT_DEFAULT_MECHANISMS,
)
from sic.core.welfare import recovered
from sic.mechanism.main import get_mechanism
from sic.oracle.generate import gen_random_instance, run_seed
from sic.utils.debug import log
from sic.utils.handlers import config_error, IndexCodingError
from sic.utils.util import format_mean

CONFIG_KEYS = ['client_counts', 'side_sizes', 'runs', 'seed', 'mechanisms', 'output', 'workers']


@dataclass(frozen=True)
class ExperimentConfig:
    client_counts: tuple[int, ...] = tuple(EXPERIMENT_DEFAULT_CLIENTS)
    side_sizes: tuple[int, ...] = tuple(EXPERIMENT_DEFAULT_SIDES)
    runs: int = 500
    seed: int = 0
    mechanisms: tuple[str, ...] = tuple(EXPERIMENT_DEFAULT_MECHANISMS)
    output: (str, None) = None
    workers: int = 1

    def __post_init__(self):
        if self.runs < 1:
            config_error(f"Experiment needs at least one run: {self.runs}")

        if self.workers < 1:
            config_error(f"Experiment needs at least one worker: {self.workers}")

        for mechanism in self.mechanisms:
            try:
                get_mechanism(mechanism)

            except IndexCodingError:
                config_error(f"Experiment references an unknown mechanism: '{mechanism}'")

        for n in self.client_counts:
            for side in self.side_sizes:
                if n < 1 or not 0 <= side <= n - 1:
                    config_error(f"Side information size {side} does not fit {n} clients")

    @property
    def points(self) -> list[tuple[int, int]]:
        return [(n, side) for n in self.client_counts for side in self.side_sizes]


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    side: int
    mechanism: str
    runs: int
    total_welfare: int
    total_value: int
    total_eta: int
    total_baseline: int

    def to_csv(self) -> list:
        return [
            self.n, self.side, self.mechanism,
            format_mean(self.total_welfare, self.runs),
            format_mean(self.total_value, self.runs),
            format_mean(self.total_eta, self.runs, unit=1),
            format_mean(self.total_baseline, self.runs),
        ]


@dataclass
class _Totals:
    welfare: int = 0
    value: int = 0
    eta: int = 0
    baseline: int = 0
    runs: int = 0


def _int_list(data: dict, key: str) -> (tuple, None):
    if key not in data:
        return None

    value = data[key]
    if isinstance(value, int) and not isinstance(value, bool):
        value = [value]

    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        config_error(f"Experiment setting '{key}' has to be a list of integers")

    return tuple(value)


def _int_value(data: dict, key: str, fallback: int) -> int:
    value = data.get(key, fallback)
    try:
        return int(value)

    except (TypeError, ValueError):
        config_error(f"Experiment setting '{key}' has to be an integer: '{value}'")
        return fallback


def experiment_config_from_dict(data: dict) -> ExperimentConfig:
    if data is None:
        data = {}

    if not isinstance(data, dict):
        config_error('Experiment config is not a dictionary')

    for key in data:
        if key not in CONFIG_KEYS:
            log(msg=f"Provided experiment setting is invalid: {key}", level=3)

    mechanisms = data.get('mechanisms', EXPERIMENT_DEFAULT_MECHANISMS)
    if isinstance(mechanisms, str):
        mechanisms = [m.strip() for m in mechanisms.split(',')]

    if not isinstance(mechanisms, list) or len(mechanisms) == 0:
        config_error("Experiment setting 'mechanisms' has to be a non-empty list")

    clients = _int_list(data, 'client_counts')
    sides = _int_list(data, 'side_sizes')
    return ExperimentConfig(
        client_counts=clients if clients is not None else tuple(EXPERIMENT_DEFAULT_CLIENTS),
        side_sizes=sides if sides is not None else tuple(EXPERIMENT_DEFAULT_SIDES),
        runs=_int_value(data, 'runs', config.get_int('runs')),
        seed=_int_value(data, 'seed', config.get_int('seed')),
        mechanisms=tuple(str(m) for m in mechanisms),
        output=data.get('output', None),
        workers=_int_value(data, 'workers', config.get_int('workers')),
    )


def load_experiment_config(path: (str, Path)) -> ExperimentConfig:
    # json files are valid yaml
    try:
        with open(path, 'r', encoding='utf-8') as _config:
            data = yaml_load(_config.read())

    except (OSError, YAMLError) as err:
        config_error(f"The provided experiment config could not be loaded: {path} - {err}")

    return experiment_config_from_dict(data)


def no_coding_baseline(values: (list, tuple), eta: int) -> int:
    if not 0 <= eta <= len(values):
        raise ValueError(f"Unable to send {eta} plain chunks to {len(values)} clients")

    return sum(sorted(values, reverse=True)[:eta])


def run_once(n: int, side: int, run: int, seed: int, mechanisms: tuple[str, ...]) -> list[tuple[int, int, int, int]]:
    """
    One simulation run: a fresh random instance solved by every mechanism with truthful reports.
    Returns (welfare, recovered valuation, eta, baseline) per mechanism in config order.
    """
    inst = gen_random_instance(n, side, run_seed(seed, n, side, run))
    reports = inst.truthful_reports()
    values = inst.valuations
    results = []
    for mechanism_id in mechanisms:
        scheme = get_mechanism(mechanism_id).scheme
        coding = scheme.solve(reports, inst.wants)
        eta = coding.matrix.eta
        ok = recovered(inst.sides, inst.wants, coding.matrix, scheme.mode)
        value = sum(v for v, hit in zip(values, ok) if hit)
        results.append((value - eta * MICRO, value, eta, no_coding_baseline(values, eta)))

    return results


def _run_job(job: tuple) -> list[tuple[int, int, int, int]]:
    return run_once(*job)


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    jobs = [
        (n, side, run, cfg.seed, cfg.mechanisms)
        for n, side in cfg.points
        for run in range(cfg.runs)
    ]
    log(f"Experiment: {len(cfg.points)} points x {cfg.runs} runs on {cfg.workers} worker(s)", level=4)

    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_run_job, jobs, chunksize=max(1, cfg.runs // cfg.workers)))

    else:
        results = [_run_job(job) for job in jobs]

    totals = {}
    for (n, side, _, _, _), per_mechanism in zip(jobs, results):
        for mechanism_id, (welfare, value, eta, baseline) in zip(cfg.mechanisms, per_mechanism):
            key = (n, side, mechanism_id)
            if key not in totals:
                totals[key] = _Totals()

            t = totals[key]
            t.welfare += welfare
            t.value += value
            t.eta += eta
            t.baseline += baseline
            t.runs += 1

        log(f"Finished point n={n} side={side}", level=7)

    return [
        ExperimentRow(
            n=n, side=side, mechanism=mechanism_id, runs=t.runs,
            total_welfare=t.welfare, total_value=t.value, total_eta=t.eta, total_baseline=t.baseline,
        )
        for (n, side, mechanism_id), t in totals.items()
    ]


def rows_to_csv(rows: list[ExperimentRow]) -> str:
    out = StringIO()
    csv = csv_writer(out, lineterminator='\n')
    csv.writerow(CSV_HEADER)
    for row in rows:
        csv.writerow(row.to_csv())

    return out.getvalue()


def row_lookup(rows: list[ExperimentRow]) -> dict[tuple[int, int, str], ExperimentRow]:
    return {(r.n, r.side, r.mechanism): r for r in rows}
