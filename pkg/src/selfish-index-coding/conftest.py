from os import environ
from pathlib import Path

import pytest

from sic.config.hardcoded import ENV_KEY_PREFIX
from sic.model.instance import Client, Instance, Report, ReportProfile
from sic.oracle.generate import gen_random_instance, run_seed
from sic.utils.serialize import load_instance

TEST_DIR = Path(__file__).parent.parent.parent / 'test'


@pytest.fixture(autouse=True)
def clean_sic_env():
    # cli runs write their global options into the environment
    before = {k: v for k, v in environ.items() if k.startswith(ENV_KEY_PREFIX)}
    yield
    for key in [k for k in environ if k.startswith(ENV_KEY_PREFIX)]:
        del environ[key]

    environ.update(before)


@pytest.fixture
def test_dir() -> Path:
    return TEST_DIR


@pytest.fixture
def overlap_low() -> tuple[Instance, ReportProfile]:
    return load_instance(TEST_DIR / 'instances' / 'overlap_low.json')


@pytest.fixture
def overlap_high() -> tuple[Instance, ReportProfile]:
    return load_instance(TEST_DIR / 'instances' / 'overlap_high.json')


@pytest.fixture
def path_four() -> tuple[Instance, ReportProfile]:
    return load_instance(TEST_DIR / 'instances' / 'path_four.json')


@pytest.fixture
def path_deviation() -> tuple[Instance, ReportProfile]:
    return load_instance(TEST_DIR / 'instances' / 'path_deviation.json')


@pytest.fixture
def make_instance():
    # unicast: client i wants chunk i
    def _make(values: list[int], sides: list[set]) -> Instance:
        return Instance(
            num_chunks=len(values),
            clients=tuple(Client(wants=i, side_info=frozenset(s), valuation=v)
                          for i, (v, s) in enumerate(zip(values, sides))),
        )

    return _make


@pytest.fixture
def make_reports():
    def _make(values: list[int], sides: list[set]) -> ReportProfile:
        return ReportProfile(tuple(Report(valuation=v, side_info=frozenset(s)) for v, s in zip(values, sides)))

    return _make


@pytest.fixture
def random_instances():
    def _generate(count: int, sizes: list[int], side_sizes: list[int], seed: int = 0) -> list[Instance]:
        instances = []
        run = 0
        while len(instances) < count:
            for n in sizes:
                for side in side_sizes:
                    if side <= n - 1 and len(instances) < count:
                        instances.append(gen_random_instance(n, side, run_seed(seed, n, side, run)))

            run += 1

        return instances

    return _generate
