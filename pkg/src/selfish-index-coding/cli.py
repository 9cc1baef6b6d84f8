#!/usr/bin/env python3

from sys import exit as sys_exit
from sys import stderr
from argparse import ArgumentParser, Namespace
from typing import Callable

# pylint: disable=C0415


class CliParser(ArgumentParser):
    def error(self, message: str):
        # usage errors are validation errors; exit code 2 is reserved for size guards
        from sic.config.hardcoded import EXIT_VALIDATION
        self.print_usage(stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def _print_version():
    # python3 src/selfish-index-coding --version
    from sic.config.main import VERSION
    print(f'Version: {VERSION}')


def _load(args: Namespace):
    from sic.utils.serialize import load_instance
    return load_instance(args.instance)


def _mode(args: Namespace):
    from sic.model.coding import DecodeMode
    return None if args.mode is None else DecodeMode(args.mode)


def _cmd_solve(args: Namespace) -> str:
    from sic.mechanism.main import run_mechanism
    from sic.utils.serialize import dump_json

    inst, reports = _load(args)
    result = run_mechanism(inst, reports, args.mechanism, mode=_mode(args))
    return dump_json(result.to_dict())


def _cmd_price(args: Namespace) -> str:
    from sic.mechanism.main import run_mechanism
    from sic.utils.serialize import dump_json
    from sic.utils.util import format_micro

    inst, reports = _load(args)
    result = run_mechanism(inst, reports, args.mechanism, mode=_mode(args))
    return dump_json({
        'mechanism': result.mechanism,
        'payments': list(result.payments),
        'payments_decimal': [format_micro(p) for p in result.payments],
    })


def _cmd_audit(args: Namespace) -> str:
    from sic.oracle.audit import truthfulness_audit
    from sic.utils.serialize import dump_json
    from sic.utils.util import parse_micro

    inst, _ = _load(args)
    grid = [] if args.grid is None else [parse_micro(v.strip()) for v in args.grid.split(',') if v.strip() != '']
    return dump_json(truthfulness_audit(inst, args.mechanism, valuation_grid=grid).to_dict())


def _cmd_experiment(args: Namespace) -> str:
    from dataclasses import replace
    from sic.execute.experiment import load_experiment_config, run_experiment, rows_to_csv
    from sic.config.main import config

    cfg = load_experiment_config(args.experiment_config)
    if args.runs is not None:
        cfg = replace(cfg, runs=args.runs)

    if args.workers_set:
        cfg = replace(cfg, workers=config.get_int('workers'))

    if args.output is None and cfg.output is not None:
        args.output = cfg.output

    return rows_to_csv(run_experiment(cfg))


def _cmd_oracle(args: Namespace) -> str:
    from sic.core.welfare import welfare
    from sic.mechanism.main import get_mechanism, check_scenario
    from sic.model.coding import DecodeMode
    from sic.utils.serialize import dump_json
    from sic.utils.util import format_micro

    inst, reports = _load(args)
    mode = DecodeMode.GENERAL if args.mode is None else DecodeMode(args.mode)
    mechanism = get_mechanism(f'vcg_{mode.value}')
    check_scenario(inst, reports, mechanism)
    coding = mechanism.scheme.solve(reports, inst.wants)
    value = welfare(reports.valuations, reports.sides, inst.wants, coding.matrix, mode)
    return dump_json({
        'mode': mode.value,
        'matrix': coding.matrix.to_list(),
        'eta': coding.matrix.eta,
        'welfare': value,
        'welfare_decimal': format_micro(value),
    })


def _cmd_gen(args: Namespace) -> str:
    from sic.config.main import config
    from sic.oracle.generate import (
        gen_random_instance, gen_from_independent_set, gen_from_cycle_packing, read_edge_list,
    )
    from sic.utils.serialize import dump_json, instance_to_dict

    if args.kind == 'random':
        seed = args.gen_seed if args.gen_seed is not None else config.get_int('seed')
        inst = gen_random_instance(args.n, args.h, seed)
        data = instance_to_dict(inst)
        data['provenance'] = {'kind': 'random', 'n': args.n, 'side_size': args.h, 'seed': seed}
        return dump_json(data)

    if args.kind == 'isred':
        reduction = gen_from_independent_set(read_edge_list(args.edges, directed=False))

    else:
        reduction = gen_from_cycle_packing(read_edge_list(args.edges, directed=True))

    data = instance_to_dict(reduction.instance)
    data['provenance'] = reduction.to_dict()
    return dump_json(data)


def _cmd_graph(args: Namespace) -> str:
    from sic.graph.dependency import build_dependency_graph, to_dot
    from sic.model.instance import Scenario
    from sic.utils.handlers import NotUnicastError

    inst, reports = _load(args)
    if inst.scenario != Scenario.UNICAST:
        raise NotUnicastError('The dependency graph is only defined for unicast instances')

    return to_dot(build_dependency_graph(reports, inst.wants))


COMMANDS = {
    'solve': _cmd_solve,
    'price': _cmd_price,
    'audit': _cmd_audit,
    'experiment': _cmd_experiment,
    'oracle': _cmd_oracle,
    'gen': _cmd_gen,
    'graph': _cmd_graph,
}


def _mechanism_arg(parser: ArgumentParser, required: bool = True):
    from sic.mechanism.main import MechanismId
    parser.add_argument(
        '-m', '--mechanism', type=str, required=required, choices=[m.value for m in MechanismId],
    )


def _mode_arg(parser: ArgumentParser):
    parser.add_argument('--mode', type=str, required=False, default=None, choices=['instant', 'general'])


def build_parser() -> ArgumentParser:
    parser = CliParser(prog='selfish-index-coding', description='Truthful index coding mechanisms')
    parser.add_argument('-v', '--version', action='store_true', help='Print the version and exit')
    parser.add_argument('-c', '--config', type=str, required=False, help='YAML config-file')
    parser.add_argument('--seed', type=int, required=False, help='Base seed for generators and experiments')
    parser.add_argument('--guard-n', type=int, required=False, help='Client limit of the general VCG oracle')
    parser.add_argument('--workers', type=int, required=False, help='Experiment worker processes')
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')
    sub = parser.add_subparsers(dest='command')

    for name in ['solve', 'price']:
        cmd = sub.add_parser(name)
        cmd.add_argument('instance', type=str)
        _mechanism_arg(cmd)
        _mode_arg(cmd)

    cmd = sub.add_parser('audit')
    cmd.add_argument('instance', type=str)
    _mechanism_arg(cmd)
    cmd.add_argument('--grid', type=str, required=False, help='Extra comma-separated valuations, e.g. 0.25,0.75')

    cmd = sub.add_parser('experiment')
    cmd.add_argument('experiment_config', type=str)
    cmd.add_argument('-o', '--output', type=str, required=False)
    cmd.add_argument('--runs', type=int, required=False)

    cmd = sub.add_parser('oracle')
    cmd.add_argument('instance', type=str)
    _mode_arg(cmd)

    cmd = sub.add_parser('gen')
    cmd.add_argument('kind', type=str, choices=['random', 'isred', 'cpred'])
    cmd.add_argument('edges', type=str, nargs='?', help='Edge-list file for the reductions')
    cmd.add_argument('--n', type=int, default=10)
    cmd.add_argument('--h', type=int, default=3)
    cmd.add_argument('--gen-seed', type=int, required=False, dest='gen_seed')
    cmd.add_argument('-o', '--output', type=str, required=False)

    cmd = sub.add_parser('graph')
    cmd.add_argument('instance', type=str)

    for name in ['solve', 'price', 'audit', 'oracle', 'graph']:
        sub.choices[name].add_argument('-o', '--output', type=str, required=False)

    return parser


def _apply_global_options(args: Namespace):
    from sic.config.environment import set_sic_env_var

    if args.config is not None:
        set_sic_env_var('config', args.config)

    for setting, value in [('seed', args.seed), ('guard_n', args.guard_n), ('workers', args.workers)]:
        if value is not None:
            set_sic_env_var(setting, value)

    if args.debug:
        set_sic_env_var('debug', 1)

    args.workers_set = args.workers is not None


def _write_output(content: str, output: (str, None)):
    if output is None:
        print(content, end='')
        return

    from sic.utils.serialize import write_text
    write_text(output, content)


def run_cli(argv: list[str] = None, before_dispatch: Callable = None) -> int:
    from sic.config.hardcoded import EXIT_OK, EXIT_VALIDATION, EXIT_SIZE_GUARD
    from sic.utils.debug import log_error
    from sic.utils.handlers import IndexCodingError, SizeGuardError

    parser = build_parser()
    try:
        args = parser.parse_args(argv)

    except SystemExit as err:
        # --help and usage errors
        return err.code

    if args.version:
        _print_version()
        return EXIT_OK

    if args.command is None:
        parser.print_help()
        return EXIT_VALIDATION

    _apply_global_options(args)
    if before_dispatch is not None:
        before_dispatch()

    if args.command == 'gen' and args.kind != 'random' and args.edges is None:
        log_error(f"'gen {args.kind}' needs an edge-list file")
        return EXIT_VALIDATION

    try:
        content = COMMANDS[args.command](args)
        _write_output(content, args.output)
        return EXIT_OK

    except SizeGuardError as err:
        log_error(str(err))
        return EXIT_SIZE_GUARD

    except (IndexCodingError, OSError, ValueError) as err:
        log_error(str(err))
        return EXIT_VALIDATION


def main():
    # pylint: disable=E0401
    try:
        from main import main as main_entry

    except ModuleNotFoundError:
        from sys import path as sys_path
        from os import path as os_path
        sys_path.append(os_path.dirname(os_path.abspath(__file__)))
        from main import main as main_entry

    sys_exit(main_entry())


if __name__ == '__main__':
    main()
