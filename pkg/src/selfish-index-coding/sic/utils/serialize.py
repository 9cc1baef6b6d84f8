from json import loads as json_loads
from json import dumps as json_dumps
from json import JSONDecodeError
from pathlib import Path

from sic.config.hardcoded import JSON_INDENT
from sic.model.instance import Client, Instance, Report, ReportProfile, validate_instance, validate_reports
from sic.utils.handlers import InstanceValidationError
from sic.utils.util import parse_micro, format_micro


def _chunk_list(data: dict, key: str, pos: str) -> frozenset[int]:
    chunks = data.get(key, [])
    if not isinstance(chunks, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in chunks):
        raise InstanceValidationError(f"{pos}: '{key}' has to be a list of chunk indices")

    return frozenset(chunks)


def _entry(data: dict, pos: str) -> tuple[int, frozenset[int], int]:
    if not isinstance(data, dict):
        raise InstanceValidationError(f"{pos}: has to be an object")

    for key in ['wants', 'v']:
        if key not in data:
            raise InstanceValidationError(f"{pos}: missing '{key}'")

    wants = data['wants']
    if not isinstance(wants, int) or isinstance(wants, bool):
        raise InstanceValidationError(f"{pos}: 'wants' has to be a chunk index")

    return wants, _chunk_list(data, 'has', pos), parse_micro(data['v'])


def instance_from_dict(data: dict) -> tuple[Instance, ReportProfile]:
    if not isinstance(data, dict) or 'm' not in data or 'clients' not in data:
        raise InstanceValidationError("Instance has to be an object with 'm' and 'clients'")

    if not isinstance(data['m'], int) or not isinstance(data['clients'], list):
        raise InstanceValidationError("'m' has to be an integer and 'clients' a list")

    clients = []
    for i, raw in enumerate(data['clients']):
        wants, side, valuation = _entry(raw, f'Client {i}')
        clients.append(Client(wants=wants, side_info=side, valuation=valuation))

    inst = Instance(num_chunks=data['m'], clients=tuple(clients), provenance=data.get('provenance'))
    violations = validate_instance(inst)
    if len(violations) > 0:
        raise InstanceValidationError(f"Invalid instance: {violations[0]}", violations=violations)

    if data.get('reports') is None:
        return inst, inst.truthful_reports()

    if not isinstance(data['reports'], list):
        raise InstanceValidationError("'reports' has to be a list")

    reports = []
    for i, raw in enumerate(data['reports']):
        wants, side, valuation = _entry(raw, f'Report {i}')
        if i < inst.n and wants != inst.clients[i].wants:
            raise InstanceValidationError(f"Report {i}: wanted chunk differs from the instance")

        reports.append(Report(valuation=valuation, side_info=side))

    profile = ReportProfile(tuple(reports))
    violations = validate_reports(inst, profile)
    if len(violations) > 0:
        raise InstanceValidationError(f"Invalid reports: {violations[0]}", violations=violations)

    return inst, profile


def _entry_dict(wants: int, side: frozenset, valuation: int) -> dict:
    return {'wants': wants, 'has': sorted(side), 'v': format_micro(valuation)}


def instance_to_dict(inst: Instance, reports: ReportProfile = None) -> dict:
    data = {
        'm': inst.num_chunks,
        'clients': [_entry_dict(c.wants, c.side_info, c.valuation) for c in inst.clients],
    }
    if reports is not None:
        data['reports'] = [
            _entry_dict(c.wants, r.side_info, r.valuation) for c, r in zip(inst.clients, reports)
        ]

    return data


def load_json(path: (str, Path)) -> any:
    try:
        with open(path, 'r', encoding='utf-8') as _file:
            return json_loads(_file.read())

    except JSONDecodeError as err:
        raise InstanceValidationError(f"File is not valid JSON: {path} - {err}").with_traceback(None) from None


def load_instance(path: (str, Path)) -> tuple[Instance, ReportProfile]:
    return instance_from_dict(load_json(path))


def dump_json(data: any) -> str:
    return json_dumps(data, sort_keys=True, indent=JSON_INDENT, ensure_ascii=False) + '\n'


def write_text(path: (str, Path), content: str):
    with open(path, 'w', encoding='utf-8') as _file:
        _file.write(content)
