from dataclasses import dataclass, field
from enum import Enum


class Scenario(Enum):
    UNICAST = 'unicast'
    MULTICAST = 'multicast'


@dataclass(frozen=True)
class Client:
    wants: int
    side_info: frozenset[int]
    valuation: int  # micro

    def __post_init__(self):
        object.__setattr__(self, 'side_info', frozenset(self.side_info))


@dataclass(frozen=True)
class Report:
    valuation: int  # micro
    side_info: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, 'side_info', frozenset(self.side_info))


@dataclass(frozen=True)
class ReportProfile:
    reports: tuple[Report, ...]

    def __post_init__(self):
        object.__setattr__(self, 'reports', tuple(self.reports))

    def __len__(self) -> int:
        return len(self.reports)

    def __getitem__(self, i: int) -> Report:
        return self.reports[i]

    def __iter__(self):
        return iter(self.reports)

    @property
    def valuations(self) -> tuple[int, ...]:
        return tuple(r.valuation for r in self.reports)

    @property
    def sides(self) -> tuple[frozenset[int], ...]:
        return tuple(r.side_info for r in self.reports)

    def replace(self, i: int, valuation: int = None, side_info: (set, frozenset) = None) -> 'ReportProfile':
        current = self.reports[i]
        report = Report(
            valuation=current.valuation if valuation is None else valuation,
            side_info=current.side_info if side_info is None else side_info,
        )
        return ReportProfile(self.reports[:i] + (report,) + self.reports[i + 1:])


@dataclass(frozen=True)
class Instance:
    num_chunks: int
    clients: tuple[Client, ...]
    provenance: dict = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, 'clients', tuple(self.clients))

    @property
    def n(self) -> int:
        return len(self.clients)

    @property
    def wants(self) -> tuple[int, ...]:
        return tuple(c.wants for c in self.clients)

    @property
    def sides(self) -> tuple[frozenset[int], ...]:
        return tuple(c.side_info for c in self.clients)

    @property
    def valuations(self) -> tuple[int, ...]:
        return tuple(c.valuation for c in self.clients)

    @property
    def scenario(self) -> Scenario:
        if self.n == self.num_chunks and len(set(self.wants)) == self.n:
            return Scenario.UNICAST

        return Scenario.MULTICAST

    def truthful_reports(self) -> ReportProfile:
        return ReportProfile(tuple(Report(c.valuation, c.side_info) for c in self.clients))


def validate_instance(inst: Instance, mode: (Scenario, str) = Scenario.MULTICAST) -> list[str]:
    mode = Scenario(mode)
    violations = []
    m = inst.num_chunks
    if not isinstance(m, int) or m < 0:
        return [f"Number of chunks is invalid: {m}"]

    for i, client in enumerate(inst.clients):
        if not 0 <= client.wants < m:
            violations.append(f"Client {i}: wanted chunk {client.wants} is out of range [0, {m})")

        if client.wants in client.side_info:
            violations.append(f"Client {i}: wanted chunk {client.wants} is part of its side information")

        outside = sorted(c for c in client.side_info if not 0 <= c < m)
        if len(outside) > 0:
            violations.append(f"Client {i}: side information {outside} is out of range [0, {m})")

        if client.valuation < 0:
            violations.append(f"Client {i}: valuation is negative")

    if mode == Scenario.UNICAST:
        seen = {}
        for i, client in enumerate(inst.clients):
            if client.wants in seen:
                violations.append(
                    f"Clients {seen[client.wants]} and {i} want the same chunk {client.wants} (unicast)"
                )

            else:
                seen[client.wants] = i

        if inst.n != m:
            violations.append(f"Unicast requires as many clients as chunks: {inst.n} != {m}")

    return violations


def validate_reports(
        inst: Instance, reports: ReportProfile, require_subset: bool = False,
) -> list[str]:
    if len(reports) != inst.n:
        return [f"Expected {inst.n} reports but got {len(reports)}"]

    violations = []
    for i, (client, report) in enumerate(zip(inst.clients, reports)):
        if report.valuation < 0:
            violations.append(f"Report {i}: valuation is negative")

        if client.wants in report.side_info:
            violations.append(f"Report {i}: wanted chunk {client.wants} is part of the reported side information")

        outside = sorted(c for c in report.side_info if not 0 <= c < inst.num_chunks)
        if len(outside) > 0:
            violations.append(f"Report {i}: side information {outside} is out of range")

        if require_subset and not report.side_info <= client.side_info:
            violations.append(
                f"Report {i}: reported side information {sorted(report.side_info - client.side_info)} "
                f"is not held by the client"
            )

    return violations
