from dataclasses import dataclass, field
from hashlib import sha256
from itertools import combinations
from json import dumps as json_dumps

from sic.config.hardcoded import MICRO
from sic.mechanism.main import MechanismId, PRICING_VCG, get_mechanism, check_scenario, client_utility
from sic.mechanism.payment import threshold_of
from sic.model.instance import Instance, validate_reports
from sic.utils.debug import log
from sic.utils.handlers import InstanceValidationError, check_guard
from sic.utils.serialize import instance_to_dict

CONDITION_STEP = 1
CONDITION_PAYMENT = 2
CONDITION_SIDE_INFO = 3
CONDITION_HIDDEN = 4


@dataclass(frozen=True)
class Violation:
    client: int
    valuation: int
    side_info: tuple[int, ...]
    gain: int


@dataclass(frozen=True)
class ConditionFailure:
    condition: int
    client: int
    detail: str


@dataclass
class AuditReport:
    digest: str
    mechanism: str
    deviations_tested: int = 0
    violations: list[Violation] = field(default_factory=list)
    failures: list[ConditionFailure] = field(default_factory=list)
    thresholds: list[int] = field(default_factory=list)

    @property
    def truthful(self) -> bool:
        return len(self.violations) == 0 and len(self.failures) == 0

    def to_dict(self) -> dict:
        return {
            'digest': self.digest,
            'mechanism': self.mechanism,
            'deviations_tested': self.deviations_tested,
            'violations': [
                {'client': v.client, 'valuation': v.valuation, 'side_info': list(v.side_info), 'gain': v.gain}
                for v in self.violations
            ],
            'failures': [
                {'condition': f.condition, 'client': f.client, 'detail': f.detail}
                for f in self.failures
            ],
            'thresholds': list(self.thresholds),
            'truthful': self.truthful,
        }


def instance_digest(inst: Instance) -> str:
    canonical = json_dumps(instance_to_dict(inst), sort_keys=True, separators=(',', ':'))
    return sha256(canonical.encode('utf-8')).hexdigest()


def _subsets(side: frozenset) -> list[frozenset]:
    items = sorted(side)
    return [frozenset(c) for size in range(len(items) + 1) for c in combinations(items, size)]


def _payment_matches(payment: int, threshold: int) -> bool:
    # the boundary micro is decided by tie-breaks
    return threshold - 1 <= payment <= threshold


def truthfulness_audit(
        inst: Instance, mechanism_id: (str, MechanismId), valuation_grid: (list, tuple) = (),
        limit: int = None,
) -> AuditReport:
    """
    Deviation scan over (valuation in grid, reported side-info subset) per client, others truthful.
    The grid always holds 0, 1, every true valuation and each client's thresholds ±1 micro.
    Conditions: step-shaped recovery (1), payment equal to the threshold (2),
    threshold not increased by hiding side-info (3) and no recovery hidden from the reports (4).
    """
    check_guard('guard_audit', size=inst.n, what='clients', limit=limit)
    mechanism = get_mechanism(mechanism_id)
    truth = inst.truthful_reports()
    check_scenario(inst, truth, mechanism, guard_n=max(inst.n, 1))
    wants = inst.wants
    report = AuditReport(digest=instance_digest(inst), mechanism=mechanism.id.value)

    base_grid = {0, MICRO}
    base_grid.update(inst.valuations)
    base_grid.update(v for v in valuation_grid if v >= 0)

    for i, client in enumerate(inst.clients):
        honest = client_utility(inst, truth, mechanism.id, i).utility
        subsets = _subsets(client.side_info)
        thresholds = {}
        for side in subsets:
            thresholds[side] = threshold_of(mechanism.scheme, truth.replace(i, side_info=side), wants, i)

        full = thresholds[client.side_info]
        report.thresholds.append(full)
        grid = set(base_grid)
        for t in thresholds.values():
            grid.update(x for x in (t - 1, t, t + 1) if x >= 0)

        grid = sorted(grid)

        for side in subsets:
            deviated = truth.replace(i, side_info=side)
            if len(validate_reports(inst, deviated, require_subset=True)) > 0:
                raise InstanceValidationError(f"Audit built an invalid deviation for client {i}")

            threshold = thresholds[side]
            if full - 1 > threshold:
                report.failures.append(ConditionFailure(
                    CONDITION_SIDE_INFO, i,
                    f"threshold {full} with full side-info exceeds {threshold} with {sorted(side)}",
                ))

            recovered_before = False
            for bid in grid:
                bidding = deviated.replace(i, valuation=bid)
                result = client_utility(inst, bidding, mechanism.id, i)
                report.deviations_tested += 1

                if recovered_before and not result.reported_recovered:
                    report.failures.append(ConditionFailure(
                        CONDITION_STEP, i, f"recovery lost when raising the bid to {bid} with {sorted(side)}",
                    ))

                elif result.reported_recovered != (bid >= threshold):
                    report.failures.append(ConditionFailure(
                        CONDITION_STEP, i, f"recovery at bid {bid} disagrees with threshold {threshold}",
                    ))

                recovered_before = recovered_before or result.reported_recovered

                if result.reported_recovered and not _payment_matches(result.payment, threshold):
                    report.failures.append(ConditionFailure(
                        CONDITION_PAYMENT, i, f"payment at bid {bid} differs from threshold {threshold}",
                    ))

                if result.recovered and not result.reported_recovered:
                    if mechanism.pricing != PRICING_VCG or full > 1:
                        report.failures.append(ConditionFailure(
                            CONDITION_HIDDEN, i, f"recovers at bid {bid} while reporting {sorted(side)}",
                        ))

                gain = result.utility - honest
                if gain > 0:
                    report.violations.append(Violation(
                        client=i, valuation=bid, side_info=tuple(sorted(side)), gain=gain,
                    ))

    log(
        f"Audit of '{mechanism.id.value}': {report.deviations_tested} deviations, "
        f"{len(report.violations)} violations, {len(report.failures)} condition failures",
        level=5,
    )
    return report

