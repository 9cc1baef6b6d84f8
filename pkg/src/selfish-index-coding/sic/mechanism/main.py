from dataclasses import dataclass
from enum import Enum

from sic.core.decode import can_decode
from sic.core.welfare import outcome, recovered
from sic.mechanism.coding import Coding, CodingScheme, ALG1, ALG2, SQRTN
from sic.mechanism.payment import vcg_payment, alg3_payment, sqrtn_payment
from sic.model.coding import DecodeMode
from sic.model.instance import Instance, ReportProfile, Scenario, validate_instance, validate_reports
from sic.model.outcome import MechanismOutcome
from sic.oracle.enumerate import optimal_sparse_coding, optimal_coding_bruteforce
from sic.utils.debug import log
from sic.utils.handlers import InstanceValidationError, NotUnicastError, check_guard


class MechanismId(Enum):
    VCG_GENERAL = 'vcg_general'
    VCG_INSTANT = 'vcg_instant'
    ALG1_INSTANT = 'alg1_instant'
    ALG2_MAXC = 'alg2_maxc'
    SQRTN = 'sqrtn'
    ALG2_VCG = 'alg2_vcg'  # non-truthful pairing kept as witness


PRICING_VCG = 'vcg'
PRICING_ALG3 = 'alg3'
PRICING_THRESHOLD = 'threshold'


def _is_unicast(wants: (list, tuple)) -> bool:
    return len(set(wants)) == len(wants)


def _vcg_solver(mode: DecodeMode):
    def _solve(reports: ReportProfile, wants: (list, tuple)) -> Coding:
        if _is_unicast(wants):
            return optimal_sparse_coding(reports, wants, mode)

        return optimal_coding_bruteforce(reports, wants, mode)

    return _solve


VCG_GENERAL = CodingScheme(name='vcg_general', solve=_vcg_solver(DecodeMode.GENERAL), mode=DecodeMode.GENERAL,
                           optimal=True)
VCG_INSTANT = CodingScheme(name='vcg_instant', solve=_vcg_solver(DecodeMode.INSTANT), mode=DecodeMode.INSTANT,
                           optimal=True)


@dataclass(frozen=True)
class Mechanism:
    id: MechanismId
    scheme: CodingScheme
    pricing: str
    truthful: bool
    unicast_only: bool

    def price(self, reports: ReportProfile, wants: (list, tuple), i: int, coding: Coding = None) -> int:
        if self.pricing == PRICING_VCG:
            return vcg_payment(
                reports, wants, i, scheme=self.scheme, coding=coding, allow_approximate=not self.truthful,
            )

        if self.pricing == PRICING_ALG3:
            return alg3_payment(reports, wants, i, coding=coding)

        return sqrtn_payment(reports, wants, i, coding=coding)


MECHANISMS = {
    MechanismId.VCG_GENERAL: Mechanism(MechanismId.VCG_GENERAL, VCG_GENERAL, PRICING_VCG, True, False),
    MechanismId.VCG_INSTANT: Mechanism(MechanismId.VCG_INSTANT, VCG_INSTANT, PRICING_VCG, True, False),
    MechanismId.ALG1_INSTANT: Mechanism(MechanismId.ALG1_INSTANT, ALG1, PRICING_VCG, True, True),
    MechanismId.ALG2_MAXC: Mechanism(MechanismId.ALG2_MAXC, ALG2, PRICING_ALG3, True, True),
    MechanismId.SQRTN: Mechanism(MechanismId.SQRTN, SQRTN, PRICING_THRESHOLD, True, True),
    MechanismId.ALG2_VCG: Mechanism(MechanismId.ALG2_VCG, ALG2, PRICING_VCG, False, True),
}


def get_mechanism(mechanism_id: (str, MechanismId)) -> Mechanism:
    try:
        return MECHANISMS[MechanismId(mechanism_id)]

    except ValueError:
        choices = ', '.join(m.value for m in MechanismId)
        raise InstanceValidationError(
            f"Unknown mechanism '{mechanism_id}' (choices: {choices})"
        ).with_traceback(None) from None


def check_scenario(inst: Instance, reports: ReportProfile, mechanism: Mechanism, guard_n: int = None):
    scenario = Scenario.UNICAST if mechanism.unicast_only else Scenario.MULTICAST
    violations = validate_instance(inst, scenario) + validate_reports(inst, reports)
    if len(violations) > 0:
        error = NotUnicastError if mechanism.unicast_only and inst.scenario != Scenario.UNICAST \
            else InstanceValidationError
        raise error(f"Mechanism '{mechanism.id.value}' cannot run: {violations[0]}", violations=violations)

    if mechanism.id == MechanismId.VCG_GENERAL:
        check_guard('guard_n', size=inst.n, what='clients', limit=guard_n)


def run_mechanism(
        inst: Instance, reports: ReportProfile, mechanism_id: (str, MechanismId),
        mode: DecodeMode = None, guard_n: int = None,
) -> MechanismOutcome:
    mechanism = get_mechanism(mechanism_id)
    check_scenario(inst, reports, mechanism, guard_n=guard_n)
    wants = inst.wants
    coding = mechanism.scheme.solve(reports, wants)
    charged = recovered(reports.sides, wants, coding.matrix, mechanism.scheme.mode)
    payments = [
        mechanism.price(reports, wants, i, coding=coding) if ok else 0
        for i, ok in enumerate(charged)
    ]

    if mode is None:
        mode = mechanism.scheme.mode

    elif mode != mechanism.scheme.mode:
        visible = recovered(reports.sides, wants, coding.matrix, mode)
        dropped = [i for i, (p, ok) in enumerate(zip(payments, visible)) if p != 0 and not ok]
        if len(dropped) > 0:
            log(f"Clients {dropped} do not recover with {mode.value} decoding; their payments are dropped", level=3)

        payments = [p if ok else 0 for p, ok in zip(payments, visible)]

    log(f"Mechanism '{mechanism.id.value}' sends {coding.matrix.eta} transmissions", level=6)
    return outcome(inst, reports, coding.matrix, payments, mode, mechanism=mechanism.id.value)


@dataclass(frozen=True)
class ClientResult:
    recovered: bool
    reported_recovered: bool
    payment: int
    utility: int


def client_utility(
        inst: Instance, reports: ReportProfile, mechanism_id: (str, MechanismId), i: int,
) -> ClientResult:
    # one client's outcome without pricing the others
    mechanism = get_mechanism(mechanism_id)
    wants = inst.wants
    coding = mechanism.scheme.solve(reports, wants)
    mode = mechanism.scheme.mode
    reported_ok = can_decode(reports[i].side_info, coding.matrix, wants[i], mode)
    true_ok = can_decode(inst.clients[i].side_info, coding.matrix, wants[i], mode)
    payment = mechanism.price(reports, wants, i, coding=coding) if reported_ok else 0
    charged = payment if true_ok else 0
    utility = inst.clients[i].valuation - charged if true_ok else 0
    return ClientResult(recovered=true_ok, reported_recovered=reported_ok, payment=charged, utility=utility)
