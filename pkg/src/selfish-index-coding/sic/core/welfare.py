from sic.config.hardcoded import MICRO
from sic.core.decode import can_decode
from sic.model.coding import CodingMatrix, DecodeMode
from sic.model.instance import Instance, ReportProfile
from sic.model.outcome import MechanismOutcome
from sic.utils.handlers import InstanceValidationError, PaymentPreconditionError


def recovered(sides: list, wants: list, G: CodingMatrix, mode: DecodeMode) -> tuple[bool, ...]:
    if len(G) == 0:
        return tuple(False for _ in wants)

    return tuple(can_decode(side, G, want, mode) for side, want in zip(sides, wants))


def welfare(values: list[int], sides: list, wants: list, G: CodingMatrix, mode: DecodeMode) -> int:
    if not len(values) == len(sides) == len(wants):
        raise InstanceValidationError('Valuations, side information and wanted chunks are not aligned')

    gained = sum(v for v, ok in zip(values, recovered(sides, wants, G, mode)) if ok)
    return gained - MICRO * G.eta


def outcome(
        inst: Instance, reports: ReportProfile, G: CodingMatrix, payments: list[int],
        mode: DecodeMode, mechanism: str = '',
) -> MechanismOutcome:
    if len(reports) != inst.n or len(payments) != inst.n:
        raise InstanceValidationError(
            f"Expected {inst.n} reports and payments, got {len(reports)} and {len(payments)}"
        )

    wants = inst.wants
    truly = recovered(inst.sides, wants, G, mode)
    reported = recovered(reports.sides, wants, G, mode)

    for i, (p, ok) in enumerate(zip(payments, reported)):
        if p != 0 and not ok:
            raise PaymentPreconditionError(f"Client {i} is charged {p} but does not recover its chunk")

    charged = tuple(p if ok else 0 for p, ok in zip(payments, truly))
    utilities = tuple((v - p) if ok else 0 for v, p, ok in zip(inst.valuations, charged, truly))

    return MechanismOutcome(
        mechanism=mechanism,
        mode=mode,
        matrix=G,
        recovered=truly,
        reported_recovered=reported,
        payments=charged,
        welfare=welfare(inst.valuations, inst.sides, wants, G, mode),
        reported_welfare=welfare(reports.valuations, reports.sides, wants, G, mode),
        utilities=utilities,
    )
