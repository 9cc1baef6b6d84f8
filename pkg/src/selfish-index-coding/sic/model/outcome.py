from dataclasses import dataclass

from sic.model.coding import CodingMatrix, DecodeMode
from sic.utils.util import format_micro


@dataclass(frozen=True)
class MechanismOutcome:
    mechanism: str
    mode: DecodeMode
    matrix: CodingMatrix
    recovered: tuple[bool, ...]  # true side information
    reported_recovered: tuple[bool, ...]
    payments: tuple[int, ...]
    welfare: int
    reported_welfare: int
    utilities: tuple[int, ...]

    @property
    def eta(self) -> int:
        return self.matrix.eta

    def to_dict(self) -> dict:
        return {
            'mechanism': self.mechanism,
            'mode': self.mode.value,
            'matrix': self.matrix.to_list(),
            'eta': self.eta,
            'recovered': list(self.recovered),
            'reported_recovered': list(self.reported_recovered),
            'payments': list(self.payments),
            'welfare': self.welfare,
            'reported_welfare': self.reported_welfare,
            'utilities': list(self.utilities),
            'welfare_decimal': format_micro(self.welfare),
        }
