from datetime import datetime
from decimal import Decimal, InvalidOperation, ROUND_HALF_EVEN
from fractions import Fraction

from sic.config.main import config
from sic.config.hardcoded import MICRO, MICRO_DIGITS
from sic.utils.handlers import ValuationParseError

_QUANTUM = Decimal(1).scaleb(-MICRO_DIGITS)


def datetime_w_tz() -> datetime:
    return datetime.now(config.timezone)


def parse_micro(value: (str, int, float, Decimal)) -> int:
    # exact decimal -> micro-units; floats are parsed through their repr
    if isinstance(value, bool):
        raise ValuationParseError(f"Invalid valuation: '{value}'")

    if isinstance(value, int):
        value = Decimal(value)

    try:
        dec = Decimal(str(value).strip())

    except InvalidOperation:
        raise ValuationParseError(f"Invalid valuation: '{value}'").with_traceback(None) from None

    if not dec.is_finite():
        raise ValuationParseError(f"Invalid valuation: '{value}'")

    if dec < 0:
        raise ValuationParseError(f"Valuation must not be negative: '{value}'")

    scaled = dec.scaleb(MICRO_DIGITS)
    if scaled != scaled.to_integral_value():
        raise ValuationParseError(f"Valuation has more than {MICRO_DIGITS} fractional digits: '{value}'")

    return int(scaled)


def format_micro(micro: int) -> str:
    return str(Decimal(micro).scaleb(-MICRO_DIGITS).quantize(_QUANTUM))


def format_mean(total: int, count: int, unit: int = MICRO) -> str:
    if count < 1:
        raise ValueError('Unable to build the mean of zero values')

    mean = Decimal(total) / Decimal(count * unit)
    return str(mean.quantize(_QUANTUM, rounding=ROUND_HALF_EVEN))


def round_micro(value: Fraction) -> int:
    # half-even to the nearest micro-unit
    return round(value * MICRO)
