from fractions import Fraction

import pytest

from sic.utils.handlers import ValuationParseError
from sic.utils.util import parse_micro, format_micro, format_mean, round_micro


def test_parse_micro():
    assert parse_micro('0.2') == 200_000
    assert parse_micro('1') == 1_000_000
    assert parse_micro('0.000001') == 1
    assert parse_micro('1.300000') == 1_300_000
    assert parse_micro(2) == 2_000_000
    assert parse_micro(0.55) == 550_000
    assert parse_micro(' 0.6 ') == 600_000


@pytest.mark.parametrize('value', ['0.0000001', '-0.1', 'abc', 'nan', 'inf', '', True])
def test_parse_micro_invalid(value):
    with pytest.raises(ValuationParseError):
        parse_micro(value)


def test_format_micro():
    assert format_micro(100_000) == '0.100000'
    assert format_micro(-800_000) == '-0.800000'
    assert format_micro(0) == '0.000000'
    assert format_micro(1_400_001) == '1.400001'


def test_format_mean():
    assert format_mean(3_000_000, 2) == '1.500000'
    assert format_mean(1, 2) == '0.000000'  # half-even
    assert format_mean(3, 2) == '0.000002'
    assert format_mean(7, 2, unit=1) == '3.500000'
    with pytest.raises(ValueError):
        format_mean(1, 0)


def test_round_micro():
    assert round_micro(Fraction(1, 2)) == 500_000
    assert round_micro(Fraction(1, 3)) == 333_333
    assert round_micro(Fraction(2, 3)) == 666_667
    assert round_micro(Fraction(1, 6)) == 166_667
