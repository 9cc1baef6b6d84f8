import pytest
from hypothesis import given, strategies as st

from sic.core.decode import can_decode, can_decode_general, can_decode_instant, gf2_in_span
from sic.model.coding import CodingMatrix, DecodeMode
from sic.utils.handlers import DecodePreconditionError

# chunk indices are 0-based: d1 -> 0


def _g(*supports) -> CodingMatrix:
    return CodingMatrix.from_supports(supports)


def test_general_combines_rows():
    assert can_decode_general({0}, _g({0, 1}, {1, 2}), 2)
    assert can_decode_general({2}, _g({0, 1}, {1, 2}, {3}), 0)
    assert not can_decode_general(set(), _g(), 0)


def test_instant_single_row():
    assert can_decode_instant({0}, _g({0, 1}), 1)
    assert not can_decode_instant({0}, _g({0, 1}, {1, 2}), 2)
    assert can_decode_instant({3}, _g({2, 3}), 2)
    assert can_decode_instant({2}, _g({2, 3}), 3)
    assert can_decode_instant(set(), _g({4}), 4)


def test_want_in_side_is_rejected():
    for mode in DecodeMode:
        with pytest.raises(DecodePreconditionError):
            can_decode({1}, _g({0, 1}), 1, mode)


def test_span():
    assert gf2_in_span(0, [])
    assert gf2_in_span(0b101, [0b011, 0b110])
    assert not gf2_in_span(0b1000, [0b011, 0b110])


CHUNKS = 6
supports = st.frozensets(st.integers(0, CHUNKS - 1), min_size=1, max_size=3)
matrices = st.lists(supports, max_size=5)
sides = st.frozensets(st.integers(0, CHUNKS - 1), max_size=CHUNKS)


@given(matrices, supports, sides, st.integers(0, CHUNKS - 1))
def test_adding_rows_keeps_decodability(rows, extra, side, want):
    side = side - {want}
    for mode in DecodeMode:
        if can_decode(side, _g(*rows), want, mode):
            assert can_decode(side, _g(*rows, extra), want, mode)


@given(matrices, st.integers(0, CHUNKS - 1), sides, st.integers(0, CHUNKS - 1))
def test_adding_side_info_keeps_decodability(rows, chunk, side, want):
    side = side - {want}
    larger = (side | {chunk}) - {want}
    for mode in DecodeMode:
        if can_decode(side, _g(*rows), want, mode):
            assert can_decode(larger, _g(*rows), want, mode)


@given(matrices, sides, st.integers(0, CHUNKS - 1))
def test_instant_implies_general(rows, side, want):
    side = side - {want}
    if can_decode_instant(side, _g(*rows), want):
        assert can_decode_general(side, _g(*rows), want)


@given(matrices, sides, st.integers(0, CHUNKS - 1))
def test_row_order_is_irrelevant(rows, side, want):
    side = side - {want}
    assert can_decode_general(side, _g(*rows), want) == can_decode_general(side, _g(*reversed(rows)), want)
