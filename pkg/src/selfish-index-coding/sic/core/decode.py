from sic.model.coding import CodingMatrix, DecodeMode
from sic.utils.handlers import DecodePreconditionError


def _check_want(side: (set, frozenset), want: int):
    if want in side:
        raise DecodePreconditionError(f"Wanted chunk d{want} is already part of the side information")


def _insert(basis: dict[int, int], vec: int):
    # xor-basis keyed by leading bit
    while vec:
        pivot = vec.bit_length() - 1
        if pivot not in basis:
            basis[pivot] = vec
            return

        vec ^= basis[pivot]


def gf2_in_span(vec: int, rows: list[int]) -> bool:
    basis = {}
    for row in rows:
        _insert(basis, row)

    while vec:
        pivot = vec.bit_length() - 1
        if pivot not in basis:
            return False

        vec ^= basis[pivot]

    return True


def can_decode_general(side: (set, frozenset), G: CodingMatrix, want: int) -> bool:
    _check_want(side, want)
    rows = [row.bits for row in G]
    rows.extend(1 << chunk for chunk in side)
    return gf2_in_span(1 << want, rows)


def can_decode_instant(side: (set, frozenset), G: CodingMatrix, want: int) -> bool:
    _check_want(side, want)
    for row in G:
        if want in row.support and row.support - {want} <= side:
            return True

    return False


def can_decode(side: (set, frozenset), G: CodingMatrix, want: int, mode: DecodeMode) -> bool:
    if mode == DecodeMode.INSTANT:
        return can_decode_instant(side, G, want)

    return can_decode_general(side, G, want)
