from functools import cache
from itertools import combinations

import networkx as nx

from sic.config.hardcoded import MICRO
from sic.core.decode import can_decode, can_decode_instant, gf2_in_span
from sic.core.welfare import welfare
from sic.graph.dependency import Cycle, DependencyGraph, build_dependency_graph, cycle_weight
from sic.mechanism.coding import Coding, encode_along_cycles
from sic.model.coding import CodingMatrix, CodingVector, DecodeMode
from sic.model.instance import Instance, ReportProfile
from sic.utils.debug import log
from sic.utils.handlers import check_guard

OBJECTIVE_WEIGHT = 'weight'
OBJECTIVE_TWO_CYCLES = 'two_cycles_only'


def enumerate_simple_cycles(g: DependencyGraph, limit: int = None) -> list[Cycle]:
    check_guard('guard_cycles', size=g.n, what='clients', limit=limit)
    return sorted({Cycle(tuple(c)) for c in nx.simple_cycles(g.graph) if len(c) >= 2})


def two_cycles(g: DependencyGraph) -> list[Cycle]:
    return [Cycle((i, j)) for i, j in g.arcs if i < j and g.has_arc(j, i)]


def max_simple_cycle_length(g: DependencyGraph, limit: int = None) -> int:
    return max((len(c) for c in enumerate_simple_cycles(g, limit=limit)), default=0)


def optimal_cycle_packing(
        g: DependencyGraph, objective: str = OBJECTIVE_WEIGHT, limit: int = None,
) -> tuple[tuple[Cycle, ...], int]:
    """
    Exhaustive maximum weight packing of vertex-disjoint cycles.
    Ties: fewer transmissions, then the smallest sorted list of canonical cycles.
    """
    if objective == OBJECTIVE_TWO_CYCLES:
        check_guard('guard_cycles', size=g.n, what='clients', limit=limit)
        candidates = two_cycles(g)

    elif objective == OBJECTIVE_WEIGHT:
        candidates = enumerate_simple_cycles(g, limit=limit)

    else:
        raise ValueError(f"Unknown packing objective: '{objective}'")

    vertices = g.vertices
    index = {v: k for k, v in enumerate(vertices)}
    by_start = {v: [] for v in vertices}
    for cycle in candidates:
        weight = cycle_weight(cycle, g)
        if weight > 0:
            mask = 0
            for v in cycle:
                mask |= 1 << index[v]

            by_start[cycle.vertices[0]].append((cycle, mask, weight))

    @cache
    def _best(mask: int) -> tuple:
        # key: (-weight, transmissions, cycles); the lowest free vertex is covered by a cycle or skipped
        if mask == 0:
            return 0, 0, ()

        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        best = _best(rest)
        for cycle, cycle_mask, weight in by_start[vertices[low]]:
            if cycle_mask & mask == cycle_mask:
                sub = _best(mask & ~cycle_mask)
                key = (sub[0] - weight, sub[1] + len(cycle) - 1, (cycle,) + sub[2])
                if key < best:
                    best = key

        return best

    neg_weight, _, packing = _best((1 << len(vertices)) - 1)
    return packing, -neg_weight


def optimal_sparse_coding(
        reports: ReportProfile, wants: (list, tuple), mode: DecodeMode, limit: int = None,
) -> Coding:
    g = build_dependency_graph(reports, wants)
    objective = OBJECTIVE_TWO_CYCLES if mode == DecodeMode.INSTANT else OBJECTIVE_WEIGHT
    packing, _ = optimal_cycle_packing(g, objective=objective, limit=limit)
    return encode_along_cycles(list(packing), reports, wants)


def optimal_sparse_welfare(
        reports: ReportProfile, wants: (list, tuple), mode: DecodeMode, limit: int = None,
) -> tuple[CodingMatrix, int]:
    coding = optimal_sparse_coding(reports, wants, mode, limit=limit)
    return coding.matrix, welfare(reports.valuations, reports.sides, wants, coding.matrix, mode)


def _instant_rows(sides: (list, tuple), wants: (list, tuple)) -> list[frozenset[int]]:
    # rows at least one client can use on its own
    rows = set()
    for side, want in zip(sides, wants):
        rows.add(frozenset((want,)))
        rows.update(frozenset((want, h)) for h in side)

    return sorted(rows, key=lambda r: sorted(r))


def _general_rows(sides: (list, tuple), wants: (list, tuple)) -> list[frozenset[int]]:
    chunks = sorted(set(wants).union(*sides))
    rows = [frozenset((c,)) for c in chunks]
    rows.extend(frozenset(pair) for pair in combinations(chunks, 2))
    return sorted(rows, key=lambda r: sorted(r))


def _to_matrix(rows) -> CodingMatrix:
    return CodingMatrix(tuple(sorted((CodingVector(r) for r in rows), key=lambda v: v.key)))


def _bruteforce_instant(values: tuple, sides: tuple, wants: tuple, limit: (int, None)) -> tuple:
    rows = _instant_rows(sides, wants)
    check_guard('guard_rows', size=len(rows), what='candidate rows', limit=limit)
    n = len(wants)
    covers = [
        frozenset(c for c in range(n) if can_decode_instant(sides[c], CodingMatrix((CodingVector(r),)), wants[c]))
        for r in rows
    ]
    client_rows = [[k for k, cover in enumerate(covers) if c in cover] for c in range(n)]
    best = [0, ()]

    def _search(k: int, chosen: tuple, covered: frozenset, excluded: frozenset):
        current = sum(values[c] for c in covered) - MICRO * len(chosen)
        if current > best[0]:
            best[0], best[1] = current, chosen

        while k < n and (k in covered or values[k] == 0):
            k += 1

        if k == n:
            return

        rest = [c for c in range(k, n) if c not in covered and values[c] > 0]
        rest_set = set(rest)
        bound = current
        for c in rest:
            # a new row shared by at most 'share' open clients costs each of them >= 1/share
            share = max((len(covers[r] & rest_set) for r in client_rows[c] if r not in excluded), default=0)
            if share > 0:
                bound += max(0, values[c] - MICRO // share)

        if bound <= best[0]:
            return

        options = [r for r in client_rows[k] if r not in excluded]
        for idx, r in enumerate(options):
            _search(k + 1, chosen + (r,), covered | covers[r], excluded | frozenset(options[:idx]))

        _search(k + 1, chosen, covered, excluded | frozenset(options))

    _search(0, (), frozenset(), frozenset())
    return best[0], [rows[k] for k in best[1]]


def _bruteforce_general(values: tuple, sides: tuple, wants: tuple, limit: (int, None)) -> tuple:
    rows = _general_rows(sides, wants)
    check_guard('guard_rows', size=len(rows), what='candidate rows', limit=limit)
    bits = [sum(1 << c for c in r) for r in rows]
    side_bits = [[1 << c for c in side] for side in sides]
    best = [0, ()]

    def _value(chosen_bits: list[int]) -> int:
        return sum(
            v for v, want, side in zip(values, wants, side_bits)
            if v > 0 and gf2_in_span(1 << want, chosen_bits + side)
        )

    def _search(j: int, chosen: tuple):
        chosen_bits = [bits[k] for k in chosen]
        current = _value(chosen_bits) - MICRO * len(chosen)
        if current > best[0]:
            best[0], best[1] = current, chosen

        if j == len(rows):
            return

        if _value(chosen_bits + bits[j:]) - MICRO * len(chosen) <= best[0]:
            return

        for k in range(j, len(rows)):
            # dependent rows never pay off
            if not gf2_in_span(bits[k], chosen_bits):
                _search(k + 1, chosen + (k,))

    _search(0, ())
    return best[0], [rows[k] for k in best[1]]


def _serve_break_even(values: tuple, sides: tuple, wants: tuple, rows: list, mode: DecodeMode) -> list:
    # same tie rule as the cycle encoder: an uncoded row whose open bidders pay exactly its price is sent
    rows = list(rows)
    for chunk in sorted(set(wants)):
        matrix = _to_matrix(rows)
        open_value = sum(
            v for v, side, want in zip(values, sides, wants)
            if want == chunk and v > 0 and not can_decode(side, matrix, want, mode)
        )
        if open_value >= MICRO:
            rows.append(frozenset((chunk,)))

    return rows


def optimal_coding_bruteforce(
        reports: ReportProfile, wants: (list, tuple), mode: DecodeMode, limit: int = None,
) -> Coding:
    """Maximum reported welfare over sparse matrices, also for clients sharing a wanted chunk."""
    values, sides, wants = reports.valuations, reports.sides, tuple(wants)
    if mode == DecodeMode.INSTANT:
        value, rows = _bruteforce_instant(values, sides, wants, limit)

    else:
        value, rows = _bruteforce_general(values, sides, wants, limit)

    rows = _serve_break_even(values, sides, wants, rows, mode)

    log(f"Row-subset optimum ({mode.value}): {value} with {len(rows)} rows", level=7)
    return Coding(matrix=_to_matrix(rows))


def min_transmissions_all_satisfied(inst: Instance, mode: DecodeMode, limit: int = None) -> int:
    sides, wants = inst.sides, inst.wants
    n = inst.n
    if n == 0:
        return 0

    upper = len(set(wants))  # every wanted chunk uncoded

    if mode == DecodeMode.GENERAL:
        rows = _general_rows(sides, wants)
        check_guard('guard_rows', size=len(rows), what='candidate rows', limit=limit)
        bits = [sum(1 << c for c in r) for r in rows]
        side_bits = [[1 << c for c in side] for side in sides]
        for size in range(1, upper):
            for combo in combinations(bits, size):
                chosen = list(combo)
                if all(gf2_in_span(1 << w, chosen + s) for w, s in zip(wants, side_bits)):
                    return size

        return upper

    rows = _instant_rows(sides, wants)
    check_guard('guard_rows', size=len(rows), what='candidate rows', limit=limit)
    covers = [
        frozenset(c for c in range(n) if can_decode_instant(sides[c], CodingMatrix((CodingVector(r),)), wants[c]))
        for r in rows
    ]
    client_rows = [[k for k, cover in enumerate(covers) if c in cover] for c in range(n)]
    widest = max(len(cover) for cover in covers)
    best = [upper]

    def _cover(covered: frozenset, count: int):
        open_clients = [c for c in range(n) if c not in covered]
        if len(open_clients) == 0:
            best[0] = min(best[0], count)
            return

        if count + -(-len(open_clients) // widest) >= best[0]:
            return

        pick = min(open_clients, key=lambda c: (len(client_rows[c]), c))
        for r in client_rows[pick]:
            _cover(covered | covers[r], count + 1)

    _cover(frozenset(), 0)
    return best[0]
