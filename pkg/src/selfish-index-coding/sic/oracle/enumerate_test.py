import pytest

from sic.core.welfare import welfare
from sic.graph.dependency import Cycle, DependencyGraph, build_dependency_graph, cycle_weight
from sic.mechanism.coding import alg2_coding, sqrtn_coding
from sic.model.coding import DecodeMode
from sic.model.instance import Client, Instance
from sic.oracle.enumerate import (
    OBJECTIVE_TWO_CYCLES, enumerate_simple_cycles, max_simple_cycle_length, optimal_cycle_packing,
    optimal_sparse_welfare, optimal_coding_bruteforce, min_transmissions_all_satisfied,
)
from sic.utils.handlers import SizeGuardError

MICRO = 1_000_000


def _overlap_high_graph(overlap_high) -> DependencyGraph:
    inst, reports = overlap_high
    return build_dependency_graph(reports, inst.wants)


def test_enumerate(overlap_high):
    assert enumerate_simple_cycles(_overlap_high_graph(overlap_high)) == [Cycle((0, 1, 2)), Cycle((2, 3))]
    assert enumerate_simple_cycles(DependencyGraph.from_arcs([1, 1], [(0, 1)])) == []
    complete = DependencyGraph.from_arcs([1, 1, 1], [(i, j) for i in range(3) for j in range(3) if i != j])
    cycles = enumerate_simple_cycles(complete)
    assert len(cycles) == 5
    assert sum(1 for c in cycles if len(c) == 2) == 3


def test_enumerate_guard():
    g = DependencyGraph.from_arcs([1] * 11, [])
    with pytest.raises(SizeGuardError):
        enumerate_simple_cycles(g)

    assert enumerate_simple_cycles(g, limit=11) == []


def test_packing(overlap_high):
    g = _overlap_high_graph(overlap_high)
    assert optimal_cycle_packing(g) == ((Cycle((0, 1, 2)),), 200_000)
    assert optimal_cycle_packing(g, objective=OBJECTIVE_TWO_CYCLES) == ((Cycle((2, 3)),), 100_000)
    negative = DependencyGraph.from_arcs([100_000, 200_000], [(0, 1), (1, 0)])
    assert optimal_cycle_packing(negative) == ((), 0)
    with pytest.raises(ValueError):
        optimal_cycle_packing(g, objective='cliques')


def test_sparse_welfare(overlap_high, make_reports):
    inst, reports = overlap_high
    matrix, value = optimal_sparse_welfare(reports, inst.wants, DecodeMode.GENERAL)
    assert value == 200_000
    assert matrix.to_list() == [[0, 1], [1, 2]]

    uncoded = make_reports([MICRO, 1_500_000, 2 * MICRO], [set(), set(), set()])
    _, value = optimal_sparse_welfare(uncoded, [0, 1, 2], DecodeMode.GENERAL)
    assert value == 1_500_000


def test_two_disjoint_cycles_counted():
    g = DependencyGraph.from_arcs([MICRO] * 4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    assert optimal_cycle_packing(g) == ((Cycle((0, 1)), Cycle((2, 3))), 2 * MICRO)


def test_max_simple_cycle_length(overlap_high):
    assert max_simple_cycle_length(_overlap_high_graph(overlap_high)) == 3
    assert max_simple_cycle_length(DependencyGraph.from_arcs([1, 1], [])) == 0


def test_bruteforce_matches_packing_instant(random_instances):
    for inst in random_instances(60, sizes=[3, 4, 5], side_sizes=[1, 2], seed=41):
        reports = inst.truthful_reports()
        coding = optimal_coding_bruteforce(reports, inst.wants, DecodeMode.INSTANT)
        value = welfare(reports.valuations, reports.sides, inst.wants, coding.matrix, DecodeMode.INSTANT)
        _, optimum = optimal_sparse_welfare(reports, inst.wants, DecodeMode.INSTANT)
        assert value == optimum


def test_bruteforce_dominates_packing_general(random_instances):
    for inst in random_instances(40, sizes=[3, 4], side_sizes=[1, 2], seed=42):
        reports = inst.truthful_reports()
        coding = optimal_coding_bruteforce(reports, inst.wants, DecodeMode.GENERAL)
        value = welfare(reports.valuations, reports.sides, inst.wants, coding.matrix, DecodeMode.GENERAL)
        _, packed = optimal_sparse_welfare(reports, inst.wants, DecodeMode.GENERAL)
        assert value >= packed
        assert coding.matrix.sparse


def test_bruteforce_multicast():
    inst = Instance(num_chunks=2, clients=(
        Client(0, {1}, 700_000), Client(0, set(), 600_000), Client(1, {0}, 800_000),
    ))
    reports = inst.truthful_reports()
    coding = optimal_coding_bruteforce(reports, inst.wants, DecodeMode.INSTANT)
    # d0 alone: 0.7 + 0.6 - 1; d0+d1: 0.7 + 0.8 - 1; both: 2.1 - 2
    assert coding.matrix.to_list() == [[0, 1]]
    value = welfare(reports.valuations, reports.sides, inst.wants, coding.matrix, DecodeMode.INSTANT)
    assert value == 500_000


def test_min_transmissions(make_instance):
    everyone = make_instance([MICRO] * 3, [{1, 2}, {0, 2}, {0, 1}])
    assert min_transmissions_all_satisfied(everyone, DecodeMode.GENERAL) == 2
    assert min_transmissions_all_satisfied(everyone, DecodeMode.INSTANT) == 2
    nothing = make_instance([MICRO] * 3, [set(), set(), set()])
    assert min_transmissions_all_satisfied(nothing, DecodeMode.INSTANT) == 3
    cycle = make_instance([MICRO] * 3, [{2}, {0}, {1}])
    assert min_transmissions_all_satisfied(cycle, DecodeMode.GENERAL) == 2


def _packed_weight(coding, g: DependencyGraph) -> int:
    return sum(cycle_weight(c, g) for c in coding.cycles)


def test_scheme_packing_below_optimum(random_instances):
    for inst in random_instances(100, sizes=[3, 5, 7, 9], side_sizes=[1, 2, 3], seed=43):
        reports = inst.truthful_reports()
        g = build_dependency_graph(reports, inst.wants)
        _, optimum = optimal_cycle_packing(g)
        for solve in [alg2_coding, sqrtn_coding]:
            assert 0 <= _packed_weight(solve(reports, inst.wants), g) <= optimum


def test_approximation_ratios(random_instances):
    for inst in random_instances(500, sizes=[3, 5, 7, 9], side_sizes=[1, 2, 3, 4], seed=44):
        reports = inst.truthful_reports()
        g = build_dependency_graph(reports, inst.wants)
        _, optimum = optimal_sparse_welfare(reports, inst.wants, DecodeMode.GENERAL)
        greedy, ratio = [
            welfare(reports.valuations, reports.sides, inst.wants, coding.matrix, DecodeMode.GENERAL)
            for coding in [alg2_coding(reports, inst.wants), sqrtn_coding(reports, inst.wants)]
        ]
        assert optimum <= max(max_simple_cycle_length(g), 1) * greedy
        # optimum <= sqrt(n) * ratio, squared to stay exact
        assert optimum * optimum <= inst.n * ratio * ratio
