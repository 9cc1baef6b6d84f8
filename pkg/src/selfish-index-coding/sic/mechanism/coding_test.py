from sic.graph.dependency import Cycle, DependencyGraph
from sic.mechanism.coding import alg2_cycles, sqrtn_cycles, cycle_rows, encode_along_cycles

MICRO = 1_000_000


def test_greedy_selection():
    g = DependencyGraph.from_arcs([600_000] * 4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    assert alg2_cycles(g) == [Cycle((0, 1)), Cycle((2, 3))]
    assert sqrtn_cycles(g) == [Cycle((0, 1)), Cycle((2, 3))]

    # cost 1.8 is above the admission bar
    expensive = DependencyGraph.from_arcs([100_000] * 2, [(0, 1), (1, 0)])
    assert alg2_cycles(expensive) == []
    assert sqrtn_cycles(expensive) == []


def test_cycle_rows():
    assert cycle_rows(Cycle((0, 1, 2)), [4, 5, 6]) == [frozenset((4, 5)), frozenset((5, 6))]


def test_encode_serves_break_even(make_reports):
    reports = make_reports([600_000, 600_000, MICRO, 999_999], [{1}, {0}, set(), set()])
    coding = encode_along_cycles([Cycle((0, 1))], reports, [0, 1, 2, 3])
    assert coding.uncoded == (2,)
    assert coding.matrix.to_list() == [[0, 1], [2]]
