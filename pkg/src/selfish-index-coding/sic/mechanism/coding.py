from dataclasses import dataclass, field
from typing import Callable, Optional

from sic.config.hardcoded import MICRO
from sic.graph.cycles import min_cost_cycle, max_ratio_cycle
from sic.graph.dependency import Cycle, DependencyGraph, build_dependency_graph, build_matching_graph
from sic.graph.matching import max_weight_matching
from sic.model.coding import CodingMatrix, DecodeMode
from sic.model.instance import ReportProfile
from sic.utils.debug import log


@dataclass(frozen=True)
class Coding:
    matrix: CodingMatrix
    cycles: tuple[Cycle, ...] = ()
    uncoded: tuple[int, ...] = ()  # clients served with their plain chunk


@dataclass(frozen=True)
class CodingScheme:
    name: str
    solve: Callable[[ReportProfile, tuple], Coding] = field(compare=False)
    mode: DecodeMode
    optimal: bool


def cycle_rows(cycle: Cycle, wants: (list, tuple)) -> list[frozenset[int]]:
    # |C|-1 consecutive pairs; the arc back into the canonical start is left out
    seq = cycle.vertices
    return [frozenset((wants[seq[k]], wants[seq[k + 1]])) for k in range(len(seq) - 1)]


def encode_along_cycles(cycles: list[Cycle], reports: ReportProfile, wants: (list, tuple)) -> Coding:
    supports = []
    covered = set()
    for cycle in cycles:
        supports.extend(cycle_rows(cycle, wants))
        covered.update(cycle.vertices)

    uncoded = tuple(i for i, r in enumerate(reports) if i not in covered and r.valuation >= MICRO)
    supports.extend(frozenset((wants[i],)) for i in uncoded)
    return Coding(matrix=CodingMatrix.from_supports(supports), cycles=tuple(cycles), uncoded=uncoded)


def alg1_coding(reports: ReportProfile, wants: (list, tuple)) -> Coding:
    g = build_dependency_graph(reports, wants)
    matching = max_weight_matching(build_matching_graph(g))
    log(f"Matching {matching.edges} with weight {matching.weight}", level=7)
    return encode_along_cycles([Cycle(edge) for edge in matching.edges], reports, wants)


def _greedy_cycles(g: DependencyGraph, select: Callable[[DependencyGraph], Optional[Cycle]]) -> list[Cycle]:
    selected = []
    while True:
        cycle = select(g)
        if cycle is None:
            break

        log(f"Selected cycle {cycle}", level=7)
        selected.append(cycle)
        g = g.without(cycle.vertices)

    return selected


def alg2_cycles(g: DependencyGraph, cost_override: dict = None) -> list[Cycle]:
    return _greedy_cycles(g, lambda sub: min_cost_cycle(sub, cost_override=cost_override, max_cost=MICRO))


def alg2_coding(reports: ReportProfile, wants: (list, tuple)) -> Coding:
    g = build_dependency_graph(reports, wants)
    return encode_along_cycles(alg2_cycles(g), reports, wants)


def sqrtn_cycles(g: DependencyGraph) -> list[Cycle]:
    # ratio selection restricted to admissible cycles (cost <= 1); same outcome as testing after selection
    return _greedy_cycles(g, lambda sub: max_ratio_cycle(sub, max_cost=MICRO))


def sqrtn_coding(reports: ReportProfile, wants: (list, tuple)) -> Coding:
    g = build_dependency_graph(reports, wants)
    return encode_along_cycles(sqrtn_cycles(g), reports, wants)


ALG1 = CodingScheme(name='alg1', solve=alg1_coding, mode=DecodeMode.INSTANT, optimal=True)
ALG2 = CodingScheme(name='alg2', solve=alg2_coding, mode=DecodeMode.GENERAL, optimal=False)
SQRTN = CodingScheme(name='sqrtn', solve=sqrtn_coding, mode=DecodeMode.GENERAL, optimal=False)
