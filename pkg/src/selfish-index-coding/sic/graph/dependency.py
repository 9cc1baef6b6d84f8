from dataclasses import dataclass

import networkx as nx

from sic.config.hardcoded import MICRO
from sic.model.instance import ReportProfile
from sic.utils.handlers import NegativeCostError, NotUnicastError
from sic.utils.util import format_micro


def truncate(x: int) -> int:
    return min(x, MICRO)


@dataclass(frozen=True, order=True)
class Cycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.vertices)
        if len(seq) < 2 or len(set(seq)) != len(seq):
            raise ValueError(f"Not a simple cycle: {seq}")

        start = seq.index(min(seq))
        object.__setattr__(self, 'vertices', seq[start:] + seq[:start])

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def arcs(self) -> list[tuple[int, int]]:
        seq = self.vertices
        return [(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq))]

    def __str__(self) -> str:
        return '(' + ','.join(f'c{v}' for v in self.vertices) + ')'


class DependencyGraph:
    """
    Directed graph over clients; arc (i, j) iff the chunk client i wants is reported as side-info by client j.
    Every out-arc of i carries the reported valuation of i as weight and 1 - min(weight, 1) as cost, all in micro-units.
    The wrapped networkx graph is frozen; sub-graphs are built with 'without'.
    """

    def __init__(self, graph: nx.DiGraph, weights: tuple[int, ...]):
        self.graph = nx.freeze(graph)
        self.weights = tuple(weights)

    @classmethod
    def from_arcs(cls, weights: (list, tuple), arcs) -> 'DependencyGraph':
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(weights)))
        for i, j in sorted(arcs):
            graph.add_edge(i, j, gamma=weights[i], zeta=MICRO - truncate(weights[i]))

        return cls(graph, weights)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.graph.nodes)

    @property
    def n(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return sorted(self.graph.edges)

    def has_arc(self, i: int, j: int) -> bool:
        return self.graph.has_edge(i, j)

    def successors(self, v: int) -> list[int]:
        return sorted(self.graph.successors(v))

    def gamma(self, i: int, j: int) -> int:
        return self.graph.edges[i, j]['gamma']

    def zeta(self, i: int, j: int) -> int:
        return self.graph.edges[i, j]['zeta']

    def costs(self, cost_override: dict = None) -> dict[tuple[int, int], int]:
        costs = {(i, j): data['zeta'] for i, j, data in self.graph.edges(data=True)}
        if cost_override is not None:
            for arc, cost in cost_override.items():
                if arc in costs:
                    costs[arc] = cost

        for arc, cost in costs.items():
            if cost < 0:
                raise NegativeCostError(f"Arc {arc} has the negative cost {cost}")

        return costs

    def adjacency(self, cost_override: dict = None) -> dict[int, list[tuple[int, int]]]:
        adj = {v: [] for v in self.vertices}
        for (i, j), cost in sorted(self.costs(cost_override).items()):
            adj[i].append((j, cost))

        return adj

    def without(self, vertices) -> 'DependencyGraph':
        drop = set(vertices)
        keep = [v for v in self.graph.nodes if v not in drop]
        return DependencyGraph(nx.DiGraph(self.graph.subgraph(keep)), self.weights)


def build_dependency_graph(reports: ReportProfile, wants: (list, tuple)) -> DependencyGraph:
    if len(reports) != len(wants):
        raise NotUnicastError(f"Got {len(reports)} reports for {len(wants)} clients")

    owner = {}
    for i, chunk in enumerate(wants):
        if chunk in owner:
            raise NotUnicastError(f"Clients {owner[chunk]} and {i} want the same chunk d{chunk}")

        owner[chunk] = i

    arcs = []
    for j, report in enumerate(reports):
        for chunk in report.side_info:
            i = owner.get(chunk)
            if i is not None and i != j:
                arcs.append((i, j))

    return DependencyGraph.from_arcs(reports.valuations, arcs)


def cycle_weight(cycle: Cycle, g: DependencyGraph) -> int:
    return sum(truncate(g.gamma(i, j)) for i, j in cycle.arcs) - (len(cycle) - 1) * MICRO


def cycle_cost(cycle: Cycle, g: DependencyGraph, cost_override: dict = None) -> int:
    if cost_override is None:
        return sum(g.zeta(i, j) for i, j in cycle.arcs)

    costs = g.costs(cost_override)
    return sum(costs[arc] for arc in cycle.arcs)


def to_dot(g: DependencyGraph) -> str:
    lines = ['digraph dependency {']
    for v in g.vertices:
        lines.append(f'  {v} [label="c{v}"];')

    for i, j in g.arcs:
        lines.append(f'  {i} -> {j} [label="{format_micro(g.gamma(i, j))}/{format_micro(g.zeta(i, j))}"];')

    lines.append('}')
    return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class MatchingGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (u, v, weight) with u < v

    def weight(self, u: int, v: int) -> int:
        u, v = min(u, v), max(u, v)
        for a, b, w in self.edges:
            if (a, b) == (u, v):
                return w

        raise KeyError((u, v))


def build_matching_graph(g: DependencyGraph) -> MatchingGraph:
    edges = []
    for i, j in g.arcs:
        if i < j and g.has_arc(j, i):
            edges.append((i, j, truncate(g.gamma(i, j)) + truncate(g.gamma(j, i)) - MICRO))

    return MatchingGraph(vertices=tuple(g.vertices), edges=tuple(edges))
