from dataclasses import dataclass
from functools import cache

import networkx as nx

from sic.graph.dependency import MatchingGraph
from sic.utils.handlers import check_guard


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]
    weight: int

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> set[int]:
        return {v for edge in self.edges for v in edge}


def _positive_edges(graph: MatchingGraph) -> list[tuple[int, int, int]]:
    # non-positive edges never raise the weight but would cost a transmission
    return sorted((min(u, v), max(u, v), w) for u, v, w in graph.edges if w > 0)


def max_weight_matching(graph: MatchingGraph) -> Matching:
    """
    Maximum weight matching through networkx' primal-dual blossom solver (exact on integers).
    Ties are resolved inside the solver by re-weighting: w·S - U + 2^(E-1-rank) with U = 2^E and
    S = U·(|V|//2 + 2) orders matchings by weight, then fewer edges, then the smallest sorted edge list.
    """
    edges = _positive_edges(graph)
    if len(edges) == 0:
        return Matching(edges=(), weight=0)

    count_unit = 1 << len(edges)
    scale = count_unit * (len(graph.vertices) // 2 + 2)
    weights = {}
    solver_graph = nx.Graph()
    for rank, (u, v, w) in enumerate(edges):
        weights[(u, v)] = w
        solver_graph.add_edge(u, v, weight=w * scale - count_unit + (1 << (len(edges) - 1 - rank)))

    mate = nx.max_weight_matching(solver_graph, maxcardinality=False, weight='weight')
    chosen = tuple(sorted((min(u, v), max(u, v)) for u, v in mate))
    return Matching(edges=chosen, weight=sum(weights[e] for e in chosen))


def brute_force_matching(graph: MatchingGraph, limit: int = None) -> Matching:
    check_guard('guard_matching', size=len(graph.vertices), what='matching vertices', limit=limit)
    edges = _positive_edges(graph)
    vertices = sorted({v for u, w, _ in edges for v in (u, w)})
    index = {v: k for k, v in enumerate(vertices)}
    neighbours = {v: [] for v in vertices}
    for u, v, w in edges:
        neighbours[u].append((v, w))

    @cache
    def _best(mask: int) -> tuple:
        # key: (-weight, edge count, sorted edges); the lowest free vertex is matched upwards or skipped
        if mask == 0:
            return 0, 0, ()

        low = (mask & -mask).bit_length() - 1
        v = vertices[low]
        rest = mask & ~(1 << low)
        best = _best(rest)
        for u, w in neighbours[v]:
            bit = 1 << index[u]
            if rest & bit:
                sub = _best(rest & ~bit)
                key = (sub[0] - w, sub[1] + 1, ((v, u),) + sub[2])
                if key < best:
                    best = key

        return best

    weight, _, chosen = _best((1 << len(vertices)) - 1)
    return Matching(edges=chosen, weight=-weight)
