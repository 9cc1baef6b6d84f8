from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from pathlib import Path

import networkx as nx
from numpy.random import default_rng, SeedSequence

from sic.config.hardcoded import MICRO
from sic.model.instance import Client, Instance
from sic.utils.handlers import InstanceValidationError
from sic.utils.util import round_micro

REDUCTION_INDEPENDENT_SET = 'independent_set'
REDUCTION_CYCLE_PACKING = 'cycle_packing'


@dataclass(frozen=True)
class ReductionInstance:
    instance: Instance
    kind: str
    source_edges: tuple[tuple[int, int], ...]
    num_vertices: int
    exact_valuations: tuple[str, ...]
    expected: dict

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'num_vertices': self.num_vertices,
            'edges': [list(e) for e in self.source_edges],
            'exact_valuations': list(self.exact_valuations),
            'expected': dict(self.expected),
        }


def run_seed(base_seed: int, n: int, side_size: int, run: int) -> SeedSequence:
    return SeedSequence([base_seed, n, side_size, run])


def gen_random_instance(n: int, side_size: int, seed: (int, SeedSequence)) -> Instance:
    if n < 1:
        raise InstanceValidationError(f"Number of clients has to be positive: {n}")

    if not 0 <= side_size <= n - 1:
        raise InstanceValidationError(f"Side information size {side_size} is not within [0, {n - 1}]")

    rng = default_rng(seed)
    clients = []
    for i in range(n):
        others = [c for c in range(n) if c != i]
        side = rng.choice(others, size=side_size, replace=False) if side_size > 0 else []
        valuation = int(rng.integers(0, MICRO, endpoint=True))
        clients.append(Client(wants=i, side_info=frozenset(int(c) for c in side), valuation=valuation))

    return Instance(num_chunks=n, clients=tuple(clients))


def _relabelled(graph: nx.Graph) -> nx.Graph:
    return nx.convert_node_labels_to_integers(graph, ordering='sorted')


def read_edge_list(path: (str, Path), directed: bool = False) -> nx.Graph:
    # one 'u v' pair per line; '#' comments; vertices relabelled to 0..k-1 in sorted order
    with open(path, 'r', encoding='utf-8') as _file:
        return parse_edge_list(_file.read(), directed=directed)


def parse_edge_list(text: str, directed: bool = False) -> nx.Graph:
    lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line != '']
    try:
        graph = nx.parse_edgelist(
            lines, nodetype=int, data=False, create_using=nx.DiGraph if directed else nx.Graph,
        )

    except (TypeError, ValueError) as err:
        raise InstanceValidationError(f"Invalid edge list: {err}").with_traceback(None) from None

    if any(v < 0 for v in graph.nodes):
        raise InstanceValidationError('Edge list vertices have to be non-negative integers')

    if nx.number_of_selfloops(graph) > 0:
        raise InstanceValidationError('Edge list contains self-loops')

    return _relabelled(graph)


def gen_from_independent_set(graph: nx.Graph) -> ReductionInstance:
    """
    Multicast instance built from an undirected graph.
    Serving everyone takes |E| + minimum vertex cover transmissions; the optimal instant welfare is at least
    the independence number and equals the sum of 1/min(deg x, deg y) over the edges.
    Per edge e=(x,y) three clients: (d_e | {d_x, d_y} | 1), (d_x | {d_e} | 1/deg x), (d_y | {d_e} | 1/deg y).
    """
    graph = _relabelled(nx.Graph(graph))
    k = graph.number_of_nodes()
    edges = sorted(tuple(sorted(e)) for e in graph.edges)
    clients = []
    exact = []
    for idx, (x, y) in enumerate(edges):
        chunk_edge = k + idx
        clients.append(Client(wants=chunk_edge, side_info=frozenset((x, y)), valuation=MICRO))
        exact.append('1')
        for vertex in (x, y):
            share = Fraction(1, graph.degree[vertex])
            clients.append(Client(wants=vertex, side_info=frozenset((chunk_edge,)), valuation=round_micro(share)))
            exact.append(str(share))

    _, opt_is = nx.max_weight_clique(nx.complement(graph), weight=None) if k > 0 else ([], 0)
    inst = Instance(
        num_chunks=k + len(edges), clients=tuple(clients),
        provenance={'kind': REDUCTION_INDEPENDENT_SET, 'edges': [list(e) for e in edges]},
    )
    return ReductionInstance(
        instance=inst, kind=REDUCTION_INDEPENDENT_SET, source_edges=tuple(edges), num_vertices=k,
        exact_valuations=tuple(exact),
        expected={'opt_is': opt_is, 'opt_vc': k - opt_is, 'num_edges': len(edges)},
    )


def max_disjoint_cycles(digraph: nx.DiGraph) -> int:
    nodes = sorted(digraph.nodes)
    index = {v: k for k, v in enumerate(nodes)}
    masks = set()
    for cycle in nx.simple_cycles(digraph):
        if len(cycle) >= 2:
            masks.add(sum(1 << index[v] for v in cycle))

    masks = sorted(masks)

    @cache
    def _count(free: int) -> int:
        if free == 0:
            return 0

        low = free & -free
        best = _count(free & ~low)
        for mask in masks:
            if mask & low and mask & free == mask:
                best = max(best, 1 + _count(free & ~mask))

        return best

    return _count((1 << len(nodes)) - 1)


def gen_from_cycle_packing(digraph: nx.DiGraph) -> ReductionInstance:
    # unicast instance whose dependency graph is the input and all valuations are 1
    digraph = _relabelled(nx.DiGraph(digraph))
    k = digraph.number_of_nodes()
    clients = tuple(
        Client(wants=j, side_info=frozenset(digraph.predecessors(j)), valuation=MICRO)
        for j in range(k)
    )
    edges = tuple(sorted(digraph.edges))
    inst = Instance(
        num_chunks=k, clients=clients,
        provenance={'kind': REDUCTION_CYCLE_PACKING, 'edges': [list(e) for e in edges]},
    )
    return ReductionInstance(
        instance=inst, kind=REDUCTION_CYCLE_PACKING, source_edges=edges, num_vertices=k,
        exact_valuations=tuple('1' for _ in range(k)),
        expected={'max_disjoint_cycles': max_disjoint_cycles(digraph)},
    )
