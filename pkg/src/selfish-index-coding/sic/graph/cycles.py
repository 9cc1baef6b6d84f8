from heapq import heappush, heappop

from sic.config.hardcoded import MICRO
from sic.graph.dependency import DependencyGraph, Cycle

# cycle keys everywhere: (cost, length, vertex sequence)


def _closed_walk(adj: dict, start: int, allowed, max_cost: (int, None)) -> (tuple, None):
    # dijkstra on (cost, hops, path); nonnegative costs keep the optimum simple
    heap = [(0, 0, (start,))]
    settled = set()
    best = None

    while heap:
        cost, hops, seq = heappop(heap)
        u = seq[-1]
        if u in settled:
            continue

        if best is not None and (cost, hops + 1) > best[:2]:
            break

        settled.add(u)
        for w, c in adj[u]:
            total = cost + c
            if max_cost is not None and total > max_cost:
                continue

            if w == start:
                key = (total, hops + 1, seq)
                if best is None or key < best:
                    best = key

            elif allowed(w) and w not in settled:
                heappush(heap, (total, hops + 1, seq + (w,)))

    return best


def _as_cycle(key: (tuple, None)) -> (Cycle, None):
    if key is None:
        return None

    return Cycle(key[2])


def min_cost_cycle(g: DependencyGraph, cost_override: dict = None, max_cost: int = None) -> (Cycle, None):
    adj = g.adjacency(cost_override)
    best = None
    for s in g.vertices:
        key = _closed_walk(adj, start=s, allowed=lambda w, _s=s: w > _s, max_cost=max_cost)
        if key is not None and (best is None or key < best):
            best = key

    return _as_cycle(best)


def min_cost_cycle_through(
        g: DependencyGraph, vertex: int, cost_override: dict = None, max_cost: int = None,
) -> (Cycle, None):
    # ties broken on the sequence rotated to start at the vertex
    if vertex not in g.graph:
        return None

    adj = g.adjacency(cost_override)
    return _as_cycle(_closed_walk(adj, start=vertex, allowed=lambda w: w != vertex, max_cost=max_cost))


def _closed_walks_by_length(adj: dict, vertices: list[int], max_len: int, max_cost: (int, None)) -> dict:
    # layered bellman-ford per canonical start; exact-length values may be dominated,
    # the running minimum over lengths is exact
    by_len = {}
    for s in vertices:
        layer = {s: (0, (s,))}
        seen_cost = {s: 0}
        for hops in range(1, max_len + 1):
            nxt = {}
            for u, (cost, seq) in layer.items():
                for w, c in adj[u]:
                    total = cost + c
                    if max_cost is not None and total > max_cost:
                        continue

                    if w == s:
                        key = (total, seq)
                        if hops not in by_len or key < by_len[hops]:
                            by_len[hops] = key

                    elif w > s:
                        entry = (total, seq + (w,))
                        if w not in nxt or entry < nxt[w]:
                            nxt[w] = entry

            layer = {w: entry for w, entry in nxt.items() if w not in seen_cost or entry[0] < seen_cost[w]}
            if len(layer) == 0:
                break

            for w, entry in layer.items():
                seen_cost[w] = entry[0]

    return by_len


def _best_up_to(g: DependencyGraph, max_len: int, cost_override: dict, max_cost: (int, None)) -> list:
    # index k: best (cost, length, sequence) over cycles with length <= k
    adj = g.adjacency(cost_override)
    by_len = _closed_walks_by_length(adj, g.vertices, max_len=max_len, max_cost=max_cost)
    best = [None] * (max_len + 1)
    current = None
    for k in range(2, max_len + 1):
        if k in by_len:
            cost, seq = by_len[k]
            key = (cost, k, seq)
            if current is None or key < current:
                current = key

        best[k] = current

    return best


def bounded_min_cost_cycle(
        g: DependencyGraph, max_len: int, cost_override: dict = None, max_cost: int = None,
) -> (Cycle, None):
    if max_len < 2:
        return None

    max_len = min(max_len, g.n)
    if max_len < 2:
        return None

    return _as_cycle(_best_up_to(g, max_len, cost_override, max_cost)[max_len])


def ratio_greater(gamma1: int, len1: int, gamma2: int, len2: int) -> bool:
    # gamma1/sqrt(len1) > gamma2/sqrt(len2) without leaving the integers
    if gamma1 >= 0 > gamma2:
        return True

    if gamma1 < 0 <= gamma2:
        return False

    left = gamma1 * gamma1 * len2
    right = gamma2 * gamma2 * len1
    if gamma1 >= 0:
        return left > right

    return left < right


def max_ratio_cycle(
        g: DependencyGraph, max_len: int = None, max_cost: int = None, cost_override: dict = None,
) -> (Cycle, None):
    limit = g.n if max_len is None else min(max_len, g.n)
    if limit < 2:
        return None

    kept = None
    for key in _best_up_to(g, limit, cost_override, max_cost)[2:]:
        if key is None:
            continue

        cost, length, _ = key
        if kept is None or ratio_greater(MICRO - cost, length, MICRO - kept[0], kept[1]):
            kept = key

    return _as_cycle(kept)
