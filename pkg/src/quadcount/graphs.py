"""Graph types and exact 4-cycle counting.

Conventions (frozen): undirected counts are per 4-cycle subgraph (cyclic
node sequences quotiented by rotation and reflection); directed and
layered counts quotient by rotation only; multigraph cycles weigh by the
product of edge multiplicities.  These choices make doubling an
undirected graph into a digraph exactly double its count.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

Count = int


class UndirectedGraph:
    """Simple undirected graph on nodes 0..n-1."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        norm = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        self.n = n
        self.edges = tuple(sorted(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


class DirectedGraph:
    """Simple directed graph; opposite arcs may coexist."""

    __slots__ = ("n", "arcs")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        seen = set()
        out = []
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
            out.append((u, v))
        self.n = n
        self.arcs = tuple(sorted(out))

    @property
    def m(self) -> int:
        return len(self.arcs)


class CircleLayeredMultigraph:
    """Four node layers; every edge goes from layer i to layer (i+1) mod 4.

    Edges are (layer, u, v, mult); repeated (layer, u, v) records combine
    by summing multiplicities.
    """

    __slots__ = ("layer_sizes", "edges")

    def __init__(self, layer_sizes: Sequence[int],
                 edges: Iterable[tuple[int, int, int] | tuple[int, int, int, int]]):
        sizes = tuple(int(s) for s in layer_sizes)
        if len(sizes) != 4 or any(s < 0 for s in sizes):
            raise ValueError("layer_sizes must be four non-negative integers")
        combined: dict[tuple[int, int, int], int] = {}
        for e in edges:
            if len(e) == 3:
                layer, u, v = e
                mult = 1
            else:
                layer, u, v, mult = e
            if not 0 <= layer < 4:
                raise ValueError(f"bad layer {layer}")
            if not (0 <= u < sizes[layer] and 0 <= v < sizes[(layer + 1) % 4]):
                raise ValueError(f"edge ({layer},{u},{v}) out of range")
            if mult < 1:
                raise ValueError("multiplicity must be >= 1")
            combined[(layer, u, v)] = combined.get((layer, u, v), 0) + mult
        self.layer_sizes = sizes
        self.edges = tuple((l, u, v, m) for (l, u, v), m in sorted(combined.items()))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_mult(self) -> int:
        return max((m for *_, m in self.edges), default=1)

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for *_, m in self.edges)

    def layer_adjacency(self) -> list[dict[int, list[tuple[int, int]]]]:
        """Per layer: source node -> [(target, mult)] into the next layer."""
        adj: list[dict[int, list[tuple[int, int]]]] = [{} for _ in range(4)]
        for layer, u, v, m in self.edges:
            adj[layer].setdefault(u, []).append((v, m))
        return adj


def _brute_c4_undirected(g: UndirectedGraph) -> Count:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    total = 0
    for a, b, c, d in itertools.combinations(range(g.n), 4):
        # three opposite pairings of the 4-set
        for (p, q), (r, s) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            # cycle p-r-q-s with {p,q} and {r,s} opposite
            if r in adj[p] and q in adj[r] and s in adj[q] and p in adj[s]:
                total += 1
    return total


def _brute_c4_directed(g: DirectedGraph) -> Count:
    arcs = set(g.arcs)
    total = 0
    for a, b, c, d in itertools.combinations(range(g.n), 4):
        for (p, q), (r, s) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            # rotations quotiented: fix opposite pairs, try both directions
            if (p, r) in arcs and (r, q) in arcs and (q, s) in arcs and (s, p) in arcs:
                total += 1
            if (p, s) in arcs and (s, q) in arcs and (q, r) in arcs and (r, p) in arcs:
                total += 1
    return total


def _brute_c4_layered(g: CircleLayeredMultigraph) -> Count:
    adj = g.layer_adjacency()
    total = 0
    for v0, lst0 in adj[0].items():
        for v1, m0 in lst0:
            for v2, m1 in adj[1].get(v1, []):
                for v3, m2 in adj[2].get(v2, []):
                    for v0b, m3 in adj[3].get(v3, []):
                        if v0b == v0:
                            total += m0 * m1 * m2 * m3
    return total


def brute_count_c4(g) -> Count:
    """Exhaustive 4-cycle count under the frozen conventions."""
    if isinstance(g, UndirectedGraph):
        return _brute_c4_undirected(g)
    if isinstance(g, DirectedGraph):
        return _brute_c4_directed(g)
    if isinstance(g, CircleLayeredMultigraph):
        return _brute_c4_layered(g)
    raise TypeError(f"unsupported graph type {type(g)!r}")


def count_c4_undirected(g: UndirectedGraph) -> Count:
    """Codegree 4-cycle count: process nodes in decreasing degree with
    deletion; every cycle is counted at its first-processed node paired
    with the opposite one.  O(m^1.5)-class time, exact."""
    if not isinstance(g, UndirectedGraph):
        raise ValueError("count_c4_undirected expects a simple undirected graph")
    adj = g.adjacency()
    order = sorted(range(g.n), key=lambda u: (-len(adj[u]), u))
    rank = [0] * g.n
    for i, u in enumerate(order):
        rank[u] = i
    total = 0
    tally: dict[int, int] = {}
    for u in order:
        ru = rank[u]
        tally.clear()
        for v in adj[u]:
            if rank[v] <= ru:
                continue
            for w in adj[v]:
                if w != u and rank[w] > ru:
                    tally[w] = tally.get(w, 0) + 1
        for t in tally.values():
            total += t * (t - 1) // 2
    return total


def count_c4_layered(g: CircleLayeredMultigraph) -> Count:
    """Weighted 4-cycle count by composing opposite-layer path sums:
    sum over (v0, v2) of W02(v0,v2) * W20(v2,v0)."""
    adj = g.layer_adjacency()
    w02: dict[tuple[int, int], int] = {}
    for v0, lst in adj[0].items():
        for v1, m0 in lst:
            for v2, m1 in adj[1].get(v1, []):
                key = (v0, v2)
                w02[key] = w02.get(key, 0) + m0 * m1
    if not w02:
        return 0
    w20: dict[tuple[int, int], int] = {}
    for v2, lst in adj[2].items():
        for v3, m2 in lst:
            for v0, m3 in adj[3].get(v3, []):
                key = (v2, v0)
                w20[key] = w20.get(key, 0) + m2 * m3
    total = 0
    for (v0, v2), w in w02.items():
        back = w20.get((v2, v0))
        if back:
            total += w * back
    return total
