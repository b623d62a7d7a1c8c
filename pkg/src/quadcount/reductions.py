"""Instance transformations connecting pattern counting and 4-cycle
counting in both directions.

Graph chain: undirected -> directed -> circle-layered -> undirected, each
step with an exact correction.  Pattern side: a divided 4-partite instance
becomes a circle-layered multigraph whose weighted 4-cycle count equals
the 4-partite occurrence count; conversely a simple circle-layered graph
embeds into 16 signed point sets whose signed pattern counts recover the
cycle count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from ._tables import HALF_CONDITIONS_1324, REGION_EDGE
from .graphs import (
    CircleLayeredMultigraph,
    Count,
    DirectedGraph,
    UndirectedGraph,
)
from .perm import PlaneDivision, PointSet


def undirected_to_directed(g: UndirectedGraph) -> DirectedGraph:
    """Replace every edge by two opposite arcs; 4-cycle count doubles."""
    arcs = []
    for u, v in g.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return DirectedGraph(g.n, arcs)


def directed_to_layered(g: DirectedGraph) -> tuple[CircleLayeredMultigraph, Count]:
    """Copy nodes into four layers, arcs between consecutive copies.

    Returns the layered graph and the correction term counting the
    non-simple closed walks that become layered 4-cycles; the consumer
    computes (layered_count - correction) / 4.
    """
    edges = []
    for u, v in g.arcs:
        for layer in range(4):
            edges.append((layer, u, v, 1))
    layered = CircleLayeredMultigraph((g.n, g.n, g.n, g.n), edges)
    arcset = set(g.arcs)
    bidir = [0] * g.n
    for u, v in g.arcs:
        if u < v and (v, u) in arcset:
            bidir[u] += 1
            bidir[v] += 1
    correction = sum(4 * (b * (b - 1) // 2) + b for b in bidir)
    return layered, correction


@dataclass(frozen=True)
class LayeredToUndirected:
    """Undirected union of a simple layered graph plus the eight induced
    subgraphs whose counts correct for cycles not spanning all layers."""

    graph: UndirectedGraph
    two_layer: tuple[UndirectedGraph, ...]    # G restricted to V_i u V_{i+1}
    three_layer: tuple[UndirectedGraph, ...]  # G restricted to V_i..V_{i+2}

    def layered_count(self, count_fn: Callable[[UndirectedGraph], Count]) -> Count:
        total = count_fn(self.graph)
        for two, three in zip(self.two_layer, self.three_layer):
            total += count_fn(two) - count_fn(three)
        return total


def layered_to_undirected(g: CircleLayeredMultigraph) -> LayeredToUndirected:
    """Forget directions and layers; cycles inside two or three layers are
    corrected via induced-subgraph counts."""
    if not g.is_simple:
        raise ValueError("layered graph must be simple (split multiplicities first)")
    offsets = [0, 0, 0, 0]
    acc = 0
    for i, s in enumerate(g.layer_sizes):
        offsets[i] = acc
        acc += s
    n = acc
    by_class: list[list[tuple[int, int]]] = [[], [], [], []]
    for layer, u, v, _ in g.edges:
        by_class[layer].append((offsets[layer] + u, offsets[(layer + 1) % 4] + v))
    union = UndirectedGraph(n, [e for cls in by_class for e in cls])
    # edges only join consecutive layers, so the induced subgraphs are
    # exactly unions of edge classes
    two = tuple(UndirectedGraph(n, by_class[i]) for i in range(4))
    three = tuple(
        UndirectedGraph(n, by_class[i] + by_class[(i + 1) % 4]) for i in range(4)
    )
    return LayeredToUndirected(union, two, three)


def split_multigraph(
    g: CircleLayeredMultigraph,
) -> Iterator[tuple[CircleLayeredMultigraph, Count]]:
    """Decompose weighted counting into simple instances over bit choices.

    Yields ((floor(log2 U) + 1)^4) simple graphs with weights 2^(sum of
    chosen bits); the weighted sum of their counts equals the weighted
    count of the multigraph.
    """
    u = g.max_mult
    bits = u.bit_length()  # floor(log2 U) + 1 for U >= 1
    by_class = [[], [], [], []]
    for layer, a, b, m in g.edges:
        by_class[layer].append((a, b, m))
    for p0 in range(bits):
        for p1 in range(bits):
            for p2 in range(bits):
                for p3 in range(bits):
                    ps = (p0, p1, p2, p3)
                    edges = []
                    for layer in range(4):
                        bit = 1 << ps[layer]
                        for a, b, m in by_class[layer]:
                            if m & bit:
                                edges.append((layer, a, b, 1))
                    weight = 1 << (p0 + p1 + p2 + p3)
                    yield CircleLayeredMultigraph(g.layer_sizes, edges), weight


def _part_ranks(coords: np.ndarray) -> tuple[dict[int, int], int]:
    """coordinate -> 0-based rank, and the padded tree size."""
    t = len(coords)
    ranks = {int(c): i for i, c in enumerate(np.sort(coords))}
    nt = 1
    while nt < max(t, 1):
        nt *= 2
    return ranks, nt


def pattern_instance_to_multigraph(ps: PointSet,
                                   div: PlaneDivision) -> CircleLayeredMultigraph:
    """Build the circle-layered multigraph whose weighted 4-cycle count is
    the 4-partite occurrence count of the canonical pattern 1324.

    The caller must already have normalized the instance to 1324.  Layers
    host one range tree per part (T=0, R=1, B=2, L=3); a point adds an
    edge for every pair of non-singleton enclosing ranges whose halves it
    sits in according to the canonical membership table.
    """
    regions = [div.region_of(int(x), int(y)) for x, y in zip(ps.xs, ps.ys)]
    left_x = [int(x) for x, r in zip(ps.xs, regions) if r in (0, 2)]
    right_x = [int(x) for x, r in zip(ps.xs, regions) if r in (1, 3)]
    bottom_y = [int(y) for y, r in zip(ps.ys, regions) if r in (2, 3)]
    top_y = [int(y) for y, r in zip(ps.ys, regions) if r in (0, 1)]
    # trees indexed by layer: T=0, R=1, B=2, L=3
    part_coords = {0: top_y, 1: right_x, 2: bottom_y, 3: left_x}
    ranks = {}
    sizes = {}
    for layer, coords in part_coords.items():
        ranks[layer], sizes[layer] = _part_ranks(np.asarray(coords, dtype=np.int64))
    x_tree = {0: 3, 1: 1, 2: 3, 3: 1}  # region -> layer of its x-part tree
    y_tree = {0: 0, 1: 0, 2: 2, 3: 2}
    edges: dict[tuple[int, int, int], int] = {}
    for x, y, r in zip(ps.xs.tolist(), ps.ys.tolist(), regions):
        cx, cy = HALF_CONDITIONS_1324[r]
        tx, ty = x_tree[r], y_tree[r]
        xr = ranks[tx][x]
        yr = ranks[ty][y]
        ntx, nty = sizes[tx], sizes[ty]
        src_layer, dst_layer, src_axis = REGION_EDGE[r]
        lx = 1
        while (1 << lx) <= ntx:
            if ((xr >> (lx - 1)) & 1) == cx:
                xnode = (ntx >> lx) + (xr >> lx)
                ly = 1
                while (1 << ly) <= nty:
                    if ((yr >> (ly - 1)) & 1) == cy:
                        ynode = (nty >> ly) + (yr >> ly)
                        if src_axis == "x":
                            key = (src_layer, xnode, ynode)
                        else:
                            key = (src_layer, ynode, xnode)
                        edges[key] = edges.get(key, 0) + 1
                    ly += 1
            lx += 1
    layer_caps = tuple(max(sizes[layer], 1) for layer in range(4))
    return CircleLayeredMultigraph(
        layer_caps, [(l, u, v, m) for (l, u, v), m in sorted(edges.items())]
    )


@dataclass(frozen=True)
class SignedInstance:
    points: PointSet
    division: PlaneDivision
    sign: int


def layered_to_pattern_instances(
    g: CircleLayeredMultigraph,
) -> list[SignedInstance]:
    """Embed a simple circle-layered graph as 16 signed divided point sets.

    Every edge becomes a point (nodes of the four layers sit on the four
    half-axes); a 4-cycle is an axis-aligned rectangle with one corner per
    quadrant.  Per-quadrant tilts of +-1/5 in all 16 sign combinations plus
    a small shear turn rectangle detection into counting the 4-partite
    pattern 1324, via inclusion-exclusion: the signed sum of the 16
    pattern counts equals the 4-cycle count.

    All coordinates are scaled integers: base coordinates are multiplied
    by 10*n so the 1/5 tilt is 2*n and the 1/(10n) shear is 1; n exceeds
    every layer size by one so shear plus tilt can never cancel exactly.
    """
    if not g.is_simple:
        raise ValueError("pattern embedding needs unit multiplicities")
    nmax = max(max(g.layer_sizes), 1) + 1
    scale = 10 * nmax
    tilt = 2 * nmax
    base = []
    for layer, u, v, _ in g.edges:
        if layer == 0:   # V0 (negative x) -> V1 (positive y): TL quadrant
            base.append((-(u + 1), v + 1, 0))
        elif layer == 1:  # V1 -> V2 (positive x): TR
            base.append((v + 1, u + 1, 1))
        elif layer == 2:  # V2 -> V3 (negative y): BR
            base.append((u + 1, -(v + 1), 3))
        else:             # V3 -> V0: BL
            base.append((-(v + 1), -(u + 1), 2))
    parts = ("left", "top", "bottom", "right")  # shifted part per region code
    region_part = {0: "left", 1: "top", 2: "bottom", 3: "right"}
    out = []
    for mask in range(16):
        chosen = {p for k, p in enumerate(parts) if (mask >> k) & 1}
        xs = []
        ys = []
        for x, y, region in base:
            sx = scale * x + y
            sy = scale * y + x
            part = region_part[region]
            delta = tilt if part in chosen else -tilt
            if region == 0:      # TL shifts horizontally by +delta_L
                sx += delta
            elif region == 1:    # TR shifts vertically by +delta_T
                sy += delta
            elif region == 2:    # BL shifts vertically by -delta_B
                sy -= delta
            else:                # BR shifts horizontally by -delta_R
                sx -= delta
            xs.append(sx)
            ys.append(sy)
        sign = 1 if bin(mask).count("1") % 2 == 0 else -1
        pts = PointSet(xs=np.asarray(xs, dtype=np.int64),
                       ys=np.asarray(ys, dtype=np.int64))
        out.append(SignedInstance(pts, PlaneDivision(0, 0), sign))
    return out
