"""Static 2D weighted orthogonal range counting.

A range tree over x-rank with per-node y-sorted arrays and prefix weight
sums: O(n log n) build, O(log^2 n) per rectangle query.  Weights and sums
are Python ints, so results are exact at any magnitude.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from itertools import accumulate
from typing import Iterable, NamedTuple


class WeightedPoint(NamedTuple):
    x: int
    y: int
    w: int = 1


class RangeCounter:
    """Immutable structure answering sum-of-weights queries in rectangles."""

    __slots__ = ("_xs", "_size", "_leaves", "_node_ys", "_node_pref", "total")

    def __init__(self, points: Iterable[WeightedPoint | tuple]):
        pts = [WeightedPoint(*p) for p in points]
        if len({p.x for p in pts}) != len(pts):
            raise ValueError("duplicate x coordinate")
        if len({p.y for p in pts}) != len(pts):
            raise ValueError("duplicate y coordinate")
        for p in pts:
            if p.w < 0:
                raise ValueError("negative weight")
        pts.sort(key=lambda p: p.x)
        self._xs = [p.x for p in pts]
        n = len(pts)
        size = 1
        while size < max(n, 1):
            size *= 2
        self._size = size
        self._leaves = n
        # nodes 1..2*size-1; each holds its points' ys (sorted) and prefix sums
        node_ys: list[list[int]] = [[] for _ in range(2 * size)]
        node_w: list[list[int]] = [[] for _ in range(2 * size)]
        for i, p in enumerate(pts):
            node_ys[size + i] = [p.y]
            node_w[size + i] = [p.w]
        for node in range(size - 1, 0, -1):
            left_ys, right_ys = node_ys[2 * node], node_ys[2 * node + 1]
            left_w, right_w = node_w[2 * node], node_w[2 * node + 1]
            merged_ys: list[int] = []
            merged_w: list[int] = []
            i = j = 0
            while i < len(left_ys) and j < len(right_ys):
                if left_ys[i] < right_ys[j]:
                    merged_ys.append(left_ys[i]); merged_w.append(left_w[i]); i += 1
                else:
                    merged_ys.append(right_ys[j]); merged_w.append(right_w[j]); j += 1
            merged_ys.extend(left_ys[i:]); merged_w.extend(left_w[i:])
            merged_ys.extend(right_ys[j:]); merged_w.extend(right_w[j:])
            node_ys[node] = merged_ys
            node_w[node] = merged_w
        self._node_ys = node_ys
        self._node_pref = [list(accumulate(w, initial=0)) for w in node_w]
        self.total = self._node_pref[1][-1] if n else 0

    def rect_sum(self, xlo, xhi, ylo, yhi) -> int:
        """Sum of weights over xlo <= x <= xhi and ylo <= y <= yhi.

        Bounds are inclusive; None or +-inf leaves a side unbounded.
        """
        xlo = None if xlo is not None and xlo == -math.inf else xlo
        xhi = None if xhi is not None and xhi == math.inf else xhi
        ylo = None if ylo is not None and ylo == -math.inf else ylo
        yhi = None if yhi is not None and yhi == math.inf else yhi
        if xlo is not None and xhi is not None and xlo > xhi:
            raise ValueError("inverted x bounds")
        if ylo is not None and yhi is not None and ylo > yhi:
            raise ValueError("inverted y bounds")
        if self._leaves == 0:
            return 0
        lo = 0 if xlo is None else bisect_left(self._xs, xlo)
        hi = self._leaves if xhi is None else bisect_right(self._xs, xhi)
        if lo >= hi:
            return 0
        total = 0
        lo += self._size
        hi += self._size
        while lo < hi:
            if lo & 1:
                total += self._node_range(lo, ylo, yhi)
                lo += 1
            if hi & 1:
                hi -= 1
                total += self._node_range(hi, ylo, yhi)
            lo >>= 1
            hi >>= 1
        return total

    def _node_range(self, node: int, ylo, yhi) -> int:
        ys = self._node_ys[node]
        a = 0 if ylo is None else bisect_left(ys, ylo)
        b = len(ys) if yhi is None else bisect_right(ys, yhi)
        if a >= b:
            return 0
        pref = self._node_pref[node]
        return pref[b] - pref[a]


def build_range_counter(points: Iterable[WeightedPoint | tuple]) -> RangeCounter:
    return RangeCounter(points)
