"""Counting every proper shape except the 4-partite one on a divided
point set.

Three shape families exist up to plane symmetry: diagonal product shapes
(3+1 and 2+2), the 1102 family (single pivot region, one opposite single,
one pair region) and the 1201 family (two single regions flanking a pair).
Each oriented shape is transported onto its family's canonical frame by
reflecting/transposing the instance; there is exactly one counting routine
per family.  Weighted range counters are built once per divided view and
shared across families.
"""

from __future__ import annotations

import numpy as np

from ._tables import (
    CANON_TRANSFORM,
    EASY_SHAPES,
    FAMILY_1102,
    FAMILY_1201,
    IDENTITY,
    PRODUCT_SHAPES,
    params_1102,
    params_1201,
    product_split,
    transform_pattern,
    transform_point,
)
from .perm import Count, Pattern, PlaneDivision, PointSet, Shape
from .rangequery import RangeCounter
from .smallpat import count3_all, dominance_counts, weighted_dominance
from ._exact import exact_sum

_DOM_INDEX = {"ld": 0, "lu": 1, "rd": 2, "ru": 3}


def _rect0(counter: RangeCounter, xlo, xhi, ylo, yhi) -> Count:
    """rect_sum that treats an empty interval as 0 instead of an error."""
    if xlo is not None and xhi is not None and xlo > xhi:
        return 0
    if ylo is not None and yhi is not None and ylo > yhi:
        return 0
    return counter.rect_sum(xlo, xhi, ylo, yhi)


def transform_instance(ps: PointSet, div: PlaneDivision,
                       t: tuple) -> tuple[PointSet, PlaneDivision]:
    """Apply a plane symmetry to points and division lines."""
    swap, negx, negy = t
    xs, ys = (ps.ys, ps.xs) if swap else (ps.xs, ps.ys)
    v2, h2 = (div.h2, div.v2) if swap else (div.v2, div.h2)
    if negx:
        xs, v2 = -xs, -v2
    if negy:
        ys, h2 = -ys, -h2
    return PointSet(xs=xs, ys=ys), PlaneDivision(int(v2), int(h2))


class DividedInstance:
    """A point set with a division; lazily builds shared counting aids."""

    def __init__(self, ps: PointSet, div: PlaneDivision):
        self.ps = ps
        self.div = div
        region = np.fromiter(
            (div.region_of(int(x), int(y)) for x, y in zip(ps.xs, ps.ys)),
            dtype=np.int64, count=len(ps),
        )
        self.region_xs = {}
        self.region_ys = {}
        for r in range(4):
            mask = region == r
            self.region_xs[r] = ps.xs[mask]  # ascending x (ps is x-sorted)
            self.region_ys[r] = ps.ys[mask]
        self._dominance: dict[int, tuple] = {}
        self._counter: RangeCounter | None = None
        self._pair_counters: dict[tuple[int, str], RangeCounter] = {}
        self._counts3: dict[int, dict[str, Count]] = {}
        self._table_1201: dict[str, dict] = {}

    # division bounds in point coordinates
    @property
    def left_xmax(self) -> int:
        return (self.div.v2 - 1) // 2

    @property
    def right_xmin(self) -> int:
        return self.div.v2 // 2 + 1

    @property
    def bottom_ymax(self) -> int:
        return (self.div.h2 - 1) // 2

    @property
    def top_ymin(self) -> int:
        return self.div.h2 // 2 + 1

    def size(self, r: int) -> int:
        return len(self.region_xs[r])

    @property
    def counter(self) -> RangeCounter:
        if self._counter is None:
            self._counter = RangeCounter(zip(self.ps.xs.tolist(),
                                             self.ps.ys.tolist()))
        return self._counter

    def dominance(self, r: int) -> tuple:
        """(ld, lu, rd, ru) partner counts within region r, x order."""
        if r not in self._dominance:
            self._dominance[r] = dominance_counts(self.region_ys[r])
        return self._dominance[r]

    def pair_counter(self, r: int, kind: str) -> RangeCounter:
        """Range counter over region r weighted by a dominance count."""
        key = (r, kind)
        if key not in self._pair_counters:
            w = self.dominance(r)[_DOM_INDEX[kind]]
            pts = zip(self.region_xs[r].tolist(), self.region_ys[r].tolist(),
                      (int(v) for v in w))
            self._pair_counters[key] = RangeCounter(pts)
        return self._pair_counters[key]

    def counts3(self, r: int) -> dict[str, Count]:
        if r not in self._counts3:
            self._counts3[r] = count3_all(self.region_ys[r])
        return self._counts3[r]

    def count_in_region(self, r: int, k: int, sub: tuple[int, ...]) -> Count:
        """Occurrences of a 1/2/3-pattern among region r's points."""
        size = self.size(r)
        if size < k:
            return 0
        if k == 1:
            return size
        if k == 2:
            _, _, rd, ru = self.dominance(r)
            return exact_sum(ru if sub == (1, 2) else rd)
        return self.counts3(r)["".join(str(v) for v in sub)]


def _count_1102_canonical(inst: DividedInstance, above: bool,
                          paircase: str, pairorder: str) -> Count:
    # canonical frame: pivot in TR(1), single in TL(0), pair in BR(3)
    na, no, np_ = inst.size(1), inst.size(0), inst.size(3)
    if na == 0 or no == 0 or np_ < 2:
        return 0
    lead = inst.pair_counter(3, "rd" if pairorder == "21" else "ru")
    trail = inst.pair_counter(3, "lu" if pairorder == "21" else "ld")
    total_pairs = lead.total
    counter = inst.counter
    total = 0
    for x, y in zip(inst.region_xs[1].tolist(), inst.region_ys[1].tolist()):
        if above:
            fo = _rect0(counter, None, inst.left_xmax, y + 1, None)
        else:
            fo = _rect0(counter, None, inst.left_xmax, inst.top_ymin, y - 1)
        if fo == 0:
            continue
        if paircase == "right":
            fp = lead.rect_sum(x + 1, None, None, None)
        elif paircase == "left":
            fp = trail.rect_sum(None, x - 1, None, None)
        else:
            fp = (total_pairs
                  - lead.rect_sum(x + 1, None, None, None)
                  - trail.rect_sum(None, x - 1, None, None))
        total += fo * fp
    return total


def _build_1201_table(inst: DividedInstance, pairorder: str) -> dict:
    """All nine (rcase, qcase) counts for canonical shape (1,2,0,1).

    q sits in TL(0), the pair in TR(1), r in BR(3).  Eight placements fall
    to weighted range sums; the ninth is the difference from the closed
    form |TL| * |BR| * #pair(TR).
    """
    kq, kp, kr = inst.size(0), inst.size(1), inst.size(3)
    cases = [(rc, qc) for rc in ("right", "left", "straddle")
             for qc in ("above", "below", "between")]
    if kq == 0 or kr == 0 or kp < 2:
        return {c: 0 for c in cases}
    xs = inst.region_xs[1]
    ys = inst.region_ys[1]
    counter = inst.counter
    wB = np.fromiter(
        (_rect0(counter, inst.right_xmin, int(x) - 1, None, inst.bottom_ymax)
         for x in xs), dtype=np.int64, count=kp)
    wA = kr - wB
    Ga = np.fromiter(
        (_rect0(counter, None, inst.left_xmax, int(y) + 1, None)
         for y in ys), dtype=np.int64, count=kp)
    Gb = kq - Ga
    ld, lu, rd, ru = inst.dominance(1)
    if pairorder == "21":
        lead_dom, trail_dom = rd, lu          # leader is the upper point
        lead_dir = "rd"
    else:
        lead_dom, trail_dom = ru, ld          # leader is the lower point
        lead_dir = "ru"
    npairs = exact_sum(lead_dom)

    def s_lt(f, g):
        """Sum of f(leader) * g(trailer) over pairs."""
        wd = weighted_dominance(ys, g, lead_dir)
        return sum(int(f[i]) * wd[i] for i in range(kp))

    def s_lead(f, g):
        return int(np.dot(f * g, lead_dom))

    def s_trail(f, g):
        return int(np.dot(f * g, trail_dom))

    out = {}
    if pairorder == "21":
        out[("right", "above")] = s_lt(Ga, wA)
        out[("right", "below")] = s_trail(wA, Gb)
        out[("right", "between")] = s_trail(wA, Ga) - s_lt(Ga, wA)
        out[("left", "above")] = s_lead(wB, Ga)
        out[("left", "below")] = s_lt(wB, Gb)
        out[("left", "between")] = s_lt(wB, Ga) - s_lead(wB, Ga)
        out[("straddle", "above")] = s_lt(Ga, wB) - s_lead(wB, Ga)
        out[("straddle", "below")] = s_trail(wB, Gb) - s_lt(wB, Gb)
    else:
        out[("right", "above")] = s_trail(wA, Ga)
        out[("right", "below")] = s_lt(Gb, wA)
        out[("right", "between")] = s_lt(Ga, wA) - s_trail(wA, Ga)
        out[("left", "above")] = s_lt(wB, Ga)
        out[("left", "below")] = s_lead(wB, Gb)
        out[("left", "between")] = s_lead(wB, Ga) - s_lt(wB, Ga)
        out[("straddle", "above")] = s_trail(wB, Ga) - s_lt(wB, Ga)
        out[("straddle", "below")] = s_lt(Gb, wB) - s_lead(wB, Gb)
    easy_sum = sum(out.values())
    out[("straddle", "between")] = kq * kr * npairs - easy_sum
    return out


def _count_1201_canonical(inst: DividedInstance, rcase: str, qcase: str,
                          pairorder: str) -> Count:
    if pairorder not in inst._table_1201:
        inst._table_1201[pairorder] = _build_1201_table(inst, pairorder)
    return inst._table_1201[pairorder][(rcase, qcase)]


class EasyShapeCounter:
    """Shared per-instance state for counting all easy shapes."""

    def __init__(self, ps: PointSet, div: PlaneDivision):
        self._views: dict[tuple, DividedInstance] = {
            IDENTITY: DividedInstance(ps, div)
        }
        self.ps = ps
        self.div = div

    def view(self, t: tuple) -> DividedInstance:
        if t not in self._views:
            ps, div = transform_instance(self.ps, self.div, t)
            self._views[t] = DividedInstance(ps, div)
        return self._views[t]

    def count_shape(self, p: Pattern, shape: Shape) -> Count:
        sigma = p.values
        key = tuple(shape)
        if key in PRODUCT_SHAPES:
            split = product_split(key, sigma)
            if split is None:
                return 0
            inst = self.view(IDENTITY)
            (r1, sub1), (r2, sub2) = split
            return (inst.count_in_region(r1, len(sub1), sub1)
                    * inst.count_in_region(r2, len(sub2), sub2))
        if key in FAMILY_1102:
            t = CANON_TRANSFORM[key]
            params = params_1102(transform_pattern(t, sigma))
            if params is None:
                return 0
            return _count_1102_canonical(self.view(t), *params)
        if key in FAMILY_1201:
            t = CANON_TRANSFORM[key]
            params = params_1201(transform_pattern(t, sigma))
            if params is None:
                return 0
            return _count_1201_canonical(self.view(t), *params)
        raise ValueError(f"{shape} is not a proper non-4-partite shape")

    def count_all(self, p: Pattern) -> Count:
        return sum(self.count_shape(p, Shape(*s)) for s in EASY_SHAPES)


def count_product_shape(ps: PointSet, div: PlaneDivision, p: Pattern,
                        shape: Shape) -> Count:
    """Count a diagonal two-region shape as a product of small counts."""
    if tuple(shape) not in PRODUCT_SHAPES:
        raise ValueError(f"{shape} is not a diagonal product shape")
    return EasyShapeCounter(ps, div).count_shape(p, shape)


def count_shape_1102(ps: PointSet, div: PlaneDivision, p: Pattern,
                     shape: Shape) -> Count:
    """Count an oriented shape of the 1102 family (pivot + single + pair)."""
    if tuple(shape) not in FAMILY_1102:
        raise ValueError(f"{shape} is not in the 1102 family")
    return EasyShapeCounter(ps, div).count_shape(p, shape)


def count_shape_1201(ps: PointSet, div: PlaneDivision, p: Pattern,
                     shape: Shape) -> Count:
    """Count an oriented shape of the 1201 family (two singles + pair)."""
    if tuple(shape) not in FAMILY_1201:
        raise ValueError(f"{shape} is not in the 1201 family")
    return EasyShapeCounter(ps, div).count_shape(p, shape)


def count_all_easy_shapes(ps: PointSet, div: PlaneDivision,
                          p: Pattern) -> Count:
    """Occurrences of p forming any proper shape other than one-per-region."""
    return EasyShapeCounter(ps, div).count_all(p)
