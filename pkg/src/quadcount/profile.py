"""Top-level pattern-counting pipeline.

Every occurrence of a 4-pattern is counted exactly once: at the unique
pair of enclosing tree ranges (positions, values) whose child midlines
split it into a proper shape.  Easy shapes are counted directly; the
one-point-per-region remainder is normalized to the canonical pattern
1324 and counted as weighted 4-cycles of a circle-layered multigraph.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._tables import NORMALIZE_REVERSALS
from .graphs import count_c4_layered
from .perm import (
    ALL_PATTERNS4,
    Count,
    NONTRIVIAL_PATTERNS,
    Pattern,
    Permutation,
    PlaneDivision,
    PointSet,
    TRIVIAL_PATTERNS,
    brute_count_pattern,
    points_of,
)
from .reductions import pattern_instance_to_multigraph
from .shapes import EasyShapeCounter


@dataclass(frozen=True)
class BaseRange:
    """A node interval of the full binary tree over the padded universe."""

    lo: int
    hi: int

    def __post_init__(self):
        size = self.hi - self.lo + 1
        if size < 1 or size & (size - 1):
            raise ValueError(f"range size {size} is not a power of two")
        if (self.lo - 1) % size:
            raise ValueError(f"range {self} is not aligned")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True)
class RelevantPair:
    rx: BaseRange
    ry: BaseRange
    pts: PointSet


class Profile4:
    """Occurrence counts of all twenty-four 4-patterns."""

    __slots__ = ("counts", "n")

    def __init__(self, counts: dict[str, Count], n: int):
        if sorted(counts) != sorted(ALL_PATTERNS4):
            raise ValueError("profile must cover all 24 patterns")
        total = sum(counts.values())
        if total != math.comb(n, 4):
            raise RuntimeError(
                f"profile sum {total} != C({n},4); counting bug")
        self.counts = dict(counts)
        self.n = n

    def __getitem__(self, digits: str) -> Count:
        return self.counts[digits]

    @property
    def total(self) -> Count:
        return sum(self.counts.values())

    def as_dict(self) -> dict[str, Count]:
        return dict(self.counts)

    def __repr__(self) -> str:
        nz = {d: c for d, c in self.counts.items() if c}
        return f"Profile4(n={self.n}, nonzero={nz})"


def _padded_levels(n: int) -> int:
    levels = 0
    while (1 << levels) < n:
        levels += 1
    return levels


def relevant_pairs(perm: Permutation) -> list[RelevantPair]:
    """All pairs of base ranges (positions, values) holding >= 1 point."""
    n = len(perm)
    if n == 0:
        return []
    levels = _padded_levels(n)
    groups: dict[tuple[int, int, int, int], list[int]] = {}
    values = perm.values
    for idx in range(n):
        x = idx + 1
        y = int(values[idx])
        for lx in range(levels + 1):
            bx = (x - 1) >> lx
            for ly in range(levels + 1):
                by = (y - 1) >> ly
                groups.setdefault((lx, bx, ly, by), []).append(idx)
    out = []
    for (lx, bx, ly, by), idxs in sorted(groups.items()):
        rx = BaseRange(bx * (1 << lx) + 1, (bx + 1) * (1 << lx))
        ry = BaseRange(by * (1 << ly) + 1, (by + 1) * (1 << ly))
        pts = PointSet(
            xs=np.asarray([i + 1 for i in idxs], dtype=np.int64),
            ys=values[np.asarray(idxs, dtype=np.int64)],
        )
        out.append(RelevantPair(rx, ry, pts))
    return out


def child_division(rx: BaseRange, ry: BaseRange) -> PlaneDivision:
    """Lines through the midpoints between the two children of each range."""
    if rx.size < 2 or ry.size < 2:
        raise ValueError("leaf ranges have no child midline")
    v2 = 2 * rx.lo + rx.size - 1
    h2 = 2 * ry.lo + ry.size - 1
    return PlaneDivision(v2, h2)


def counting_instances(perm: Permutation):
    """Divided sub-instances (>= 4 points) where occurrences are counted."""
    for pair in relevant_pairs(perm):
        if len(pair.pts) >= 4:
            yield pair.pts, child_division(pair.rx, pair.ry)


def normalize_to_1324(ps: PointSet, div: PlaneDivision,
                      p: Pattern) -> tuple[PointSet, PlaneDivision]:
    """Reverse a subset of the four plane parts so that one-per-region
    occurrences of p become one-per-region occurrences of 1324."""
    if len(p) != 4 or p.digits in TRIVIAL_PATTERNS:
        raise ValueError(f"{p!r} is not a non-trivial 4-pattern")
    parts = NORMALIZE_REVERSALS[p.values]
    xs = ps.xs.copy()
    ys = ps.ys.copy()
    left = 2 * xs < div.v2
    right = ~left
    bottom = 2 * ys < div.h2
    top = ~bottom
    for name, mask, arr in (("left", left, xs), ("right", right, xs),
                            ("bottom", bottom, ys), ("top", top, ys)):
        if name in parts and mask.any():
            lo = int(arr[mask].min())
            hi = int(arr[mask].max())
            arr[mask] = lo + hi - arr[mask]
    return PointSet(xs=xs, ys=ys), div


def count_4partite(ps: PointSet, div: PlaneDivision, p: Pattern) -> Count:
    """Occurrences of a non-trivial pattern with one point per region."""
    nps, ndiv = normalize_to_1324(ps, div, p)
    return count_c4_layered(pattern_instance_to_multigraph(nps, ndiv))


def four_partite_by_inclusion_exclusion(ps: PointSet, div: PlaneDivision,
                                        p: Pattern, counter=None) -> Count:
    """One-per-region count via plain pattern counts on region subsets.

    Occurrences touching fewer than four regions cancel: summing
    (-1)^|S| * count(points of the union of S) over region subsets leaves
    exactly the 4-partite ones (the full-region term carries +1).
    """
    if counter is None:
        def counter(sub: PointSet, pat: Pattern) -> Count:
            return brute_count_pattern(sub.to_permutation(), pat)
    regions = [div.region_of(int(x), int(y)) for x, y in zip(ps.xs, ps.ys)]
    regions = np.asarray(regions, dtype=np.int64)
    total = 0
    for subset in range(16):
        members = [r for r in range(4) if (subset >> r) & 1]
        mask = np.isin(regions, members)
        sub = PointSet(xs=ps.xs[mask], ys=ps.ys[mask])
        sign = 1 if len(members) % 2 == 0 else -1
        total += sign * counter(sub, p)
    return total


def _reference_profile(perm: Permutation) -> dict[str, Count]:
    counts = {digits: 0 for digits in ALL_PATTERNS4}
    for pts, div in counting_instances(perm):
        esc = EasyShapeCounter(pts, div)
        for digits in ALL_PATTERNS4:
            p = Pattern.from_digits(digits)
            counts[digits] += esc.count_all(p)
            if digits not in TRIVIAL_PATTERNS:
                counts[digits] += count_4partite(pts, div, p)
    return counts


def _engine_counts(perm: Permutation, active_digits, want_c4: bool):
    from . import _engine

    active24 = np.zeros(24, dtype=np.bool_)
    for d in active_digits:
        active24[ALL_PATTERNS4.index(d)] = True
    active16 = np.zeros(16, dtype=np.bool_)
    if want_c4:
        for k, d in enumerate(NONTRIVIAL_PATTERNS):
            if d in active_digits:
                active16[k] = True
    easy, four = _engine.sweep(perm.values, active24, want_c4, active16)
    out = {}
    for d in active_digits:
        c = easy[ALL_PATTERNS4.index(d)]
        if want_c4 and d not in TRIVIAL_PATTERNS:
            c += four[NONTRIVIAL_PATTERNS.index(d)]
        out[d] = c
    return out


def count_pattern4(perm: Permutation, p: Pattern, method: str = "fast") -> Count:
    """Exact occurrence count of a 4-pattern."""
    if len(p) != 4:
        raise ValueError("count_pattern4 handles 4-patterns only")
    if len(perm) < 4:
        return 0
    if method == "reference":
        total = 0
        for pts, div in counting_instances(perm):
            total += EasyShapeCounter(pts, div).count_all(p)
            if p.digits not in TRIVIAL_PATTERNS:
                total += count_4partite(pts, div, p)
        return total
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    want_c4 = p.digits not in TRIVIAL_PATTERNS
    return _engine_counts(perm, [p.digits], want_c4)[p.digits]


def full_profile4(perm: Permutation, method: str = "fast") -> Profile4:
    """Occurrence counts of all 24 patterns; the sum must equal C(n,4)."""
    n = len(perm)
    if n < 4:
        return Profile4({d: 0 for d in ALL_PATTERNS4}, n)
    if method == "reference":
        counts = _reference_profile(perm)
    elif method == "fast":
        counts = _engine_counts(perm, list(ALL_PATTERNS4), True)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Profile4(counts, n)


def trivial_profile(perm: Permutation) -> dict[str, Count]:
    """The eight trivial-pattern counts (easy shapes are all they need)."""
    n = len(perm)
    trivial = sorted(TRIVIAL_PATTERNS)
    if n < 4:
        return {d: 0 for d in trivial}
    return _engine_counts(perm, trivial, False)


def bergsma_dassios(profile: Profile4 | dict[str, Count], n: int) -> Fraction:
    """The tau-star dependence statistic as an exact rational."""
    if n < 4:
        raise ValueError("tau-star needs n >= 4")
    counts = profile.as_dict() if isinstance(profile, Profile4) else profile
    concordant = sum(counts[d] for d in sorted(TRIVIAL_PATTERNS))
    return Fraction(concordant, math.comb(n, 4)) - Fraction(1, 3)
