"""Frozen geometric tables shared by the shape counters and the graph
reductions.

Everything here is derived at import time from two primitives: the action
of the 8 plane symmetries on points, and the forced region assignment of a
4-pattern occurrence under a division.  Tests re-validate the derived
tables against brute-force enumeration.
"""

from __future__ import annotations

import itertools
from typing import Sequence

# ---------------------------------------------------------------------------
# plane symmetries: t = (swap, negx, negy) acting as
#   (x, y) -> (sx * (y if swap else x), sy * (x if swap else y))
# ---------------------------------------------------------------------------

TRANSFORMS = tuple(
    (swap, negx, negy) for swap in (0, 1) for negx in (0, 1) for negy in (0, 1)
)
IDENTITY = (0, 0, 0)


def transform_point(t: tuple, x: int, y: int) -> tuple[int, int]:
    swap, negx, negy = t
    nx, ny = (y, x) if swap else (x, y)
    return (-nx if negx else nx, -ny if negy else ny)


def transform_pattern(t: tuple, sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Pattern of the transformed point set {(j, sigma[j])}."""
    pts = [transform_point(t, j + 1, v) for j, v in enumerate(sigma)]
    pts.sort()
    order = sorted(range(len(pts)), key=lambda i: pts[i][1])
    ranks = [0] * len(pts)
    for r, i in enumerate(order):
        ranks[i] = r + 1
    return tuple(ranks)


# region codes follow perm.py: 0=TL, 1=TR, 2=BL, 3=BR
def _region_of_signs(x_neg: bool, y_neg: bool) -> int:
    left = x_neg
    top = not y_neg
    if left and top:
        return 0
    if not left and top:
        return 1
    if left and not top:
        return 2
    return 3


_REGION_REP = {0: (-1, 1), 1: (1, 1), 2: (-1, -1), 3: (1, -1)}


def transform_region(t: tuple, region: int) -> int:
    x, y = _REGION_REP[region]
    nx, ny = transform_point(t, x, y)
    return _region_of_signs(nx < 0, ny < 0)


def transform_shape(t: tuple, shape: tuple[int, int, int, int]) -> tuple:
    out = [0, 0, 0, 0]
    for region, cnt in enumerate(shape):
        out[transform_region(t, region)] = cnt
    return tuple(out)


# ---------------------------------------------------------------------------
# shape families
# ---------------------------------------------------------------------------

def _orbit(shape: tuple) -> tuple:
    return tuple(sorted({transform_shape(t, shape) for t in TRANSFORMS}))


CANON_1102 = (1, 1, 0, 2)
CANON_1201 = (1, 2, 0, 1)

FAMILY_1102 = _orbit(CANON_1102)          # 8 oriented shapes
FAMILY_1201 = _orbit(CANON_1201)          # 4 oriented shapes
PRODUCT_SHAPES = tuple(sorted(set(_orbit((3, 0, 0, 1))) | set(_orbit((2, 0, 0, 2)))))

EASY_SHAPES = tuple(sorted(set(PRODUCT_SHAPES) | set(FAMILY_1102) | set(FAMILY_1201)))

# first transform (in TRANSFORMS order) carrying each oriented shape onto
# its family's canonical one
CANON_TRANSFORM: dict[tuple, tuple] = {}
for _shape in FAMILY_1102:
    CANON_TRANSFORM[_shape] = next(
        t for t in TRANSFORMS if transform_shape(t, _shape) == CANON_1102
    )
for _shape in FAMILY_1201:
    CANON_TRANSFORM[_shape] = next(
        t for t in TRANSFORMS if transform_shape(t, _shape) == CANON_1201
    )


# ---------------------------------------------------------------------------
# forced region assignment of an occurrence
# ---------------------------------------------------------------------------

def region_assignment(shape: Sequence[int], sigma: tuple[int, ...]):
    """Regions each pattern element must occupy to realize `shape`.

    Position order decides left/right (the first tl+bl positions are left),
    value order decides bottom/top.  Returns the per-element region list if
    the tallies match the shape, else None.
    """
    tl, tr, bl, br = shape
    left_cnt = tl + bl
    bottom_cnt = bl + br
    regions = []
    tally = [0, 0, 0, 0]
    for pos0, v in enumerate(sigma):
        left = pos0 < left_cnt
        top = v > bottom_cnt
        r = _region_of_signs(left, not top)
        regions.append(r)
        tally[r] += 1
    if tuple(tally) != tuple(shape):
        return None
    return regions


ALL_SIGMA4 = tuple(itertools.permutations((1, 2, 3, 4)))


# ---------------------------------------------------------------------------
# canonical-frame parameters for the two non-product families
# ---------------------------------------------------------------------------

def params_1102(sigma: tuple[int, ...]):
    """(above, paircase, pairorder) for canonical shape (1,1,0,2), or None.

    Canonical frame: one point in TL, the iterated point in TR, a pair in
    BR.  `above`: TL element value exceeds the TR element value.
    `paircase`: TR point left of both pair points ('right' = pair lies
    right of it), straddling, or right of both ('left').
    """
    regions = region_assignment(CANON_1102, sigma)
    if regions is None:
        return None
    j = regions.index(1)                     # TR element position (0-based)
    pair = [i for i, r in enumerate(regions) if r == 3]
    above = sigma[0] > sigma[j]
    paircase = {1: "right", 2: "straddle", 3: "left"}[j]
    pairorder = "21" if sigma[pair[0]] > sigma[pair[1]] else "12"
    return above, paircase, pairorder


def params_1201(sigma: tuple[int, ...]):
    """(rcase, qcase, pairorder) for canonical shape (1,2,0,1), or None.

    Canonical frame: q in TL, pair (a, b by x) in TR, r in BR.  rcase is
    r's horizontal position relative to the pair, qcase is q's vertical
    position relative to the pair's values.
    """
    regions = region_assignment(CANON_1201, sigma)
    if regions is None:
        return None
    pr = regions.index(3)
    pair = [i for i, r in enumerate(regions) if r == 1]
    rcase = {1: "left", 2: "straddle", 3: "right"}[pr]
    va, vb = sigma[pair[0]], sigma[pair[1]]
    q = sigma[0]
    if q > max(va, vb):
        qcase = "above"
    elif q < min(va, vb):
        qcase = "below"
    else:
        qcase = "between"
    pairorder = "21" if va > vb else "12"
    return rcase, qcase, pairorder


def product_split(shape: Sequence[int], sigma: tuple[int, ...]):
    """For a two-region diagonal shape: ((region, subpattern), (region, sub)).

    Returns None when sigma cannot realize the shape.
    """
    occupied = [r for r in range(4) if shape[r] > 0]
    if len(occupied) != 2:
        raise ValueError(f"not a product shape: {shape}")
    regions = region_assignment(shape, sigma)
    if regions is None:
        return None
    out = []
    for r in occupied:
        positions = [i for i, reg in enumerate(regions) if reg == r]
        vals = [sigma[i] for i in positions]
        order = sorted(range(len(vals)), key=lambda i: vals[i])
        ranks = [0] * len(vals)
        for rk, i in enumerate(order):
            ranks[i] = rk + 1
        out.append((r, tuple(ranks)))
    return tuple(out)


# ---------------------------------------------------------------------------
# part-reversal actions and the 1324 normalization table
# ---------------------------------------------------------------------------

def _act_left(s):
    return (s[1], s[0], s[2], s[3])


def _act_right(s):
    return (s[0], s[1], s[3], s[2])


def _act_bottom(s):
    swap = {1: 2, 2: 1}
    return tuple(swap.get(v, v) for v in s)


def _act_top(s):
    swap = {3: 4, 4: 3}
    return tuple(swap.get(v, v) for v in s)


PART_ACTIONS = {"left": _act_left, "right": _act_right,
                "bottom": _act_bottom, "top": _act_top}
PART_ORDER = ("left", "right", "bottom", "top")

CANONICAL_4PARTITE = (1, 3, 2, 4)


def apply_reversals(sigma: tuple, parts: frozenset[str] | set[str]) -> tuple:
    for name in PART_ORDER:
        if name in parts:
            sigma = PART_ACTIONS[name](sigma)
    return sigma


# sigma -> the unique subset of part reversals carrying it to 1324
NORMALIZE_REVERSALS: dict[tuple, frozenset] = {}
for _sigma in ALL_SIGMA4:
    if region_assignment((1, 1, 1, 1), _sigma) is None:
        continue  # trivial pattern
    hits = [
        frozenset(c)
        for k in range(5)
        for c in itertools.combinations(PART_ORDER, k)
        if apply_reversals(_sigma, frozenset(c)) == CANONICAL_4PARTITE
    ]
    assert len(hits) == 1, (_sigma, hits)
    NORMALIZE_REVERSALS[_sigma] = hits[0]

assert len(NORMALIZE_REVERSALS) == 16


# ---------------------------------------------------------------------------
# tree-pair multigraph conventions (4-partite counting)
# ---------------------------------------------------------------------------

# layers: T=0, R=1, B=2, L=3; every edge goes from layer i to (i+1) mod 4
LAYER_T, LAYER_R, LAYER_B, LAYER_L = 0, 1, 2, 3

# region -> (source tree layer, destination tree layer, source axis)
# The source axis tells which coordinate the source tree indexes ('x' for
# the position trees L/R, 'y' for the value trees B/T).
REGION_EDGE = {
    1: (LAYER_T, LAYER_R, "y"),  # TR point: value range in T, position in R
    3: (LAYER_R, LAYER_B, "x"),  # BR point
    2: (LAYER_B, LAYER_L, "y"),  # BL point
    0: (LAYER_L, LAYER_T, "x"),  # TL point
}

# which tree (by layer) indexes which axis
TREE_AXIS = {LAYER_T: "y", LAYER_R: "x", LAYER_B: "y", LAYER_L: "x"}
# region whose points feed each tree's x/y coordinate
TREE_REGIONS = {
    LAYER_L: (0, 2),  # left part: TL and BL points (x coordinates)
    LAYER_R: (1, 3),
    LAYER_B: (2, 3),  # bottom part: BL and BR points (y coordinates)
    LAYER_T: (0, 1),
}


def half_conditions(sigma: tuple[int, ...]) -> dict[int, tuple[int, int]]:
    """Per-region (x-half, y-half) membership a point must satisfy, for a
    non-trivial pattern: 0 = lower half of the enclosing range, 1 = upper.

    Within each part the two occurrence points share their enclosing range
    and must sit in opposite halves ordered according to the pattern.
    """
    regions = region_assignment((1, 1, 1, 1), sigma)
    if regions is None:
        raise ValueError(f"{sigma} is a trivial pattern")
    pos = {r: i for i, r in enumerate(regions)}
    val = {r: sigma[i] for i, r in enumerate(regions)}
    cond: dict[int, list[int]] = {r: [0, 0] for r in range(4)}
    # left part: TL(0) vs BL(2) by position
    cond[0][0] = 0 if pos[0] < pos[2] else 1
    cond[2][0] = 1 - cond[0][0]
    # right part: TR(1) vs BR(3) by position
    cond[1][0] = 0 if pos[1] < pos[3] else 1
    cond[3][0] = 1 - cond[1][0]
    # bottom part: BL(2) vs BR(3) by value
    cond[2][1] = 0 if val[2] < val[3] else 1
    cond[3][1] = 1 - cond[2][1]
    # top part: TL(0) vs TR(1) by value
    cond[0][1] = 0 if val[0] < val[1] else 1
    cond[1][1] = 1 - cond[0][1]
    return {r: (c[0], c[1]) for r, c in cond.items()}


HALF_CONDITIONS_1324 = half_conditions(CANONICAL_4PARTITE)
