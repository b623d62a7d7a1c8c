"""Jitted production engine for the full counting pipeline.

The driver sweeps all tree-level pairs, groups points into the divided
sub-instances with at least four points, and hands batches of instances
to kernels that count every easy shape (for all requested patterns at
once) and, for non-trivial patterns, the one-point-per-region occurrences
via the layered-multigraph route.

Exactness: kernels work in int64 and accumulate into (hi, lo) pairs in
base 2**62, combined into Python ints outside.  Per-point terms are
bounded by s**3 < 2**60 for instances up to 2**20 points, which covers
the supported input sizes.

Orientation handling: the canonical per-family routines run in "view"
coordinates (the instance reflected/transposed onto the family's
canonical frame), but views are never materialized -- a view's dominance
counts are a fixed permutation of the raw ones and its sorted orders are
the raw orders walked forward or backward.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

from . import _tables
from .perm import NONTRIVIAL_PATTERNS, PATTERN4_INDEX

MASK62 = (1 << 62) - 1
MASK31 = (1 << 31) - 1
ACC_BASE = 62

MAX_N_FULL = 1 << 20        # with 4-partite counting
MAX_N_EASY = (1 << 21) - 1  # easy shapes only (trivial patterns)
# path composition is used while its emission volume stays comparable to
# the edge count; beyond that the degree-ordered codegree route wins
COMPOSE_EMIT_MIN = 1 << 16
COMPOSE_EMIT_FACTOR = 8

_THREE_ORDER = ("123", "132", "213", "231", "312", "321")


def _view_dir_to_raw(t, dx, dy):
    """Raw direction index (ld,lu,rd,ru = 0..3) of a view-delta sign pair."""
    swap, negx, negy = t
    sx = -1 if negx else 1
    sy = -1 if negy else 1
    if swap:
        ry_sign = dx * sx
        rx_sign = dy * sy
    else:
        rx_sign = dx * sx
        ry_sign = dy * sy
    return {(-1, -1): 0, (-1, 1): 1, (1, -1): 2, (1, 1): 3}[(rx_sign, ry_sign)]


def _orientation_row(t):
    """[vx_axis, vx_sign, vy_axis, vy_sign, domperm(4)] for a transform."""
    swap, negx, negy = t
    vx_axis = 1 if swap else 0
    vy_axis = 0 if swap else 1
    vx_sign = -1 if negx else 1
    vy_sign = -1 if negy else 1
    perm = [_view_dir_to_raw(t, dx, dy)
            for (dx, dy) in ((-1, -1), (-1, 1), (1, -1), (1, 1))]
    return [vx_axis, vx_sign, vy_axis, vy_sign] + perm


def _build_tables():
    prod_rows = []
    for shape in _tables.PRODUCT_SHAPES:
        for sigma in _tables.ALL_SIGMA4:
            split = _tables.product_split(shape, sigma)
            if split is None:
                continue
            si = PATTERN4_INDEX["".join(map(str, sigma))]
            row = [si]
            for region, sub in split:
                if len(sub) == 1:
                    code = 0
                elif len(sub) == 2:
                    code = 1 if sub == (1, 2) else 2
                else:
                    code = 3 + _THREE_ORDER.index("".join(map(str, sub)))
                row.extend((region, code))
            prod_rows.append(row)
    prod = np.asarray(prod_rows, dtype=np.int64)

    def orientation_arrays(family, canon_regions, params_fn, case_map):
        orient = np.zeros((len(family), 12), dtype=np.int64)
        compat = np.full((len(family), 24), -1, dtype=np.int64)
        for o, shape in enumerate(family):
            t = _tables.CANON_TRANSFORM[shape]
            inv = {_tables.transform_region(t, r): r for r in range(4)}
            orient[o, :4] = [inv[c] for c in canon_regions]
            orient[o, 4:] = _orientation_row(t)
            for sigma in _tables.ALL_SIGMA4:
                p = params_fn(_tables.transform_pattern(t, sigma))
                if p is None:
                    continue
                si = PATTERN4_INDEX["".join(map(str, sigma))]
                compat[o, si] = case_map(p)
        return orient, compat

    orient1102, compat1102 = orientation_arrays(
        _tables.FAMILY_1102,
        (1, 0, 3, 2),  # canonical pivot TR, single TL, pair BR, empty BL
        _tables.params_1102,
        lambda p: ((0 if p[0] else 1) * 6
                   + {"right": 0, "straddle": 1, "left": 2}[p[1]] * 2
                   + (0 if p[2] == "21" else 1)),
    )
    orient1201, compat1201 = orientation_arrays(
        _tables.FAMILY_1201,
        (0, 1, 3, 2),  # canonical q TL, pair TR, r BR, empty BL
        _tables.params_1201,
        lambda p: ({"right": 0, "left": 1, "straddle": 2}[p[0]] * 6
                   + {"above": 0, "below": 1, "between": 2}[p[1]] * 2
                   + (0 if p[2] == "21" else 1)),
    )

    half = np.zeros((16, 4, 2), dtype=np.int64)
    for k, digits in enumerate(NONTRIVIAL_PATTERNS):
        cond = _tables.half_conditions(tuple(int(c) for c in digits))
        for r in range(4):
            half[k, r, 0] = cond[r][0]
            half[k, r, 1] = cond[r][1]
    return prod, orient1102, compat1102, orient1201, compat1201, half


(PROD_ROWS, ORIENT_1102, COMPAT_1102, ORIENT_1201, COMPAT_1201,
 HALF_COND) = _build_tables()

# region r -> class of its edge (class c connects tree layer c to c+1)
CLASS_OF_REGION = np.array([3, 0, 2, 1], dtype=np.int64)
REGION_OF_CLASS = np.array([1, 3, 2, 0], dtype=np.int64)
# region -> 1 when the edge source tree indexes the x coordinate
SRC_IS_X = np.array([1, 0, 0, 1], dtype=np.int64)
# region -> x-part (0 = left, 1 = right) and y-part (0 = bottom, 1 = top)
XPART = np.array([0, 1, 0, 1], dtype=np.int64)
YPART = np.array([1, 1, 0, 0], dtype=np.int64)

# scratch workspace rows (per thread, each row holds maxs + 2 int64)
WS_ROWS = 24
(ROW_REG, ROW_RXS, ROW_RYS, ROW_XORD, ROW_XRANK, ROW_LD, ROW_LU, ROW_RD,
 ROW_RU, ROW_TREE, ROW_XSORT, ROW_TREE2, ROW_WD1, ROW_WD2, ROW_WB, ROW_GA,
 ROW_RANKV, ROW_PREF1, ROW_PREF2, ROW_PREF3, ROW_PREF4, ROW_PXRANK,
 ROW_PYRANK, ROW_TMP) = range(WS_ROWS)


# ---------------------------------------------------------------------------
# jitted exact-arithmetic helpers
# ---------------------------------------------------------------------------

@njit(cache=True, inline="always")
def _acc_add(acc, idx, v):
    """Add 0 <= v < 2**62 into accumulator row idx (base 2**62)."""
    acc[idx, 1] += v
    if acc[idx, 1] >= (1 << 62):
        acc[idx, 0] += acc[idx, 1] >> 62
        acc[idx, 1] &= MASK62


@njit(cache=True, inline="always")
def _acc_add_prod(acc, idx, a, b):
    """Add a*b exactly for 0 <= a, b < 2**62."""
    ah = a >> 31
    al = a & MASK31
    bh = b >> 31
    bl = b & MASK31
    acc[idx, 0] += ah * bh
    mid = ah * bl + al * bh
    acc[idx, 0] += mid >> 31
    _acc_add(acc, idx, (mid & MASK31) << 31)
    _acc_add(acc, idx, al * bl)


@njit(cache=True, inline="always")
def _pair_normalize(hi, lo):
    q = lo >> 62  # arithmetic shift keeps negatives exact
    return hi + q, lo - (q << 62)


@njit(cache=True, inline="always")
def _pair_add_prod(hi, lo, a, b):
    """(hi, lo) += a*b for 0 <= a, b < 2**62."""
    ah = a >> 31
    al = a & MASK31
    bh = b >> 31
    bl = b & MASK31
    hi += ah * bh
    mid = ah * bl + al * bh
    hi += mid >> 31
    lo += (mid & MASK31) << 31
    hi, lo = _pair_normalize(hi, lo)
    lo += al * bl
    return _pair_normalize(hi, lo)


@njit(cache=True, inline="always")
def _fen_add(tree, slot, v):
    i = slot + 1
    n = tree.shape[0] - 1
    while i <= n:
        tree[i] += v
        i += i & (-i)


@njit(cache=True, inline="always")
def _fen_pref(tree, cnt):
    s = 0
    i = cnt
    while i > 0:
        s += tree[i]
        i -= i & (-i)
    return s


@njit(cache=True, inline="always")
def _bisect_slice(arr, lo, hi, x):
    """Index of the first element >= x within arr[lo:hi]."""
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True, inline="always")
def _count_side(arr, lo, hi, c0, sign, greater):
    """Count of elements whose view value (sign*raw) exceeds (or is below)
    sign*c0, on a raw-ascending slice with distinct values."""
    pos = _bisect_slice(arr, lo, hi, c0)  # raw values < c0
    below_raw = pos - lo
    above_raw = (hi - lo) - below_raw
    if (sign > 0) == greater:
        return above_raw
    return below_raw


# ---------------------------------------------------------------------------
# per-instance easy-shape counting
# ---------------------------------------------------------------------------

@njit(cache=True)
def _split_regions(xq, yq, a, b, v2, h2, ws):
    """Region split preserving ascending-y input order; returns per-region
    counts and offsets.  Fills reg/rxs/rys/xord/xrank/xs_sorted rows."""
    s = b - a
    reg = ws[ROW_REG]
    rxs = ws[ROW_RXS]
    rys = ws[ROW_RYS]
    cnt = np.zeros(4, dtype=np.int64)
    for t in range(s):
        left = 2 * xq[a + t] < v2
        bottom = 2 * yq[a + t] < h2
        r = (0 if left else 1) + (2 if bottom else 0)
        ws[ROW_TMP, t] = r
        cnt[r] += 1
    off = np.zeros(5, dtype=np.int64)
    for r in range(4):
        off[r + 1] = off[r] + cnt[r]
    fill = off[:4].copy()
    for t in range(s):
        r = ws[ROW_TMP, t]
        p = fill[r]
        reg[p] = r
        rxs[p] = xq[a + t]
        rys[p] = yq[a + t]
        fill[r] += 1
    # per-region ascending-x order (region-local indices) and sorted coords
    xord = ws[ROW_XORD]
    xrank = ws[ROW_XRANK]
    xsort = ws[ROW_XSORT]
    for r in range(4):
        k = cnt[r]
        if k == 0:
            continue
        o = np.argsort(rxs[off[r]:off[r + 1]])
        for t in range(k):
            xord[off[r] + t] = o[t]
            xrank[off[r] + o[t]] = t
            xsort[off[r] + t] = rxs[off[r] + o[t]]
    return cnt, off


@njit(cache=True)
def _region_dominance(cnt, off, ws):
    """Raw partner counts per region into the ld/lu/rd/ru rows."""
    ld = ws[ROW_LD]
    lu = ws[ROW_LU]
    rd = ws[ROW_RD]
    ru = ws[ROW_RU]
    xrank = ws[ROW_XRANK]
    tree = ws[ROW_TREE]
    for r in range(4):
        k = cnt[r]
        if k == 0:
            continue
        base = off[r]
        tree[:k + 1] = 0
        for t in range(k):  # region slices are ascending in y
            xr = xrank[base + t]
            below_left = _fen_pref(tree[:k + 1], xr)
            ld[base + t] = below_left
            rd[base + t] = t - below_left
            lu[base + t] = xr - below_left
            ru[base + t] = (k - 1) - t - xr + below_left
            _fen_add(tree[:k + 1], xr, 1)


@njit(cache=True)
def _count_vectors(cnt, off, ws, cvec):
    """Per-region small-pattern counts: [size, c12, c21, six 3-patterns]."""
    ld = ws[ROW_LD]
    lu = ws[ROW_LU]
    rd = ws[ROW_RD]
    ru = ws[ROW_RU]
    for r in range(4):
        k = cnt[r]
        cvec[r, 0] = k
        if k == 0:
            for q in range(1, 9):
                cvec[r, q] = 0
            continue
        c12 = 0
        c21 = 0
        c123 = 0
        c321 = 0
        p_ru = 0
        p_lu = 0
        p_rd = 0
        p_ld = 0
        for t in range(off[r], off[r + 1]):
            c12 += ru[t]
            c21 += rd[t]
            c123 += ld[t] * ru[t]
            c321 += lu[t] * rd[t]
            p_ru += ru[t] * (ru[t] - 1) // 2
            p_lu += lu[t] * (lu[t] - 1) // 2
            p_rd += rd[t] * (rd[t] - 1) // 2
            p_ld += ld[t] * (ld[t] - 1) // 2
        cvec[r, 1] = c12
        cvec[r, 2] = c21
        cvec[r, 3] = c123
        cvec[r, 4] = p_ru - c123  # 132
        cvec[r, 5] = p_ld - c123  # 213
        cvec[r, 6] = p_lu - c321  # 231
        cvec[r, 7] = p_rd - c321  # 312
        cvec[r, 8] = c321


@njit(cache=True, inline="always")
def _dom_row(ws, raw_dir):
    if raw_dir == 0:
        return ws[ROW_LD]
    if raw_dir == 1:
        return ws[ROW_LU]
    if raw_dir == 2:
        return ws[ROW_RD]
    return ws[ROW_RU]


@njit(cache=True, inline="always")
def _coord_sorted_slice(ws, off, r, axis):
    """Ascending raw-coordinate array of region r on the given axis."""
    if axis == 0:
        return ws[ROW_XSORT], off[r], off[r + 1]
    return ws[ROW_RYS], off[r], off[r + 1]


@njit(cache=True)
def _easy_1102(cnt, off, ws, orient, compat, oact, active, acc):
    """All 1102-family orientations: pivot x opposite-single x pair."""
    rys = ws[ROW_RYS]
    rxs = ws[ROW_RXS]
    xord = ws[ROW_XORD]
    for o in range(orient.shape[0]):
        if not oact[o]:
            continue
        rA = orient[o, 0]
        rO = orient[o, 1]
        rP = orient[o, 2]
        kA, kO, kP = cnt[rA], cnt[rO], cnt[rP]
        if kA == 0 or kO == 0 or kP < 2:
            continue
        vx_axis = orient[o, 4]
        vx_sign = orient[o, 5]
        vy_axis = orient[o, 6]
        vy_sign = orient[o, 7]
        # view dominance = permuted raw dominance rows
        d_ld = _dom_row(ws, orient[o, 8])
        d_lu = _dom_row(ws, orient[o, 9])
        d_rd = _dom_row(ws, orient[o, 10])
        d_ru = _dom_row(ws, orient[o, 11])
        # prefix sums over ascending view-x of the pair region
        p_rd = ws[ROW_PREF1]
        p_lu = ws[ROW_PREF2]
        p_ru = ws[ROW_PREF3]
        p_ld = ws[ROW_PREF4]
        base = off[rP]
        p_rd[0] = 0
        p_lu[0] = 0
        p_ru[0] = 0
        p_ld[0] = 0
        for t in range(kP):
            if vx_axis == 0:
                raw_pos = xord[base + (t if vx_sign > 0 else kP - 1 - t)]
            else:
                raw_pos = t if vx_sign > 0 else kP - 1 - t
            idx = base + raw_pos
            p_rd[t + 1] = p_rd[t] + d_rd[idx]
            p_lu[t + 1] = p_lu[t] + d_lu[idx]
            p_ru[t + 1] = p_ru[t] + d_ru[idx]
            p_ld[t + 1] = p_ld[t] + d_ld[idx]
        tot21 = p_rd[kP]
        tot12 = p_ru[kP]
        o_arr, o_lo, o_hi = _coord_sorted_slice(ws, off, rO, vy_axis)
        p_arr, pp_lo, pp_hi = _coord_sorted_slice(ws, off, rP, vx_axis)
        t12hi = np.zeros(12, dtype=np.int64)
        t12lo = np.zeros(12, dtype=np.int64)
        for t in range(kA):
            ia = off[rA] + t
            cy0 = rxs[ia] if vy_axis == 0 else rys[ia]
            cx0 = rxs[ia] if vx_axis == 0 else rys[ia]
            oa = _count_side(o_arr, o_lo, o_hi, cy0, vy_sign, True)
            ob = kO - oa
            # pair position of the pivot in ascending view-x
            raw_below = _bisect_slice(p_arr, pp_lo, pp_hi, cx0) - pp_lo
            pos = raw_below if vx_sign > 0 else kP - raw_below
            r21 = tot21 - p_rd[pos]
            l21 = p_lu[pos]
            s21 = tot21 - r21 - l21
            r12 = tot12 - p_ru[pos]
            l12 = p_ld[pos]
            s12 = tot12 - r12 - l12
            for ai in range(2):
                fo = oa if ai == 0 else ob
                if fo == 0:
                    continue
                bidx = ai * 6
                t12lo[bidx] += fo * r21
                t12lo[bidx + 1] += fo * r12
                t12lo[bidx + 2] += fo * s21
                t12lo[bidx + 3] += fo * s12
                t12lo[bidx + 4] += fo * l21
                t12lo[bidx + 5] += fo * l12
                for q in range(bidx, bidx + 6):
                    if t12lo[q] >= (1 << 62):
                        t12hi[q] += t12lo[q] >> 62
                        t12lo[q] &= MASK62
        for si in range(24):
            v = compat[o, si]
            if v >= 0 and active[si]:
                acc[si, 0] += t12hi[v]
                _acc_add(acc, si, t12lo[v])


@njit(cache=True)
def _weighted_dom_view(cnt, off, rP, ws, w1, w2, out1, out2,
                       vx_axis, vx_sign, vy_axis, vy_sign,
                       asc_view, left_view):
    """Two weighted dominance sums over the pair region in view terms.

    asc_view: partners have smaller view-y; left_view: partners have
    smaller view-x.  w/out arrays are region-local (length kP).
    """
    kP = cnt[rP]
    base = off[rP]
    xord = ws[ROW_XORD]
    xrank = ws[ROW_XRANK]
    tree1 = ws[ROW_TREE]
    tree2 = ws[ROW_TREE2]
    tree1[:kP + 1] = 0
    tree2[:kP + 1] = 0
    seen1 = 0
    seen2 = 0
    forward = asc_view == (vy_sign > 0)
    want_small_raw = left_view == (vx_sign > 0)
    for step in range(kP):
        pos = step if forward else kP - 1 - step
        if vy_axis == 0:
            t = xord[base + pos]  # iterate ascending raw x
        else:
            t = pos               # region slices ascend in raw y
        # rank on the view-x axis in raw terms
        if vx_axis == 0:
            rr = xrank[base + t]
        else:
            rr = t
        p1 = _fen_pref(tree1[:kP + 1], rr)
        p2 = _fen_pref(tree2[:kP + 1], rr)
        if want_small_raw:
            out1[t] = p1
            out2[t] = p2
        else:
            out1[t] = seen1 - p1
            out2[t] = seen2 - p2
        _fen_add(tree1[:kP + 1], rr, w1[t])
        _fen_add(tree2[:kP + 1], rr, w2[t])
        seen1 += w1[t]
        seen2 += w2[t]


@njit(cache=True)
def _dot2_pair(a, b, k):
    hi = 0
    lo = 0
    for t in range(k):
        lo += a[t] * b[t]
        if lo >= (1 << 62):
            hi += lo >> 62
            lo &= MASK62
    return hi, lo


@njit(cache=True)
def _dot3_pair(a, b, c, k):
    hi = 0
    lo = 0
    for t in range(k):
        lo += a[t] * b[t] * c[t]
        if lo >= (1 << 62):
            hi += lo >> 62
            lo &= MASK62
    return hi, lo


@njit(cache=True)
def _easy_1201(cnt, off, ws, orient, compat, oact, active, acc):
    """All 1201-family orientations: two singles flanking a pair region."""
    rxs = ws[ROW_RXS]
    rys = ws[ROW_RYS]
    for o in range(orient.shape[0]):
        if not oact[o]:
            continue
        rQ = orient[o, 0]
        rP = orient[o, 1]
        rR = orient[o, 2]
        kQ, kP, kR = cnt[rQ], cnt[rP], cnt[rR]
        if kQ == 0 or kR == 0 or kP < 2:
            continue
        vx_axis = orient[o, 4]
        vx_sign = orient[o, 5]
        vy_axis = orient[o, 6]
        vy_sign = orient[o, 7]
        d_ld = _dom_row(ws, orient[o, 8])
        d_lu = _dom_row(ws, orient[o, 9])
        d_rd = _dom_row(ws, orient[o, 10])
        d_ru = _dom_row(ws, orient[o, 11])
        base = off[rP]
        r_arr, r_lo, r_hi = _coord_sorted_slice(ws, off, rR, vx_axis)
        q_arr, q_lo, q_hi = _coord_sorted_slice(ws, off, rQ, vy_axis)
        wB = ws[ROW_WB]
        Ga = ws[ROW_GA]
        for t in range(kP):
            cx0 = rxs[base + t] if vx_axis == 0 else rys[base + t]
            cy0 = rxs[base + t] if vy_axis == 0 else rys[base + t]
            wB[t] = _count_side(r_arr, r_lo, r_hi, cx0, vx_sign, False)
            Ga[t] = _count_side(q_arr, q_lo, q_hi, cy0, vy_sign, True)
        t18hi = np.zeros(18, dtype=np.int64)
        t18lo = np.zeros(18, dtype=np.int64)
        wd1 = ws[ROW_WD1]
        wd2 = ws[ROW_WD2]
        rank_needed = False
        for order_idx in range(2):
            needed = False
            for si in range(24):
                v = compat[o, si]
                if v >= 0 and active[si] and (v % 2) == order_idx:
                    needed = True
                    break
            if not needed:
                continue
            wA = ws[ROW_RANKV]   # reuse as a temp region-local array
            Gb = ws[ROW_TMP]
            for t in range(kP):
                wA[t] = kR - wB[t]
                Gb[t] = kQ - Ga[t]
            if order_idx == 0:
                vlu = d_lu[base:base + kP]
                vrd = d_rd[base:base + kP]
                npairs = 0
                for t in range(kP):
                    npairs += vrd[t]
                # WDrd[wA], WDrd[Gb]: partners right-down in view
                _weighted_dom_view(cnt, off, rP, ws, wA[:kP], Gb[:kP],
                                   wd1, wd2, vx_axis, vx_sign, vy_axis,
                                   vy_sign, True, False)
                d2_ = _dot3_pair(wA, Gb, vlu, kP)
                d3_ = _dot3_pair(wA, Ga, vlu, kP)
                d9_ = _dot3_pair(wB, Gb, vlu, kP)
                d1_ = _dot2_pair(Ga, wd1, kP)
                d8_ = _dot2_pair(wB, wd2, kP)
                d4_ = _dot3_pair(wB, Ga, vrd, kP)
                # WDlu[wB], WDlu[Ga]
                _weighted_dom_view(cnt, off, rP, ws, wB[:kP], Ga[:kP],
                                   wd1, wd2, vx_axis, vx_sign, vy_axis,
                                   vy_sign, False, True)
                d5_ = _dot2_pair(Gb, wd1, kP)
                d6_ = _dot2_pair(Ga, wd1, kP)
                d7_ = _dot2_pair(wB, wd2, kP)
                vals0 = d1_
                vals1 = d2_
                vals2 = _pair_normalize(d3_[0] - d1_[0], d3_[1] - d1_[1])
                vals3 = d4_
                vals4 = d5_
                vals5 = _pair_normalize(d6_[0] - d4_[0], d6_[1] - d4_[1])
                vals6 = _pair_normalize(d7_[0] - d4_[0], d7_[1] - d4_[1])
                vals7 = _pair_normalize(d9_[0] - d8_[0], d9_[1] - d8_[1])
            else:
                vld = d_ld[base:base + kP]
                vru = d_ru[base:base + kP]
                npairs = 0
                for t in range(kP):
                    npairs += vru[t]
                # WDru[wA], WDru[Ga]: partners right-up in view
                _weighted_dom_view(cnt, off, rP, ws, wA[:kP], Ga[:kP],
                                   wd1, wd2, vx_axis, vx_sign, vy_axis,
                                   vy_sign, False, False)
                d1_ = _dot3_pair(wA, Ga, vld, kP)
                d2_ = _dot2_pair(Gb, wd1, kP)
                d3_ = _dot2_pair(Ga, wd1, kP)
                d8_ = _dot2_pair(wB, wd2, kP)
                d5_ = _dot3_pair(wB, Gb, vru, kP)
                d6_ = _dot3_pair(wB, Ga, vru, kP)
                d7_ = _dot3_pair(wB, Ga, vld, kP)
                # WDld[wB], WDld[Gb]: partners left-down in view
                _weighted_dom_view(cnt, off, rP, ws, wB[:kP], Gb[:kP],
                                   wd1, wd2, vx_axis, vx_sign, vy_axis,
                                   vy_sign, True, True)
                d4_ = _dot2_pair(Ga, wd1, kP)
                d9_ = _dot2_pair(wB, wd2, kP)
                vals0 = d1_
                vals1 = d2_
                vals2 = _pair_normalize(d3_[0] - d1_[0], d3_[1] - d1_[1])
                vals3 = d4_
                vals4 = d5_
                vals5 = _pair_normalize(d6_[0] - d4_[0], d6_[1] - d4_[1])
                vals6 = _pair_normalize(d7_[0] - d8_[0], d7_[1] - d8_[1])
                vals7 = _pair_normalize(d9_[0] - d5_[0], d9_[1] - d5_[1])
            hard_hi = np.int64(0)
            hard_lo = np.int64(0)
            hard_hi, hard_lo = _pair_add_prod(hard_hi, hard_lo,
                                              kQ * kR, npairs)
            hard_hi -= (vals0[0] + vals1[0] + vals2[0] + vals3[0]
                        + vals4[0] + vals5[0] + vals6[0] + vals7[0])
            hard_lo -= vals0[1] + vals1[1]
            hard_hi, hard_lo = _pair_normalize(hard_hi, hard_lo)
            hard_lo -= vals2[1] + vals3[1]
            hard_hi, hard_lo = _pair_normalize(hard_hi, hard_lo)
            hard_lo -= vals4[1] + vals5[1]
            hard_hi, hard_lo = _pair_normalize(hard_hi, hard_lo)
            hard_lo -= vals6[1] + vals7[1]
            hard_hi, hard_lo = _pair_normalize(hard_hi, hard_lo)
            t18hi[0 + order_idx] += vals0[0]
            t18lo[0 + order_idx] += vals0[1]
            t18hi[2 + order_idx] += vals1[0]
            t18lo[2 + order_idx] += vals1[1]
            t18hi[4 + order_idx] += vals2[0]
            t18lo[4 + order_idx] += vals2[1]
            t18hi[6 + order_idx] += vals3[0]
            t18lo[6 + order_idx] += vals3[1]
            t18hi[8 + order_idx] += vals4[0]
            t18lo[8 + order_idx] += vals4[1]
            t18hi[10 + order_idx] += vals5[0]
            t18lo[10 + order_idx] += vals5[1]
            t18hi[12 + order_idx] += vals6[0]
            t18lo[12 + order_idx] += vals6[1]
            t18hi[14 + order_idx] += vals7[0]
            t18lo[14 + order_idx] += vals7[1]
            t18hi[16 + order_idx] += hard_hi
            t18lo[16 + order_idx] += hard_lo
        for si in range(24):
            v = compat[o, si]
            if v >= 0 and active[si]:
                hi, lo = _pair_normalize(t18hi[v], t18lo[v])
                acc[si, 0] += hi
                _acc_add(acc, si, lo)


@njit(cache=True)
def _easy_instance(cnt, off, ws, active,
                   prod_rows, orient1102, compat1102, oact1102,
                   orient1201, compat1201, oact1201, acc):
    cvec = np.zeros((4, 9), dtype=np.int64)
    _count_vectors(cnt, off, ws, cvec)
    for row in range(prod_rows.shape[0]):
        si = prod_rows[row, 0]
        if not active[si]:
            continue
        va = cvec[prod_rows[row, 1], prod_rows[row, 2]]
        vb = cvec[prod_rows[row, 3], prod_rows[row, 4]]
        if va > 0 and vb > 0:
            _acc_add_prod(acc, si, va, vb)
    _easy_1102(cnt, off, ws, orient1102, compat1102, oact1102, active, acc)
    _easy_1201(cnt, off, ws, orient1201, compat1201, oact1201, active, acc)


# ---------------------------------------------------------------------------
# per-instance 4-partite counting via the layered multigraph
# ---------------------------------------------------------------------------

@njit(cache=True)
def _merge_ranks(vals, off, ra, rb, use_xord, ws, out_row):
    """Coordinate rank within the union of two regions (region-major out).

    When use_xord the regions are walked in their ascending-x orders,
    otherwise in slice order (ascending y)."""
    xord = ws[ROW_XORD]
    out = ws[out_row]
    ka = off[ra + 1] - off[ra]
    kb = off[rb + 1] - off[rb]
    ia = 0
    ib = 0
    rank = 0
    while ia < ka or ib < kb:
        if ia < ka:
            pa = off[ra] + (xord[off[ra] + ia] if use_xord else ia)
        if ib < kb:
            pb = off[rb] + (xord[off[rb] + ib] if use_xord else ib)
        if ib >= kb or (ia < ka and vals[pa] < vals[pb]):
            out[pa] = rank
            ia += 1
        else:
            out[pb] = rank
            ib += 1
        rank += 1
    return rank


@njit(cache=True, inline="always")
def _tree_levels(t):
    nt = 1
    while nt < t:
        nt <<= 1
    lev = 0
    while (1 << lev) < nt:
        lev += 1
    return nt, lev


@njit(cache=True)
def _gen_buckets(cnt, off, ws, s):
    """Pattern-independent edge contributions, deduplicated per bucket.

    Bucket b = class*4 + xhalf*2 + yhalf holds the (src<<21|dst, mult)
    edges a pattern selects when its membership conditions for that
    class's region are (xhalf, yhalf).  Also returns dst-sorted copies
    for the composition joins.
    """
    reg = ws[ROW_REG]
    xrank = ws[ROW_PXRANK]
    yrank = ws[ROW_PYRANK]
    # part ranks: left/right by x, bottom/top by y
    xnt = np.zeros(2, dtype=np.int64)
    xlev = np.zeros(2, dtype=np.int64)
    ynt = np.zeros(2, dtype=np.int64)
    ylev = np.zeros(2, dtype=np.int64)
    t_sz = _merge_ranks(ws[ROW_RXS], off, 0, 2, True, ws, ROW_PXRANK)
    xnt[0], xlev[0] = _tree_levels(t_sz)
    t_sz = _merge_ranks(ws[ROW_RXS], off, 1, 3, True, ws, ROW_PXRANK)
    xnt[1], xlev[1] = _tree_levels(t_sz)
    t_sz = _merge_ranks(ws[ROW_RYS], off, 2, 3, False, ws, ROW_PYRANK)
    ynt[0], ylev[0] = _tree_levels(t_sz)
    t_sz = _merge_ranks(ws[ROW_RYS], off, 0, 1, False, ws, ROW_PYRANK)
    ynt[1], ylev[1] = _tree_levels(t_sz)
    counts = np.zeros(16, dtype=np.int64)
    for t in range(s):
        r = reg[t]
        xl = xlev[XPART[r]]
        yl = ylev[YPART[r]]
        n1x = 0
        for lx in range(1, xl + 1):
            n1x += (xrank[t] >> (lx - 1)) & 1
        n1y = 0
        for ly in range(1, yl + 1):
            n1y += (yrank[t] >> (ly - 1)) & 1
        b = CLASS_OF_REGION[r] * 4
        counts[b] += (xl - n1x) * (yl - n1y)
        counts[b + 1] += (xl - n1x) * n1y
        counts[b + 2] += n1x * (yl - n1y)
        counts[b + 3] += n1x * n1y
    offs = np.zeros(17, dtype=np.int64)
    for c in range(16):
        offs[c + 1] = offs[c] + counts[c]
    keys = np.empty(offs[16], dtype=np.int64)
    fill = offs[:16].copy()
    for t in range(s):
        r = reg[t]
        ntx = xnt[XPART[r]]
        nty = ynt[YPART[r]]
        xl = xlev[XPART[r]]
        yl = ylev[YPART[r]]
        src_x = SRC_IS_X[r]
        bbase = CLASS_OF_REGION[r] * 4
        for lx in range(1, xl + 1):
            bx = (xrank[t] >> (lx - 1)) & 1
            xnode = (ntx >> lx) + (xrank[t] >> lx)
            for ly in range(1, yl + 1):
                by = (yrank[t] >> (ly - 1)) & 1
                ynode = (nty >> ly) + (yrank[t] >> ly)
                if src_x:
                    key = (xnode << 21) | ynode
                else:
                    key = (ynode << 21) | xnode
                b = bbase + bx * 2 + by
                keys[fill[b]] = key
                fill[b] += 1
    # sort + dedupe each bucket; also build dst-major sorted copies
    dkeys = np.empty(offs[16], dtype=np.int64)
    dmult = np.empty(offs[16], dtype=np.int64)
    fkeys = np.empty(offs[16], dtype=np.int64)
    fmult = np.empty(offs[16], dtype=np.int64)
    doffs = np.zeros(17, dtype=np.int64)
    w = 0
    for b in range(16):
        seg = keys[offs[b]:offs[b + 1]]
        seg.sort()
        doffs[b] = w
        t = 0
        while t < seg.shape[0]:
            t2 = t
            while t2 < seg.shape[0] and seg[t2] == seg[t]:
                t2 += 1
            dkeys[w] = seg[t]
            dmult[w] = t2 - t
            w += 1
            t = t2
        # flipped copy sorted by (dst, src)
        for q in range(doffs[b], w):
            fkeys[q] = ((dkeys[q] & ((1 << 21) - 1)) << 21) | (dkeys[q] >> 21)
            fmult[q] = dmult[q]
        sub = fkeys[doffs[b]:w]
        o = np.argsort(sub)
        tmp_k = sub.copy()
        tmp_m = fmult[doffs[b]:w].copy()
        for q in range(w - doffs[b]):
            fkeys[doffs[b] + q] = tmp_k[o[q]]
            fmult[doffs[b] + q] = tmp_m[o[q]]
    doffs[16] = w
    return dkeys, dmult, fkeys, fmult, doffs


@njit(cache=True)
def _join_emit_count(ak, alo, ahi, bk, blo, bhi):
    """Emission size of joining dst-major a with src-major b."""
    ia = alo
    ib = blo
    emit = 0
    while ia < ahi and ib < bhi:
        qa = ak[ia] >> 21
        qb = bk[ib] >> 21
        if qa < qb:
            ia += 1
        elif qa > qb:
            ib += 1
        else:
            ea = ia
            while ea < ahi and (ak[ea] >> 21) == qa:
                ea += 1
            eb = ib
            while eb < bhi and (bk[eb] >> 21) == qb:
                eb += 1
            emit += (ea - ia) * (eb - ib)
            ia = ea
            ib = eb
    return emit


@njit(cache=True)
def _join_compose(ak, am, alo, ahi, bk, bm, blo, bhi, emit):
    """Join flipped a (key join<<21|other) with b (key join<<21|other) on
    the join node; emit (a_other << 21 | b_other) with summed products."""
    okeys = np.empty(emit, dtype=np.int64)
    ovals = np.empty(emit, dtype=np.int64)
    w = 0
    ia = alo
    ib = blo
    while ia < ahi and ib < bhi:
        qa = ak[ia] >> 21
        qb = bk[ib] >> 21
        if qa < qb:
            ia += 1
        elif qa > qb:
            ib += 1
        else:
            ea = ia
            while ea < ahi and (ak[ea] >> 21) == qa:
                ea += 1
            eb = ib
            while eb < bhi and (bk[eb] >> 21) == qb:
                eb += 1
            for u in range(ia, ea):
                p = ak[u] & ((1 << 21) - 1)
                mu = am[u]
                for v in range(ib, eb):
                    okeys[w] = (p << 21) | (bk[v] & ((1 << 21) - 1))
                    ovals[w] = mu * bm[v]
                    w += 1
            ia = ea
            ib = eb
    if w == 0:
        return okeys[:0], ovals[:0]
    o = np.argsort(okeys[:w])
    sk = okeys[:w][o]
    sv = ovals[:w][o]
    u = 0
    t = 0
    while t < w:
        t2 = t
        acc = 0
        while t2 < w and sk[t2] == sk[t]:
            acc += sv[t2]
            t2 += 1
        sk[u] = sk[t]
        sv[u] = acc
        u += 1
        t = t2
    return sk[:u], sv[:u]


@njit(cache=True)
def _compose_count(dkeys, dmult, fkeys, fmult, doffs, b0, b1, b2, b3,
                   emit1, emit2):
    """Weighted 4-cycle count from the four selected buckets by composing
    T->R->B with B->L->T paths."""
    w1k, w1v = _join_compose(fkeys, fmult, doffs[b0], doffs[b0 + 1],
                             dkeys, dmult, doffs[b1], doffs[b1 + 1], emit1)
    if w1k.shape[0] == 0:
        return 0, 0
    w2k, w2v = _join_compose(fkeys, fmult, doffs[b2], doffs[b2 + 1],
                             dkeys, dmult, doffs[b3], doffs[b3 + 1], emit2)
    if w2k.shape[0] == 0:
        return 0, 0
    # w1 keyed (t, b); w2 emitted as (b, t): flip and sort to align
    w2f = np.empty(w2k.shape[0], dtype=np.int64)
    for t in range(w2k.shape[0]):
        w2f[t] = ((w2k[t] & ((1 << 21) - 1)) << 21) | (w2k[t] >> 21)
    o = np.argsort(w2f)
    w2f = w2f[o]
    w2v = w2v[o]
    hi = 0
    lo = 0
    ia = 0
    ib = 0
    while ia < w1k.shape[0] and ib < w2f.shape[0]:
        if w1k[ia] < w2f[ib]:
            ia += 1
        elif w1k[ia] > w2f[ib]:
            ib += 1
        else:
            hi, lo = _pair_add_prod(hi, lo, w1v[ia], w2v[ib])
            ia += 1
            ib += 1
    return hi, lo


# ---------------------------------------------------------------------------
# weighted codegree counting on the undirected union (large instances)
# ---------------------------------------------------------------------------

@njit(cache=True)
def _cn_count(eu, ev, em):
    """Weighted count of 4-cycle subgraphs of an undirected multigraph.

    Nodes are processed in decreasing degree; every cycle is tallied at
    its first-processed node by pairing parallel 2-paths incrementally,
    so each cycle contributes the product of its four multiplicities
    exactly once.  Returns an accumulator pair.
    """
    m = eu.shape[0]
    if m == 0:
        return 0, 0
    flats = np.empty(2 * m, dtype=np.int64)
    flats[:m] = eu
    flats[m:] = ev
    nodes = np.unique(flats)
    nn = nodes.shape[0]
    ui = np.searchsorted(nodes, eu)
    vi = np.searchsorted(nodes, ev)
    deg = np.zeros(nn, dtype=np.int64)
    for t in range(m):
        deg[ui[t]] += 1
        deg[vi[t]] += 1
    maxdeg = 0
    for t in range(nn):
        if deg[t] > maxdeg:
            maxdeg = deg[t]
    keyord = np.empty(nn, dtype=np.int64)
    for t in range(nn):
        keyord[t] = ((maxdeg - deg[t]) << 25) | t
    order = np.argsort(keyord)
    rank = np.empty(nn, dtype=np.int64)
    for t in range(nn):
        rank[order[t]] = t
    ekeys = np.empty(2 * m, dtype=np.int64)
    emult = np.empty(2 * m, dtype=np.int64)
    for t in range(m):
        ra = rank[ui[t]]
        rb = rank[vi[t]]
        ekeys[t] = (ra << 25) | rb
        emult[t] = em[t]
        ekeys[m + t] = (rb << 25) | ra
        emult[m + t] = em[t]
    eord = np.argsort(ekeys)
    nbr = np.empty(2 * m, dtype=np.int64)
    nbm = np.empty(2 * m, dtype=np.int64)
    rowptr = np.zeros(nn + 2, dtype=np.int64)
    for t in range(2 * m):
        k = ekeys[eord[t]]
        nbr[t] = k & ((1 << 25) - 1)
        nbm[t] = emult[eord[t]]
        rowptr[(k >> 25) + 1] += 1
    for t in range(nn + 1):
        rowptr[t + 1] += rowptr[t]
    tally = np.zeros(nn, dtype=np.int64)
    mark = np.zeros(nn, dtype=np.int64)
    hi = 0
    lo = 0
    for xr in range(nn):
        stamp = xr + 1
        r1 = rowptr[xr + 1]
        a = _bisect_slice(nbr, rowptr[xr], r1, xr + 1)
        for e1 in range(a, r1):
            v = nbr[e1]
            mv = nbm[e1]
            s1 = rowptr[v + 1]
            c = _bisect_slice(nbr, rowptr[v], s1, xr + 1)
            for e2 in range(c, s1):
                w = nbr[e2]
                p = mv * nbm[e2]
                if mark[w] != stamp:
                    mark[w] = stamp
                    tally[w] = p
                else:
                    t_old = tally[w]
                    if t_old < (1 << 31) and p < (1 << 31):
                        lo += t_old * p
                        if lo >= (1 << 62):
                            hi += lo >> 62
                            lo &= MASK62
                    else:
                        hi, lo = _pair_add_prod(hi, lo, t_old, p)
                    tally[w] = t_old + p
    return hi, lo


@njit(cache=True)
def _cn_layered(dkeys, dmult, doffs, b0, b1, b2, b3):
    """Layered weighted 4-cycle count via the undirected union with two-
    and three-layer corrections, each counted by _cn_count."""
    bsel = np.array([b0, b1, b2, b3], dtype=np.int64)
    hi = 0
    lo = 0
    for mode in range(9):
        if mode == 0:
            m0, m1, m2, m3 = 1, 1, 1, 1
            sign = 1
        elif mode <= 4:
            m0 = 1 if mode - 1 == 0 else 0
            m1 = 1 if mode - 1 == 1 else 0
            m2 = 1 if mode - 1 == 2 else 0
            m3 = 1 if mode - 1 == 3 else 0
            sign = 1
        else:
            c = mode - 5
            m0 = 1 if c == 0 or (c + 1) % 4 == 0 else 0
            m1 = 1 if c == 1 or (c + 1) % 4 == 1 else 0
            m2 = 1 if c == 2 or (c + 1) % 4 == 2 else 0
            m3 = 1 if c == 3 or (c + 1) % 4 == 3 else 0
            sign = -1
        members = np.array([m0, m1, m2, m3], dtype=np.int64)
        total = 0
        for c in range(4):
            if members[c]:
                total += doffs[bsel[c] + 1] - doffs[bsel[c]]
        if total == 0:
            continue
        eu = np.empty(total, dtype=np.int64)
        ev = np.empty(total, dtype=np.int64)
        em = np.empty(total, dtype=np.int64)
        w = 0
        for c in range(4):
            if not members[c]:
                continue
            for t in range(doffs[bsel[c]], doffs[bsel[c] + 1]):
                eu[w] = (c << 21) | (dkeys[t] >> 21)
                ev[w] = ((((c + 1) % 4) << 21)) | (dkeys[t] & ((1 << 21) - 1))
                em[w] = dmult[t]
                w += 1
        chi, clo = _cn_count(eu, ev, em)
        hi += sign * chi
        lo += sign * clo
        hi, lo = _pair_normalize(hi, lo)
    return hi, lo


@njit(cache=True)
def _c4_instance(cnt, off, ws, s, active16, half_cond, acc):
    dkeys, dmult, fkeys, fmult, doffs = _gen_buckets(cnt, off, ws, s)
    if doffs[16] == 0:
        return
    for si in range(16):
        if not active16[si]:
            continue
        b0 = 0 * 4 + half_cond[si, REGION_OF_CLASS[0], 0] * 2 + half_cond[si, REGION_OF_CLASS[0], 1]
        b1 = 1 * 4 + half_cond[si, REGION_OF_CLASS[1], 0] * 2 + half_cond[si, REGION_OF_CLASS[1], 1]
        b2 = 2 * 4 + half_cond[si, REGION_OF_CLASS[2], 0] * 2 + half_cond[si, REGION_OF_CLASS[2], 1]
        b3 = 3 * 4 + half_cond[si, REGION_OF_CLASS[3], 0] * 2 + half_cond[si, REGION_OF_CLASS[3], 1]
        if (doffs[b0 + 1] == doffs[b0] or doffs[b1 + 1] == doffs[b1]
                or doffs[b2 + 1] == doffs[b2] or doffs[b3 + 1] == doffs[b3]):
            continue
        emit1 = _join_emit_count(fkeys, doffs[b0], doffs[b0 + 1],
                                 dkeys, doffs[b1], doffs[b1 + 1])
        emit2 = _join_emit_count(fkeys, doffs[b2], doffs[b2 + 1],
                                 dkeys, doffs[b3], doffs[b3 + 1])
        if emit1 == 0 or emit2 == 0:
            continue
        nedges = (doffs[b0 + 1] - doffs[b0]) + (doffs[b1 + 1] - doffs[b1]) \
            + (doffs[b2 + 1] - doffs[b2]) + (doffs[b3 + 1] - doffs[b3])
        cap = COMPOSE_EMIT_MIN
        if COMPOSE_EMIT_FACTOR * nedges > cap:
            cap = COMPOSE_EMIT_FACTOR * nedges
        if emit1 + emit2 <= cap:
            hi, lo = _compose_count(dkeys, dmult, fkeys, fmult, doffs,
                                    b0, b1, b2, b3, emit1, emit2)
        else:
            hi, lo = _cn_layered(dkeys, dmult, doffs, b0, b1, b2, b3)
        acc[si, 0] += hi
        _acc_add(acc, si, lo)


# ---------------------------------------------------------------------------
# level-pair kernel and driver
# ---------------------------------------------------------------------------

@njit(cache=True, parallel=True)
def _levelpair_kernel(xq, yq, starts, ends, i, j, maxs, active24,
                      prod_rows, orient1102, compat1102, oact1102,
                      orient1201, compat1201, oact1201,
                      want_c4, active16, half_cond, c4_small_max, nthreads):
    accs_easy = np.zeros((nthreads, 24, 2), dtype=np.int64)
    accs_c4 = np.zeros((nthreads, 16, 2), dtype=np.int64)
    nseg = starts.shape[0]
    for tid in prange(nthreads):
        ws = np.zeros((WS_ROWS, maxs + 2), dtype=np.int64)
        for sidx in range(tid, nseg, nthreads):
            a = starts[sidx]
            b = ends[sidx]
            x0 = xq[a]
            y0 = yq[a]
            v2 = (((x0 - 1) >> i) << (i + 1)) + (1 << i) + 1
            h2 = (((y0 - 1) >> j) << (j + 1)) + (1 << j) + 1
            cnt, off = _split_regions(xq, yq, a, b, v2, h2, ws)
            _region_dominance(cnt, off, ws)
            _easy_instance(cnt, off, ws, active24,
                           prod_rows, orient1102, compat1102, oact1102,
                           orient1201, compat1201, oact1201, accs_easy[tid])
            if want_c4 and (b - a) <= c4_small_max:
                _c4_instance(cnt, off, ws, b - a, active16, half_cond,
                             accs_c4[tid])
    return accs_easy, accs_c4


@njit(cache=True, parallel=True)
def _big_c4_kernel(xq, yq, a, b, v2, h2, active16, half_cond, acc):
    s = b - a
    ws = np.zeros((WS_ROWS, s + 2), dtype=np.int64)
    cnt, off = _split_regions(xq, yq, a, b, v2, h2, ws)
    dkeys, dmult, fkeys, fmult, doffs = _gen_buckets(cnt, off, ws, s)
    if doffs[16] == 0:
        return
    for si in prange(16):
        if not active16[si]:
            continue
        b0 = 0 * 4 + half_cond[si, REGION_OF_CLASS[0], 0] * 2 \
            + half_cond[si, REGION_OF_CLASS[0], 1]
        b1 = 1 * 4 + half_cond[si, REGION_OF_CLASS[1], 0] * 2 \
            + half_cond[si, REGION_OF_CLASS[1], 1]
        b2 = 2 * 4 + half_cond[si, REGION_OF_CLASS[2], 0] * 2 \
            + half_cond[si, REGION_OF_CLASS[2], 1]
        b3 = 3 * 4 + half_cond[si, REGION_OF_CLASS[3], 0] * 2 \
            + half_cond[si, REGION_OF_CLASS[3], 1]
        if (doffs[b0 + 1] == doffs[b0] or doffs[b1 + 1] == doffs[b1]
                or doffs[b2 + 1] == doffs[b2] or doffs[b3 + 1] == doffs[b3]):
            continue
        hi, lo = _cn_layered(dkeys, dmult, doffs, b0, b1, b2, b3)
        acc[si, 0] += hi
        _acc_add(acc, si, lo)


def _active_orientations(active24: np.ndarray):
    oact1102 = np.zeros(COMPAT_1102.shape[0], dtype=np.bool_)
    for o in range(COMPAT_1102.shape[0]):
        oact1102[o] = bool(np.any((COMPAT_1102[o] >= 0) & active24))
    oact1201 = np.zeros(COMPAT_1201.shape[0], dtype=np.bool_)
    for o in range(COMPAT_1201.shape[0]):
        oact1201[o] = bool(np.any((COMPAT_1201[o] >= 0) & active24))
    return oact1102, oact1201


def sweep(values: np.ndarray, active24: np.ndarray, want_c4: bool,
          active16: np.ndarray, nthreads: int = 0, c4_small_max: int = 60000):
    """Count easy shapes (and optionally 4-partite occurrences) of the
    requested patterns over every divided sub-instance with >= 4 points.

    Returns (easy_counts, fourpartite_counts) as lists of Python ints
    indexed like ALL_PATTERNS4 / NONTRIVIAL_PATTERNS.
    """
    import numba

    n = len(values)
    limit = MAX_N_FULL if want_c4 else MAX_N_EASY
    if n > limit:
        raise ValueError(
            f"fast engine supports n <= {limit} for this mode (got {n})")
    easy = [0] * 24
    four = [0] * 16
    if n < 4:
        return easy, four
    if nthreads <= 0:
        nthreads = min(numba.get_num_threads(), 8)
    n2 = 1
    levels = 0
    while n2 < n:
        n2 <<= 1
        levels += 1
    ys = np.ascontiguousarray(values, dtype=np.int64)
    xs0 = np.arange(n, dtype=np.int64)
    oact1102, oact1201 = _active_orientations(active24)
    big_queue = []
    keep_order = []
    for i in range(2, levels + 1):
        order = np.lexsort((ys, xs0 >> i))
        sx = np.ascontiguousarray(order + 1, dtype=np.int64)
        sy = np.ascontiguousarray(ys[order])
        for j in range(2, levels + 1):
            kb = ((sx - 1) >> i) * (np.int64(n2) >> j) + ((sy - 1) >> j)
            cuts = np.flatnonzero(np.diff(kb)) + 1
            starts = np.concatenate((np.array([0], dtype=np.int64), cuts))
            ends = np.concatenate((cuts, np.array([n], dtype=np.int64)))
            sizes = ends - starts
            keep = sizes >= 4
            if not keep.any():
                continue
            starts = np.ascontiguousarray(starts[keep])
            ends = np.ascontiguousarray(ends[keep])
            maxs = int((ends - starts).max())
            accs_easy, accs_c4 = _levelpair_kernel(
                sx, sy, starts, ends, i, j, maxs, active24,
                PROD_ROWS, ORIENT_1102, COMPAT_1102, oact1102,
                ORIENT_1201, COMPAT_1201, oact1201,
                want_c4, active16, HALF_COND, c4_small_max, nthreads)
            for t in range(nthreads):
                for si in range(24):
                    easy[si] += (int(accs_easy[t, si, 0]) << ACC_BASE) + int(
                        accs_easy[t, si, 1])
                for si in range(16):
                    four[si] += (int(accs_c4[t, si, 0]) << ACC_BASE) + int(
                        accs_c4[t, si, 1])
            if want_c4:
                for sidx in np.flatnonzero((ends - starts) > c4_small_max):
                    big_queue.append((sx, sy, int(starts[sidx]),
                                      int(ends[sidx]), i, j))
    for sx, sy, a, b, i, j in big_queue:
        x0 = int(sx[a])
        y0 = int(sy[a])
        v2 = (((x0 - 1) >> i) << (i + 1)) + (1 << i) + 1
        h2 = (((y0 - 1) >> j) << (j + 1)) + (1 << j) + 1
        acc = np.zeros((16, 2), dtype=np.int64)
        _big_c4_kernel(sx, sy, a, b, v2, h2, active16, HALF_COND, acc)
        for si in range(16):
            four[si] += (int(acc[si, 0]) << ACC_BASE) + int(acc[si, 1])
    return easy, four
