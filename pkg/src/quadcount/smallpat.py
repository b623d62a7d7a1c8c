"""Counting patterns of length 1..3 in O(n log n), plus the per-element
dominance machinery shared with shape counting.

Only two length-3 code paths exist (123 and 132); the other four patterns
are transported onto them by reversing positions and/or complementing
values.  All counts are exact Python ints.
"""

from __future__ import annotations

import numpy as np

from ._exact import exact_dot, exact_sum
from .perm import Count, Pattern, Permutation

# pattern digits -> (canonical digits, input transforms preserving the count)
SYMMETRY_TABLE: dict[str, tuple[str, tuple[str, ...]]] = {
    "1": ("1", ()),
    "12": ("12", ()),
    "21": ("12", ("reverse",)),
    "123": ("123", ()),
    "132": ("132", ()),
    "321": ("123", ("complement",)),
    "231": ("132", ("reverse",)),
    "312": ("132", ("complement",)),
    "213": ("132", ("reverse", "complement")),
}


def left_smaller_counts(ys: np.ndarray) -> np.ndarray:
    """For each i: #{j < i : ys[j] < ys[i]} (distinct values assumed).

    Bottom-up merge counting: at each level, all right blocks are located
    inside their left blocks with one vectorized searchsorted over
    block-offset-shifted keys.
    """
    n = len(ys)
    counts = np.zeros(n, dtype=np.int64)
    if n < 2:
        return counts
    ys = np.asarray(ys, dtype=np.int64)
    # rank-compress so offset keys never overflow
    ranks = np.empty(n, dtype=np.int64)
    ranks[np.argsort(ys, kind="stable")] = np.arange(n, dtype=np.int64)
    span = n + 1
    positions = np.arange(n, dtype=np.int64)
    order = positions.copy()  # contiguous blocks, each sorted by value
    block = 1
    while block < n:
        pair = 2 * block
        nstarts = (n + pair - 1) // pair
        starts = np.arange(nstarts, dtype=np.int64) * pair
        lcount = np.minimum(block, n - starts)
        rcount = np.clip(n - starts - block, 0, block)
        pair_id = positions // pair
        keys = pair_id * span + ranks[order]
        in_left = (positions % pair) < block
        left_keys = keys[in_left]
        right_keys = keys[~in_left]
        left_off = np.concatenate(([0], np.cumsum(lcount)))
        right_off = np.concatenate(([0], np.cumsum(rcount)))
        pair_of_left = np.repeat(np.arange(nstarts, dtype=np.int64), lcount)
        pair_of_right = np.repeat(np.arange(nstarts, dtype=np.int64), rcount)
        # per right element: number of smaller elements in its left block
        pos_r = np.searchsorted(left_keys, right_keys, side="left")
        smaller_left = pos_r - left_off[pair_of_right]
        counts[order[~in_left]] += smaller_left
        # interleave the two halves into the next level's sorted blocks
        pos_l = np.searchsorted(right_keys, left_keys, side="left")
        smaller_right = pos_l - right_off[pair_of_left]
        left_rank = np.arange(len(left_keys), dtype=np.int64) - left_off[pair_of_left]
        right_rank = np.arange(len(right_keys), dtype=np.int64) - right_off[pair_of_right]
        merged = np.empty(n, dtype=np.int64)
        merged[starts[pair_of_left] + left_rank + smaller_right] = order[in_left]
        merged[starts[pair_of_right] + right_rank + smaller_left] = order[~in_left]
        order = merged
        block = pair
    return counts


def dominance_counts(ys: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per-element quadrant partner counts (ld, lu, rd, ru).

    `ys` is the y sequence in ascending-x order with distinct values.
    ld[i] counts partners left of and below element i, and so on.
    """
    ys = np.asarray(ys, dtype=np.int64)
    n = len(ys)
    ld = left_smaller_counts(ys)
    left = np.arange(n, dtype=np.int64)
    below = np.empty(n, dtype=np.int64)
    below[np.argsort(ys, kind="stable")] = np.arange(n, dtype=np.int64)
    lu = left - ld
    rd = below - ld
    ru = n - 1 - left - below + ld
    return ld, lu, rd, ru


def pair_counts(ys: np.ndarray) -> tuple[Count, Count]:
    """(#12, #21) over a sequence in x order."""
    _, _, rd, ru = dominance_counts(ys)
    return exact_sum(ru), exact_sum(rd)


def count3_all(ys: np.ndarray) -> dict[str, Count]:
    """All six 3-pattern counts of a sequence in x order, exact."""
    ld, lu, rd, ru = dominance_counts(ys)
    c123 = exact_dot(ld, ru)
    c321 = exact_dot(lu, rd)
    c132 = exact_sum(ru * (ru - 1) // 2) - c123
    c231 = exact_sum(lu * (lu - 1) // 2) - c321
    c312 = exact_sum(rd * (rd - 1) // 2) - c321
    c213 = exact_sum(ld * (ld - 1) // 2) - c123
    return {"123": c123, "132": c132, "213": c213,
            "231": c231, "312": c312, "321": c321}


def symmetry_closure(p: Pattern) -> tuple[Pattern, tuple[str, ...]]:
    """Canonical pattern in {1, 12, 123, 132} and the input transforms
    (applied to the permutation) under which counting is preserved."""
    if len(p) > 3:
        raise ValueError("symmetry closure applies to patterns of length <= 3")
    canonical, transforms = SYMMETRY_TABLE[p.digits]
    return Pattern.from_digits(canonical), transforms


def apply_transforms(values: np.ndarray, transforms: tuple[str, ...]) -> np.ndarray:
    out = np.asarray(values, dtype=np.int64)
    n = len(out)
    for t in transforms:
        if t == "reverse":
            out = out[::-1]
        elif t == "complement":
            out = (n + 1) - out
        else:
            raise ValueError(f"unknown transform {t}")
    return out


def count_small_pattern(perm: Permutation, p: Pattern) -> Count:
    """Exact count of a pattern of length 1..3 in O(n log n)."""
    if len(p) >= 4:
        raise ValueError("count_small_pattern handles lengths 1..3 only")
    n = len(perm)
    if n < len(p):
        return 0
    canonical, transforms = symmetry_closure(p)
    ys = apply_transforms(perm.values, transforms)
    if canonical.digits == "1":
        return n
    if canonical.digits == "12":
        _, _, _, ru = dominance_counts(ys)
        return exact_sum(ru)
    if canonical.digits == "123":
        ld, _, _, ru = dominance_counts(ys)
        return exact_dot(ld, ru)
    # canonical 132
    ld, _, _, ru = dominance_counts(ys)
    c123 = exact_dot(ld, ru)
    return exact_sum(ru * (ru - 1) // 2) - c123


class Fenwick:
    """Prefix-sum tree with exact Python-int values."""

    __slots__ = ("n", "tree")

    def __init__(self, n: int):
        self.n = n
        self.tree = [0] * (n + 1)

    def add(self, i: int, delta: int) -> None:
        i += 1
        while i <= self.n:
            self.tree[i] += delta
            i += i & (-i)

    def prefix(self, count: int) -> int:
        """Sum of the first `count` slots."""
        total = 0
        i = count
        while i > 0:
            total += self.tree[i]
            i -= i & (-i)
        return total


def weighted_dominance(ys: np.ndarray, weights, direction: str) -> list:
    """For each element i (in x order): sum of `weights[j]` over partners j
    in the given quadrant direction of i ('ld', 'lu', 'rd', 'ru').  Exact."""
    n = len(ys)
    ranks = np.empty(n, dtype=np.int64)
    ranks[np.argsort(ys, kind="stable")] = np.arange(n, dtype=np.int64)
    out = [0] * n
    fw = Fenwick(n)
    if direction in ("ld", "lu"):
        indices = range(n)  # sweep left to right, partners are to the left
    else:
        indices = range(n - 1, -1, -1)
    for i in indices:
        r = int(ranks[i])
        below = fw.prefix(r)
        if direction in ("ld", "rd"):
            out[i] = below
        else:
            out[i] = fw.prefix(n) - below
        fw.add(r, int(weights[i]))
    return out


def weighted_pair_count(ys: np.ndarray, w_first, w_second, pattern: str) -> Count:
    """Sum of w_first[i]*w_second[j] over pairs i<j forming 12 or 21."""
    if pattern not in ("12", "21"):
        raise ValueError("pattern must be '12' or '21'")
    direction = "lu" if pattern == "21" else "ld"
    partial = weighted_dominance(ys, w_first, direction)
    return sum(int(w_second[j]) * partial[j] for j in range(len(ys)))
