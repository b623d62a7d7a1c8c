"""Core domain types: permutations, patterns, plane geometry, brute oracles.

Everything downstream counts exactly, so all counts are plain Python ints
(arbitrary precision).  `brute_count_pattern` is the project-wide oracle:
a direct enumeration of index subsets that every fast path is tested
against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

Count = int

# The eight 4-patterns that never place their four points in four distinct
# quadrants.  Frozen list; test_perm re-derives it geometrically.
TRIVIAL_PATTERNS = frozenset(
    ["1234", "1243", "2134", "2143", "4321", "4312", "3421", "3412"]
)

ALL_PATTERNS4 = tuple(
    "".join(str(v) for v in p) for p in sorted(itertools.permutations(range(1, 5)))
)
PATTERN4_INDEX = {digits: i for i, digits in enumerate(ALL_PATTERNS4)}
NONTRIVIAL_PATTERNS = tuple(p for p in ALL_PATTERNS4 if p not in TRIVIAL_PATTERNS)


class NotABijectionError(ValueError):
    """Input is not a permutation of 1..n; `position` is the 1-based token."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class ParseError(ValueError):
    """Malformed token in a permutation stream; `position` is 1-based."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


def _validate_bijection(values: Sequence[int], kind: str) -> None:
    n = len(values)
    seen = bytearray(n + 1)
    for i, v in enumerate(values):
        if not 1 <= v <= n:
            raise NotABijectionError(
                f"{kind} value {v} at position {i + 1} is outside 1..{n}", i + 1
            )
        if seen[v]:
            raise NotABijectionError(
                f"duplicate {kind} value {v} at position {i + 1}", i + 1
            )
        seen[v] = 1


class Permutation:
    """A bijection on 1..n, stored as the value sequence pi(1)..pi(n)."""

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int]):
        arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                         dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("permutation values must be a flat sequence")
        _validate_bijection(arr.tolist(), "permutation")
        arr.setflags(write=False)
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, i: int) -> int:
        """Value at 1-based position i."""
        if not 1 <= i <= len(self._values):
            raise IndexError(f"position {i} out of range 1..{len(self._values)}")
        return int(self._values[i - 1])

    def __iter__(self):
        return iter(self._values.tolist())

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and np.array_equal(
            self._values, other._values
        )

    def __hash__(self) -> int:
        return hash(tuple(self._values.tolist()))

    def __repr__(self) -> str:
        return f"Permutation({self._values.tolist()})"


class Pattern:
    """A permutation of length 1..4 used as a pattern."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if not 1 <= len(vals) <= 4:
            raise ValueError(f"pattern length must be 1..4, got {len(vals)}")
        _validate_bijection(vals, "pattern")
        object.__setattr__(self, "values", vals)

    def __setattr__(self, *a):
        raise AttributeError("Pattern is immutable")

    @classmethod
    def from_digits(cls, digits: str) -> "Pattern":
        return cls(int(c) for c in digits.strip())

    @property
    def digits(self) -> str:
        return "".join(str(v) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, Pattern) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Pattern({self.digits})"


class Point(NamedTuple):
    x: int
    y: int


class PointSet:
    """Points with pairwise-distinct x and pairwise-distinct y coordinates."""

    __slots__ = ("xs", "ys")

    def __init__(self, points: Iterable[Point] | None = None,
                 xs: np.ndarray | None = None, ys: np.ndarray | None = None):
        if points is not None:
            pts = list(points)
            xs = np.asarray([p[0] for p in pts], dtype=np.int64)
            ys = np.asarray([p[1] for p in pts], dtype=np.int64)
        else:
            xs = np.asarray(xs, dtype=np.int64)
            ys = np.asarray(ys, dtype=np.int64)
        if xs.shape != ys.shape or xs.ndim != 1:
            raise ValueError("xs and ys must be flat arrays of equal length")
        if len(np.unique(xs)) != len(xs):
            raise ValueError("duplicate x coordinate in point set")
        if len(np.unique(ys)) != len(ys):
            raise ValueError("duplicate y coordinate in point set")
        order = np.argsort(xs, kind="stable")
        xs = xs[order]
        ys = ys[order]
        xs.setflags(write=False)
        ys.setflags(write=False)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    def __setattr__(self, *a):
        raise AttributeError("PointSet is immutable")

    def __len__(self) -> int:
        return len(self.xs)

    @property
    def points(self) -> list[Point]:
        return [Point(int(x), int(y)) for x, y in zip(self.xs, self.ys)]

    def to_permutation(self) -> Permutation:
        """Order-isomorphic permutation: rank of y, read in x order."""
        ranks = np.empty(len(self.ys), dtype=np.int64)
        ranks[np.argsort(self.ys, kind="stable")] = np.arange(1, len(self.ys) + 1)
        return Permutation(ranks)

    def __repr__(self) -> str:
        return f"PointSet({self.points})"


@dataclass(frozen=True)
class PlaneDivision:
    """One vertical and one horizontal splitting line.

    Coordinates are stored doubled (`v2 = 2*v`, `h2 = 2*h`) so half-integer
    lines that pass strictly between integer coordinates stay exact.
    """

    v2: int
    h2: int

    @classmethod
    def at(cls, v: float, h: float) -> "PlaneDivision":
        v2, h2 = round(2 * v), round(2 * h)
        if v2 != 2 * v or h2 != 2 * h:
            raise ValueError("division lines must lie on half-integer coordinates")
        return cls(int(v2), int(h2))

    def side_x(self, x: int) -> int:
        """0 if x is left of the vertical line, 1 if right; error if on it."""
        if 2 * x == self.v2:
            raise ValueError(f"point with x={x} lies on the vertical line")
        return 0 if 2 * x < self.v2 else 1

    def side_y(self, y: int) -> int:
        """0 if y is below the horizontal line, 1 if above; error if on it."""
        if 2 * y == self.h2:
            raise ValueError(f"point with y={y} lies on the horizontal line")
        return 0 if 2 * y < self.h2 else 1

    def region_of(self, x: int, y: int) -> int:
        """Region code: 0=TL, 1=TR, 2=BL, 3=BR."""
        return self.side_x(x) + (0 if self.side_y(y) == 1 else 2)


REGION_TL, REGION_TR, REGION_BL, REGION_BR = 0, 1, 2, 3
REGION_NAMES = ("TL", "TR", "BL", "BR")


class Shape(NamedTuple):
    """Per-region point counts (tl, tr, bl, br) of a 4-point quadruple."""

    tl: int
    tr: int
    bl: int
    br: int

    @property
    def is_proper(self) -> bool:
        # both lines must actually separate the four points
        return (
            self.tl + self.tr >= 1
            and self.bl + self.br >= 1
            and self.tl + self.bl >= 1
            and self.tr + self.br >= 1
        )

    def validate(self) -> "Shape":
        if any(c < 0 for c in self) or sum(self) != 4:
            raise ValueError(f"not a 4-point shape: {self}")
        return self


def parse_permutation(text: str) -> Permutation:
    """Parse whitespace-separated 1-indexed values into a Permutation."""
    tokens = text.split()
    values = []
    for i, tok in enumerate(tokens):
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"token {i + 1} ({tok!r}) is not an integer", i + 1)
    return Permutation(values)


def points_of(perm: Permutation) -> PointSet:
    """The plane representation {(i, pi(i))}, in ascending x order."""
    n = len(perm)
    return PointSet(xs=np.arange(1, n + 1, dtype=np.int64), ys=perm.values.copy())


def classify_pattern(p: Pattern) -> str:
    """'trivial' or 'non-trivial' for a 4-pattern."""
    if len(p) != 4:
        raise ValueError("classification applies to 4-patterns only")
    return "trivial" if p.digits in TRIVIAL_PATTERNS else "non-trivial"


def pattern_of_values(values: Sequence[int]) -> Pattern:
    """Order-isomorphic pattern of a value sequence with distinct entries."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0] * len(values)
    for r, i in enumerate(order):
        ranks[i] = r + 1
    return Pattern(ranks)


# 6-bit comparison code of a value quadruple -> index into ALL_PATTERNS4
_CODE_TO_PATTERN4 = np.full(64, -1, dtype=np.int64)
for _i, _digits in enumerate(ALL_PATTERNS4):
    _v = [int(c) for c in _digits]
    _code = (
        (_v[0] < _v[1])
        | ((_v[0] < _v[2]) << 1)
        | ((_v[0] < _v[3]) << 2)
        | ((_v[1] < _v[2]) << 3)
        | ((_v[1] < _v[3]) << 4)
        | ((_v[2] < _v[3]) << 5)
    )
    _CODE_TO_PATTERN4[_code] = _i

_COMB4_CACHE: dict[int, np.ndarray] = {}


def _combinations4(n: int) -> np.ndarray:
    """All C(n,4) index quadruples as an (m, 4) int32 array (cached)."""
    if n not in _COMB4_CACHE:
        idx = np.fromiter(
            (i for c in itertools.combinations(range(n), 4) for i in c),
            dtype=np.int32,
        ).reshape(-1, 4)
        if n <= 256:
            _COMB4_CACHE[n] = idx
        else:
            return idx
    return _COMB4_CACHE[n]


def _quadruple_pattern_codes(values: np.ndarray) -> np.ndarray:
    """Pattern index (into ALL_PATTERNS4) for every index quadruple."""
    n = len(values)
    idx = _combinations4(n)
    a = values[idx[:, 0]]
    b = values[idx[:, 1]]
    c = values[idx[:, 2]]
    d = values[idx[:, 3]]
    code = (
        (a < b).astype(np.int64)
        | ((a < c).astype(np.int64) << 1)
        | ((a < d).astype(np.int64) << 2)
        | ((b < c).astype(np.int64) << 3)
        | ((b < d).astype(np.int64) << 4)
        | ((c < d).astype(np.int64) << 5)
    )
    return _CODE_TO_PATTERN4[code]


def brute_profile4(perm: Permutation) -> dict[str, Count]:
    """Oracle 4-profile: enumerate all C(n,4) quadruples directly."""
    counts = {digits: 0 for digits in ALL_PATTERNS4}
    if len(perm) >= 4:
        codes = _quadruple_pattern_codes(perm.values)
        tally = np.bincount(codes, minlength=24)
        for i, digits in enumerate(ALL_PATTERNS4):
            counts[digits] = int(tally[i])
    return counts


def brute_count_pattern(perm: Permutation, p: Pattern) -> Count:
    """Exhaustive pattern count over all C(n,k) index subsets (the oracle)."""
    n, k = len(perm), len(p)
    if n < k:
        return 0
    if k == 4:
        return brute_profile4(perm)[p.digits]
    values = perm.values.tolist()
    target = p.values
    count = 0
    for combo in itertools.combinations(values, k):
        if pattern_of_values(combo).values == target:
            count += 1
    return count


def shape_of(points: Sequence[Point], div: PlaneDivision) -> Shape:
    """Per-region tally of exactly four points under a division."""
    if len(points) != 4:
        raise ValueError("shape_of takes exactly four points")
    counts = [0, 0, 0, 0]
    for x, y in points:
        counts[div.region_of(x, y)] += 1
    return Shape(*counts).validate()


def brute_shape_profile(ps: PointSet, div: PlaneDivision) -> dict[tuple, np.ndarray]:
    """Oracle: per-shape 24-vectors of pattern counts for a divided instance.

    Returns a map shape-tuple -> array of 24 counts (indexed like
    ALL_PATTERNS4).  Enumerates all quadruples once.
    """
    out: dict[tuple, np.ndarray] = {}
    s = len(ps)
    if s < 4:
        return out
    sides_x = np.where(2 * ps.xs < div.v2, 0, 1)
    sides_y = np.where(2 * ps.ys < div.h2, 0, 1)
    if np.any(2 * ps.xs == div.v2) or np.any(2 * ps.ys == div.h2):
        raise ValueError("a point lies on a division line")
    region = sides_x + np.where(sides_y == 1, 0, 2)
    pat = _quadruple_pattern_codes(ps.ys)
    idx = _combinations4(s)
    reg = region[idx]
    shape_code = np.zeros(len(idx), dtype=np.int64)
    for r in range(4):
        shape_code += (reg == r).sum(axis=1) << (3 * r)
    combined = shape_code * 24 + pat
    tallies = np.bincount(combined, minlength=0)
    for flat in np.flatnonzero(tallies):
        sc, pi = divmod(int(flat), 24)
        shape = Shape(sc & 7, (sc >> 3) & 7, (sc >> 6) & 7, (sc >> 9) & 7)
        vec = out.setdefault(tuple(shape), np.zeros(24, dtype=object))
        vec[pi] += int(tallies[flat])
    return out


def brute_count_shape(ps: PointSet, div: PlaneDivision, p: Pattern,
                      shape: Shape) -> Count:
    """Oracle: occurrences of p in ps forming exactly `shape` under div."""
    table = brute_shape_profile(ps, div)
    vec = table.get(tuple(shape))
    if vec is None:
        return 0
    return int(vec[PATTERN4_INDEX[p.digits]])
