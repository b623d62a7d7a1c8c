"""Exact reductions over int64 arrays.

Counts in this project routinely exceed 64 bits (C(n,4) passes 2**63 near
n = 56000), while the vectorized and jitted code paths work in int64.  The
helpers here bridge the two worlds: sums and dot products of int64 arrays
are computed exactly as Python ints by splitting values into 21-bit limbs
so that every numpy partial sum stays below 2**63.
"""

from __future__ import annotations

import numpy as np

LIMB_BITS = 21
LIMB_MASK = (1 << LIMB_BITS) - 1

# base used by the jitted kernels for their (hi, lo) accumulator pairs
ACC_BASE_BITS = 62


def exact_sum(a: np.ndarray) -> int:
    """Exact sum of a non-negative int64 array as a Python int."""
    if a.size == 0:
        return 0
    if a.min() < 0:
        raise ValueError("exact_sum requires non-negative values")
    total = 0
    shift = 0
    rest = a
    while True:
        limb = rest & LIMB_MASK
        total += int(limb.sum(dtype=np.int64)) << shift
        rest = rest >> LIMB_BITS
        shift += LIMB_BITS
        if not rest.any():
            return total


def exact_dot(a: np.ndarray, b: np.ndarray) -> int:
    """Exact dot product of two non-negative int64 arrays.

    Partial dots of 21-bit limbs over up to 2**21 elements stay below
    2**63; longer arrays are chunked.
    """
    if a.shape != b.shape:
        raise ValueError("shape mismatch")
    if a.size == 0:
        return 0
    if a.min() < 0 or b.min() < 0:
        raise ValueError("exact_dot requires non-negative values")
    total = 0
    chunk = 1 << 20
    for lo in range(0, a.size, chunk):
        total += _exact_dot_chunk(a[lo:lo + chunk], b[lo:lo + chunk])
    return total


def _exact_dot_chunk(a: np.ndarray, b: np.ndarray) -> int:
    a_limbs = []
    shift = 0
    rest = a
    while True:
        a_limbs.append((rest & LIMB_MASK, shift))
        rest = rest >> LIMB_BITS
        shift += LIMB_BITS
        if not rest.any():
            break
    total = 0
    rest = b
    shift_b = 0
    while True:
        limb_b = rest & LIMB_MASK
        for limb_a, shift_a in a_limbs:
            total += int(np.dot(limb_a, limb_b)) << (shift_a + shift_b)
        rest = rest >> LIMB_BITS
        shift_b += LIMB_BITS
        if not rest.any():
            return total


def combine_acc(acc: np.ndarray) -> int:
    """Rebuild a Python int from a kernel accumulator pair [hi, lo].

    Kernels accumulate in base 2**62: value = hi * 2**62 + lo.
    """
    return (int(acc[0]) << ACC_BASE_BITS) + int(acc[1])
