"""Pure numpy versions of the enumeration kernels in ``_kernels.pyx``."""

import numpy as np

_CHUNK_BITS = 16


def _span(basis: list[int]) -> np.ndarray:
    span = np.zeros(1, dtype=np.uint64)
    for b in basis:
        span = np.concatenate([span, span ^ np.uint64(b)])
    return span


def _gray_offsets(basis: list[int]):
    """Yield the XOR of basis elements along a Gray-code walk, starting at 0."""
    x = 0
    yield x
    for step in range(1, 1 << len(basis)):
        x ^= basis[(step & -step).bit_length() - 1]
        yield x


def z4_swe_counts(odd_lo, odd_hi, even_basis, n):
    if n > 64:
        raise ValueError("kernel supports lengths up to 64")
    even_basis = [int(b) for b in even_basis]
    low, high = even_basis[:_CHUNK_BITS], even_basis[_CHUNK_BITS:]
    span = _span(low)
    mask = (1 << n) - 1
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    for lo, hi in zip(odd_lo, odd_hi):
        lo, hi = int(lo), int(hi)
        j = bin(lo).count("1")
        nlo = np.uint64(~lo & mask)
        for off in _gray_offsets(high):
            k = np.bitwise_count((span ^ np.uint64(hi ^ off)) & nlo)
            out[j] += np.bincount(k, minlength=n + 1)
    return out


def binary_weight_counts(basis_rows, n):
    if n > 64:
        raise ValueError("kernel supports lengths up to 64")
    basis = [int(b) for b in basis_rows]
    low, high = basis[:_CHUNK_BITS], basis[_CHUNK_BITS:]
    span = _span(low)
    out = np.zeros(n + 1, dtype=np.int64)
    for off in _gray_offsets(high):
        out += np.bincount(np.bitwise_count(span ^ np.uint64(off)), minlength=n + 1)
    return out
