# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels. Same API as ``_fallback``."""

import numpy as np

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def _as_u64(values):
    return np.array([int(v) for v in values], dtype=np.uint64)


def z4_swe_counts(odd_lo, odd_hi, even_basis, int n):
    """Histogram over (n1+n3, n2) of every word odd_part + 2*span(even_basis).

    Words are given as bit masks: lo holds the odd coordinates, hi the 2-bit.
    """
    if n > 64:
        raise ValueError("kernel supports lengths up to 64")
    cdef uint64_t[::1] los = _as_u64(odd_lo)
    cdef uint64_t[::1] his = _as_u64(odd_hi)
    cdef uint64_t[::1] basis = _as_u64(even_basis)
    cdef int d = basis.shape[0]
    if d > 62:
        raise ValueError("even basis too large")
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    cdef int64_t[:, ::1] hist = out
    cdef uint64_t mask = (<uint64_t>0xFFFFFFFFFFFFFFFF) >> (64 - n)
    cdef uint64_t total = (<uint64_t>1) << d
    cdef uint64_t step, x, nlo
    cdef int j, p
    cdef Py_ssize_t t
    with nogil:
        for t in range(los.shape[0]):
            nlo = (~los[t]) & mask
            j = __builtin_popcountll(los[t])
            x = his[t]
            hist[j, __builtin_popcountll(x & nlo)] += 1
            for step in range(1, total):
                x ^= basis[__builtin_ctzll(step)]
                hist[j, __builtin_popcountll(x & nlo)] += 1
    return out


def binary_weight_counts(basis_rows, int n):
    """Weight distribution of the binary span of ``basis_rows`` (length <= 64)."""
    if n > 64:
        raise ValueError("kernel supports lengths up to 64")
    cdef uint64_t[::1] basis = _as_u64(basis_rows)
    cdef int d = basis.shape[0]
    if d > 62:
        raise ValueError("basis too large")
    out = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] hist = out
    cdef uint64_t total = (<uint64_t>1) << d
    cdef uint64_t step, x = 0
    with nogil:
        hist[0] += 1
        for step in range(1, total):
            x ^= basis[__builtin_ctzll(step)]
            hist[__builtin_popcountll(x)] += 1
    return out
