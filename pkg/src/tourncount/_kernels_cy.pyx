# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bit-row popcount loops for edge sums and subset scans.

Mirrors the interface of `_kernels_py`; rows arrive as Python ints and are
packed into a little-endian uint64 word matrix before the C loops run.
"""

from libc.stdint cimport int64_t, uint64_t

import numpy as np

BACKEND_NAME = "cython"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define TC_POPCNT64(x) __builtin_popcountll(x)
    #else
    static int TC_POPCNT64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    #endif
    """
    int TC_POPCNT64(uint64_t x) nogil


def _pack(rows, int n):
    """Rows (Python int bitmasks) -> (n, words) uint64 matrix."""
    cdef Py_ssize_t words = max(1, (n + 63) >> 6)
    if n == 0:
        return np.zeros((1, words), dtype=np.uint64), words
    buf = b"".join(r.to_bytes(words * 8, "little") for r in rows)
    arr = np.frombuffer(buf, dtype="<u8").astype(np.uint64).reshape(n, words)
    return arr, words


cdef inline unsigned int _bit(const uint64_t[:, ::1] m, int u, int v) nogil:
    return <unsigned int>((m[u, v >> 6] >> (v & 63)) & 1)


def edge_sums(rows, int n):
    """Per-arc score sums feeding the exact 5-cycle formula; see the pure
    backend for the definition.  Accumulators are int64; fine up to the
    documented n <= 4096 cap (the total is below n^5 < 2^63)."""
    if n < 2:
        return 0, 0
    arr, words = _pack(rows, n)
    cdef const uint64_t[:, ::1] m = arr
    cdef Py_ssize_t nwords = words
    cdef Py_ssize_t w
    cdef int u, v
    cdef int64_t a, b, c, d, ab, cd
    cdef int64_t s1 = 0, s2 = 0
    cdef uint64_t mu, mv
    with nogil:
        for u in range(n):
            for v in range(n):
                if v == u or not _bit(m, u, v):
                    continue
                a = 0
                c = 0
                d = 0
                for w in range(nwords):
                    mu = m[u, w]
                    mv = m[v, w]
                    a += TC_POPCNT64(mu & mv)
                    c += TC_POPCNT64(mu & ~mv)
                    d += TC_POPCNT64(mv & ~mu)
                c -= 1  # drop v itself: v is in row u, not in row v
                b = n - 2 - a - c - d
                ab = a + b
                cd = c + d
                s1 += cd * (a - b) * (a - b) + ab * (c - d) * (c - d)
                s2 += ab * cd
    return int(s1), int(s2)


cdef int64_t _sum3(const uint64_t[:, ::1] m, int n, const int64_t[::1] tab) nogil:
    cdef int a, b, c
    cdef unsigned int p1
    cdef int64_t total = 0
    for a in range(n - 2):
        for b in range(a + 1, n - 1):
            p1 = _bit(m, a, b)
            for c in range(b + 1, n):
                total += tab[p1 | (_bit(m, a, c) << 1) | (_bit(m, b, c) << 2)]
    return total


cdef int64_t _sum4(const uint64_t[:, ::1] m, int n, const int64_t[::1] tab) nogil:
    cdef int a, b, c, d
    cdef unsigned int p1, p2
    cdef int64_t total = 0
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            p1 = _bit(m, a, b)
            for c in range(b + 1, n - 1):
                p2 = p1 | (_bit(m, a, c) << 1) | (_bit(m, b, c) << 3)
                for d in range(c + 1, n):
                    total += tab[
                        p2
                        | (_bit(m, a, d) << 2)
                        | (_bit(m, b, d) << 4)
                        | (_bit(m, c, d) << 5)
                    ]
    return total


cdef int64_t _sum5(const uint64_t[:, ::1] m, int n, const int64_t[::1] tab) nogil:
    cdef int a, b, c, d, e
    cdef unsigned int p1, p2, p3
    cdef int64_t total = 0
    for a in range(n - 4):
        for b in range(a + 1, n - 3):
            p1 = _bit(m, a, b)
            for c in range(b + 1, n - 2):
                p2 = p1 | (_bit(m, a, c) << 1) | (_bit(m, b, c) << 4)
                for d in range(c + 1, n - 1):
                    p3 = (
                        p2
                        | (_bit(m, a, d) << 2)
                        | (_bit(m, b, d) << 5)
                        | (_bit(m, c, d) << 7)
                    )
                    for e in range(d + 1, n):
                        total += tab[
                            p3
                            | (_bit(m, a, e) << 3)
                            | (_bit(m, b, e) << 6)
                            | (_bit(m, c, e) << 8)
                            | (_bit(m, d, e) << 9)
                        ]
    return total


def subset_table_sum(rows, int n, int k, table):
    """Sum table[pattern(S)] over all k-subsets S, for k in {3, 4, 5}."""
    if k < 3 or k > 5:
        raise ValueError(f"subset_table_sum supports k in {{3,4,5}}, got {k}")
    if n < k:
        return 0
    tab_arr = np.asarray(table, dtype=np.int64)
    arr, words = _pack(rows, n)
    cdef const uint64_t[:, ::1] m = arr
    cdef const int64_t[::1] tab = tab_arr
    cdef int64_t total
    if k == 3:
        with nogil:
            total = _sum3(m, n, tab)
    elif k == 4:
        with nogil:
            total = _sum4(m, n, tab)
    else:
        with nogil:
            total = _sum5(m, n, tab)
    return int(total)


def label_histogram5(rows, int n, labels, int nlabels):
    """Histogram of labels[pattern(S)] over all 5-subsets S."""
    out_arr = np.zeros(nlabels, dtype=np.int64)
    if n < 5:
        return [0] * nlabels
    lab_arr = np.asarray(labels, dtype=np.int32)
    arr, words = _pack(rows, n)
    cdef const uint64_t[:, ::1] m = arr
    cdef const int[::1] lab = lab_arr
    cdef int64_t[::1] out = out_arr
    cdef int a, b, c, d, e
    cdef unsigned int p1, p2, p3
    with nogil:
        for a in range(n - 4):
            for b in range(a + 1, n - 3):
                p1 = _bit(m, a, b)
                for c in range(b + 1, n - 2):
                    p2 = p1 | (_bit(m, a, c) << 1) | (_bit(m, b, c) << 4)
                    for d in range(c + 1, n - 1):
                        p3 = (
                            p2
                            | (_bit(m, a, d) << 2)
                            | (_bit(m, b, d) << 5)
                            | (_bit(m, c, d) << 7)
                        )
                        for e in range(d + 1, n):
                            out[
                                lab[
                                    p3
                                    | (_bit(m, a, e) << 3)
                                    | (_bit(m, b, e) << 6)
                                    | (_bit(m, c, e) << 8)
                                    | (_bit(m, d, e) << 9)
                                ]
                            ] += 1
    return [int(x) for x in out_arr]
