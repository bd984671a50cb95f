"""Pure-Python kernels: the fallback backend.

Same interface as the compiled module `_kernels_cy`; all loops work on
out-neighbor bitmasks (Python ints) and rely on int.bit_count.  Correct for
any size, but expect the compiled backend to be one to two orders of
magnitude faster on large subset scans (see benchmarks/bench_kernels.py).
"""

BACKEND_NAME = "python"


def edge_sums(rows, n):
    """Per-arc score sums feeding the exact 5-cycle formula.

    For each arc u -> v with score (a, b, c, d) accumulates
      s1 += (c+d)*(a-b)^2 + (a+b)*(c-d)^2
      s2 += (a+b)*(c+d)
    and returns (s1, s2).
    """
    if n < 2:
        return 0, 0
    s1 = 0
    s2 = 0
    for u in range(n):
        ru = rows[u]
        rest = ru
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            rv = rows[v]
            a = (ru & rv).bit_count()
            c = (ru & ~rv).bit_count() - 1  # drop v itself: v is in ru, not rv
            d = (rv & ~ru).bit_count()
            b = n - 2 - a - c - d
            ab = a + b
            cd = c + d
            s1 += cd * (a - b) ** 2 + ab * (c - d) ** 2
            s2 += ab * cd
    return s1, s2


def subset_table_sum(rows, n, k, table):
    """Sum table[pattern(S)] over all k-subsets S, for k in {3, 4, 5}."""
    if k < 3 or k > 5:
        raise ValueError(f"subset_table_sum supports k in {{3,4,5}}, got {k}")
    if n < k:
        return 0
    total = 0
    if k == 3:
        for a in range(n - 2):
            ra = rows[a]
            for b in range(a + 1, n - 1):
                rb = rows[b]
                p1 = (ra >> b) & 1
                for c in range(b + 1, n):
                    total += table[
                        p1 | (((ra >> c) & 1) << 1) | (((rb >> c) & 1) << 2)
                    ]
    elif k == 4:
        for a in range(n - 3):
            ra = rows[a]
            for b in range(a + 1, n - 2):
                rb = rows[b]
                p1 = (ra >> b) & 1
                for c in range(b + 1, n - 1):
                    rc = rows[c]
                    p2 = p1 | (((ra >> c) & 1) << 1) | (((rb >> c) & 1) << 3)
                    for d in range(c + 1, n):
                        total += table[
                            p2
                            | (((ra >> d) & 1) << 2)
                            | (((rb >> d) & 1) << 4)
                            | (((rc >> d) & 1) << 5)
                        ]
    elif k == 5:
        for a in range(n - 4):
            ra = rows[a]
            for b in range(a + 1, n - 3):
                rb = rows[b]
                p1 = (ra >> b) & 1
                for c in range(b + 1, n - 2):
                    rc = rows[c]
                    p2 = p1 | (((ra >> c) & 1) << 1) | (((rb >> c) & 1) << 4)
                    for d in range(c + 1, n - 1):
                        rd = rows[d]
                        p3 = (
                            p2
                            | (((ra >> d) & 1) << 2)
                            | (((rb >> d) & 1) << 5)
                            | (((rc >> d) & 1) << 7)
                        )
                        for e in range(d + 1, n):
                            total += table[
                                p3
                                | (((ra >> e) & 1) << 3)
                                | (((rb >> e) & 1) << 6)
                                | (((rc >> e) & 1) << 8)
                                | (((rd >> e) & 1) << 9)
                            ]
    return total


def label_histogram5(rows, n, labels, nlabels):
    """Histogram of labels[pattern(S)] over all 5-subsets S."""
    out = [0] * nlabels
    if n < 5:
        return out
    for a in range(n - 4):
        ra = rows[a]
        for b in range(a + 1, n - 3):
            rb = rows[b]
            p1 = (ra >> b) & 1
            for c in range(b + 1, n - 2):
                rc = rows[c]
                p2 = p1 | (((ra >> c) & 1) << 1) | (((rb >> c) & 1) << 4)
                for d in range(c + 1, n - 1):
                    rd = rows[d]
                    p3 = (
                        p2
                        | (((ra >> d) & 1) << 2)
                        | (((rb >> d) & 1) << 5)
                        | (((rc >> d) & 1) << 7)
                    )
                    for e in range(d + 1, n):
                        out[
                            labels[
                                p3
                                | (((ra >> e) & 1) << 3)
                                | (((rb >> e) & 1) << 6)
                                | (((rc >> e) & 1) << 8)
                                | (((rd >> e) & 1) << 9)
                            ]
                        ] += 1
    return out
