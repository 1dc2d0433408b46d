"""Enumeration of all k-free rows in decreasing lexicographic order.

A *row* for parameter k is a multiplicity tuple (m_1, ..., m_{k-1}) that
is k-free, with m_j < k/j at every position. Cycles of length exactly k
can never occur in a k-free partition, so position k is omitted from the
representation and rows have length k-1 (k=1 has the single empty row).

The walk is depth-first with in-place backtracking: extend the current
partial row one position at a time, choosing at each new position the
largest multiplicity that keeps the partial row k-free (0 always works,
since prefixes of k-free rows are k-free); emit when complete; then strip
trailing zeros and decrement the last nonzero entry, which again yields a
k-free partial row without retesting.

Each candidate multiplicity tried during an extension is classified by
the three-stage test of :mod:`ksetfix.partitions` and counted in
:class:`TableStats`: rejected as reaching size k with everything below
achievable (universality), accepted by the divisibility criterion, or
settled by the knapsack bit vector. The stage outcomes are computed
incrementally from per-prefix state (running size, compatible divisors,
achievability ladders) but agree with the plain module-level functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

RowSink = Callable[[tuple[int, ...]], None]


@dataclass
class TableStats:
    """Row and pruning counters for one enumeration run.

    partials_considered always equals pruned_universal +
    pruned_divisibility + full_tests; the split depends on the descent
    order and is diagnostic rather than contractual.
    """

    rows_emitted: int = 0
    partials_considered: int = 0
    pruned_universal: int = 0
    pruned_divisibility: int = 0
    full_tests: int = 0

    def merged(self, other: "TableStats") -> "TableStats":
        return TableStats(
            self.rows_emitted + other.rows_emitted,
            self.partials_considered + other.partials_considered,
            self.pruned_universal + other.pruned_universal,
            self.pruned_divisibility + other.pruned_divisibility,
            self.full_tests + other.full_tests,
        )


def position_bound(k: int, j: int) -> int:
    """Largest admissible multiplicity at position j: the largest m < k/j."""
    return (k - 1) // j


def m1_bound(k: int) -> int:
    """Largest admissible first-position multiplicity (k-1 ones)."""
    return k - 1


def enumerate_rows(
    k: int,
    consumer: RowSink,
    *,
    m1_hi: int | None = None,
    m1_lo: int = 0,
) -> TableStats:
    """Deliver every k-free row exactly once, in decreasing lexicographic order.

    The first row is (k-1, 0, ..., 0) and the last is all zeros. The
    optional m1 window restricts the walk to rows with m1_lo <= m_1 <=
    m1_hi; windows partitioning the full range reproduce the serial
    sequence and counters exactly when concatenated in decreasing order
    (the one candidate test at position 1 belongs to the window
    containing the top value).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    stats = TableStats()
    if k == 1:
        consumer(())
        stats.rows_emitted = 1
        return stats

    length = k - 1
    kbit = 1 << k
    full = (1 << (k + 1)) - 1
    bounds = [position_bound(k, j) for j in range(1, k)]

    # divisor bookkeeping: bit d-2 stands for the candidate divisor d
    dcount = max(0, k // 2 - 1)
    all_d = (1 << dcount) - 1
    usable_d = 0
    for d in range(2, k // 2 + 1):
        if k % d:
            usable_d |= 1 << (d - 2)
    div_of = [0] * k  # div_of[j]: divisors d of j, for part size j
    for j in range(1, k):
        mask = 0
        for d in range(2, k // 2 + 1):
            if j % d == 0:
                mask |= 1 << (d - 2)
        div_of[j] = mask

    top = bounds[0]
    if m1_hi is None:
        m1_hi = top
    if not 0 <= m1_lo <= m1_hi <= top:
        raise ValueError("invalid m1 window")

    ms: list[int] = []
    # per-depth prefix state, index = prefix length
    ladders: list[list[int]] = [[1]]  # ladders[i][m]: achievability of ms[:i-1]+(m,)
    compat = [all_d]  # divisors still dividing every part size present
    alive = [True]  # no prefix position u has running size < u
    size = [0]

    def push_level(j: int, ub: int) -> list[int]:
        base = ladders[j - 1][ms[j - 2]] if j > 1 else 1
        ladder = [base]
        for _ in range(ub):
            prev = ladder[-1]
            ladder.append(prev | (prev << j) & full)
        ladders.append(ladder)
        return ladder

    def descend(j: int, hi: int, lo: int, ladder: list[int]) -> bool:
        """Try m = hi..lo at position j; push the first k-free one."""
        pre_alive = alive[j - 1]
        pre_size = size[j - 1]
        pre_compat = compat[j - 1]
        for m in range(hi, lo - 1, -1):
            stats.partials_considered += 1
            sz = pre_size + j * m
            if pre_alive and sz >= k:
                # sizes 0..sz all achievable, k among them: not k-free
                stats.pruned_universal += 1
                continue
            c = pre_compat & div_of[j] if m else pre_compat
            if c & usable_d:
                stats.pruned_divisibility += 1
            else:
                stats.full_tests += 1
                if ladder[m] & kbit:
                    continue
            ms.append(m)
            compat.append(c)
            alive.append(pre_alive and sz >= j)
            size.append(sz)
            return True
        return False

    # seed position 1 inside the window; only the window holding the top
    # value performs (and counts) a real candidate test there
    ladder1 = push_level(1, m1_hi)
    if m1_hi == top:
        if not descend(1, top, m1_lo, ladder1):
            raise AssertionError("some m must keep the prefix k-free")
    else:
        # any m_1 <= k-2 < k-1 is k-free; enter the walk silently
        ms.append(m1_hi)
        compat.append(0 if m1_hi else all_d)
        alive.append(m1_hi >= 1)
        size.append(m1_hi)

    while True:
        depth = len(ms)
        if depth < length:
            j = depth + 1
            ub = bounds[depth]
            if not descend(j, ub, 0, push_level(j, ub)):
                raise AssertionError("m=0 must keep a k-free prefix k-free")
            continue
        consumer(tuple(ms))
        stats.rows_emitted += 1
        # backtrack: strip trailing zeros, decrement the last nonzero
        while ms and ms[-1] == 0:
            ms.pop()
            ladders.pop()
            compat.pop()
            alive.pop()
            size.pop()
        if not ms or (len(ms) == 1 and ms[0] <= m1_lo):
            return stats
        j = len(ms)
        m = ms[-1] - 1
        ms[-1] = m
        sz = size[j - 1] + j * m
        size[j] = sz
        alive[j] = alive[j - 1] and sz >= j
        compat[j] = compat[j - 1] & div_of[j] if m else compat[j - 1]


def rows_count(k: int) -> int:
    """Number of k-free rows."""
    return enumerate_rows(k, lambda row: None).rows_emitted


def m1_windows(k: int, parts: int) -> list[tuple[int, int]]:
    """Split the m_1 range into up to ``parts`` contiguous (hi, lo) windows.

    Windows are returned in decreasing order; concatenating their row
    streams in this order reproduces the serial enumeration.
    """
    top = m1_bound(k)
    parts = max(1, min(parts, top + 1))
    edges = [top - (top + 1) * i // parts for i in range(parts)]
    windows = []
    for i, hi in enumerate(edges):
        lo = edges[i + 1] + 1 if i + 1 < len(edges) else 0
        windows.append((hi, lo))
    return windows
