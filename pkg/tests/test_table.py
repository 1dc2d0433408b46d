"""Row table enumeration: order, completeness, counters, windows."""

from itertools import product

import pytest

from ksetfix.partitions import (
    divisibility_free,
    is_k_free,
    subpartition_sums,
    universality_index,
)
from ksetfix.table import (
    TableStats,
    enumerate_rows,
    m1_bound,
    m1_windows,
    position_bound,
    rows_count,
)

from reference_data import LIMIT_TABLE_8DP


def collect(k, **kw):
    rows = []
    stats = enumerate_rows(k, rows.append, **kw)
    return rows, stats


def reference_enumerate(k):
    """The same walk, recomputing every candidate test from scratch.

    Classification mirrors the production three-stage order but calls the
    plain module-level predicates on the whole extended partial row.
    """
    stats = TableStats()
    rows = []
    if k == 1:
        return [()], TableStats(rows_emitted=1)

    def classify(ms):
        stats.partials_considered += 1
        if universality_index(ms) >= k:
            stats.pruned_universal += 1
            return False
        if divisibility_free(k, ms):
            stats.pruned_divisibility += 1
            return True
        stats.full_tests += 1
        return k not in subpartition_sums(ms, k)

    r = []
    while True:
        if len(r) == k - 1:
            rows.append(tuple(r))
            stats.rows_emitted += 1
            while r and r[-1] == 0:
                r.pop()
            if not r:
                return rows, stats
            r[-1] -= 1
        else:
            j = len(r) + 1
            for m in range(position_bound(k, j), -1, -1):
                if classify(r + [m]):
                    r.append(m)
                    break
            else:
                raise AssertionError("extension must succeed at m=0")


def test_k4_exact_sequence():
    rows, stats = collect(4)
    assert rows == [
        (3, 0, 0), (2, 0, 0), (1, 1, 0), (1, 0, 0),
        (0, 1, 1), (0, 1, 0), (0, 0, 1), (0, 0, 0),
    ]
    assert stats.rows_emitted == 8


def test_k1_single_empty_row():
    rows, stats = collect(1)
    assert rows == [()]
    assert stats.rows_emitted == 1
    assert rows_count(1) == 1


def test_first_and_last_rows():
    for k in range(2, 9):
        rows, _ = collect(k)
        assert rows[0] == (k - 1,) + (0,) * (k - 2)
        assert rows[-1] == (0,) * (k - 1)


def test_rows_count_small_values():
    for k in range(1, 13):
        assert rows_count(k) == LIMIT_TABLE_8DP[k][1], k


@pytest.mark.parametrize("k", range(2, 9))
def test_completeness_against_box_scan(k):
    # every k-free tuple in the admissible box, found by exhausting it
    box = [range(position_bound(k, j) + 1) for j in range(1, k)]
    expected = {ms for ms in product(*box) if is_k_free(k, ms)}
    rows, _ = collect(k)
    assert set(rows) == expected
    assert len(rows) == len(expected)


@pytest.mark.parametrize("k", range(2, 10))
def test_rows_strictly_decreasing_lex(k):
    rows, _ = collect(k)
    assert all(a > b for a, b in zip(rows, rows[1:]))


@pytest.mark.parametrize("k", range(2, 9))
def test_matches_reference_walk_and_counter_split(k):
    rows, stats = collect(k)
    ref_rows, ref_stats = reference_enumerate(k)
    assert rows == ref_rows
    assert stats == ref_stats


def test_counter_identity():
    for k in range(1, 12):
        _, s = collect(k)
        assert s.partials_considered == (
            s.pruned_universal + s.pruned_divisibility + s.full_tests
        )
        assert s.rows_emitted == rows_count(k)


def test_deterministic_repeat_runs():
    a_rows, a_stats = collect(9)
    b_rows, b_stats = collect(9)
    assert a_rows == b_rows
    assert a_stats == b_stats


@pytest.mark.parametrize("k,parts", [(5, 2), (8, 3), (9, 4), (9, 20)])
def test_m1_windows_reproduce_serial_run(k, parts):
    serial_rows, serial_stats = collect(k)
    windows = m1_windows(k, parts)
    assert windows[0][0] == m1_bound(k)
    assert windows[-1][1] == 0
    rows = []
    merged = TableStats()
    for hi, lo in windows:
        part_rows, part_stats = collect(k, m1_hi=hi, m1_lo=lo)
        rows.extend(part_rows)
        merged = merged.merged(part_stats)
    assert rows == serial_rows
    assert merged == serial_stats


def test_every_emitted_row_is_k_free():
    for k in range(2, 10):
        rows, _ = collect(k)
        for ms in rows:
            assert is_k_free(k, ms)
            for j, m in enumerate(ms, start=1):
                assert 0 <= m <= position_bound(k, j)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        enumerate_rows(0, lambda r: None)
    with pytest.raises(ValueError):
        enumerate_rows(5, lambda r: None, m1_hi=10)
