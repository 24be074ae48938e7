import pytest

from lcsk.bench import format_table, peak_memory, random_pair, run_bench


def test_random_pair_deterministic():
    assert random_pair(30, 1) == random_pair(30, 1)
    a, b = random_pair(30, 1)
    assert len(a) == len(b) == 30 and set(a) <= set(b"ACGT")


def test_run_bench_rows():
    rows = run_bench("lcsk", 2, [40, 80], repeats=2)
    assert [r.n for r in rows] == [40, 80]
    assert rows[0].ratio is None and rows[1].ratio > 0
    assert all(r.peak_bytes > 0 for r in rows)
    text = format_table(rows, "lcsk", 2)
    assert text.splitlines()[0].startswith("metric\tk\tn\tseconds")


def test_sizes_must_ascend():
    with pytest.raises(ValueError):
        run_bench("edk", 2, [80, 40])


def test_memory_is_sub_quadratic():
    n = 600
    for metric in ("lcsk", "edk"):
        assert peak_memory(metric, n, 2) < 0.1 * n * n * 8
