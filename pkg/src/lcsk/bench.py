"""Empirical time and memory scaling of the score-only dynamic programs."""

from __future__ import annotations

import gc
import random
import statistics
import time
import tracemalloc
from dataclasses import dataclass

from lcsk.dataset import pair_score

BYTES_PER_CELL = 8  # one machine word per cell: the least a full table could cost


@dataclass
class BenchRow:
    n: int
    seconds: float
    peak_bytes: int
    ratio: float | None  # time(n) / time(previous n)

    @property
    def full_table_bytes(self) -> int:
        return self.n * self.n * BYTES_PER_CELL


def random_pair(n: int, seed: int, alphabet: bytes = b"ACGT") -> tuple[bytes, bytes]:
    rng = random.Random(seed)
    return (
        bytes(rng.choice(alphabet) for _ in range(n)),
        bytes(rng.choice(alphabet) for _ in range(n)),
    )


def _timed(metric: str, a: bytes, b: bytes, k: int, mode: str) -> float:
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        pair_score(metric, a, b, k, mode)
        return time.perf_counter() - t0
    finally:
        if enabled:
            gc.enable()


def time_scores(
    metric: str, sizes: list[int], k: int, repeats: int = 3, seed: int = 0, mode: str = "full"
) -> list[float]:
    """Median wall time per size of one score-only run on a random pair.

    Sizes are interleaved within each repeat so that slow drift in machine
    load affects every size alike instead of skewing the ratios. One untimed
    warm-up pass runs first.
    """
    pairs = [random_pair(n, seed) for n in sizes]
    for a, b in pairs:
        _timed(metric, a, b, k, mode)
    samples: list[list[float]] = [[] for _ in sizes]
    for _ in range(repeats):
        for idx, (a, b) in enumerate(pairs):
            samples[idx].append(_timed(metric, a, b, k, mode))
    return [statistics.median(s) for s in samples]


def peak_memory(metric: str, n: int, k: int, seed: int = 0, mode: str = "full") -> int:
    """Peak bytes allocated by one score-only run, inputs excluded."""
    a, b = random_pair(n, seed)
    tracemalloc.start()
    try:
        tracemalloc.reset_peak()
        base = tracemalloc.get_traced_memory()[0]
        pair_score(metric, a, b, k, mode)
        peak = tracemalloc.get_traced_memory()[1]
    finally:
        tracemalloc.stop()
    return peak - base


def run_bench(
    metric: str,
    k: int,
    sizes: list[int],
    repeats: int = 3,
    seed: int = 0,
    mode: str = "full",
) -> list[BenchRow]:
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be sorted ascending")
    rows: list[BenchRow] = []
    for n, seconds in zip(sizes, time_scores(metric, sizes, k, repeats, seed, mode)):
        # separate pass: tracing allocations distorts timings
        peak = peak_memory(metric, n, k, seed, mode)
        ratio = seconds / rows[-1].seconds if rows and rows[-1].seconds > 0 else None
        rows.append(BenchRow(n, seconds, peak, ratio))
    return rows


def format_table(rows: list[BenchRow], metric: str, k: int) -> str:
    lines = ["metric\tk\tn\tseconds\tpeak_bytes\tfull_table_bytes\tratio"]
    for r in rows:
        ratio = "" if r.ratio is None else f"{r.ratio:.3f}"
        lines.append(f"{metric}\t{k}\t{r.n}\t{r.seconds:.6f}\t{r.peak_bytes}\t{r.full_table_bytes}\t{ratio}")
    return "\n".join(lines) + "\n"
