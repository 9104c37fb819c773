"""Doubling experiment for the chordal LexDFS+ against the naive oracle."""

from __future__ import annotations

import functools
import gc
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .chordal import lexdfs_plus_chordal
from .oracle import naive_lexdfs_plus
from .testkit import gen_chordal, gen_rho

__all__ = ["BenchRow", "median_time", "run_bench", "growth_factors", "linearity_verdict", "format_table"]

# allowed time growth per doubling of n + m
DOUBLING_LIMIT = 2.5


@dataclass
class BenchRow:
    n: int
    m: int
    t_fast: float
    t_naive: float | None

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def ratio(self) -> float | None:
        return None if self.t_naive is None else self.t_naive / self.t_fast


def _time_once(fn: Callable[[], object]) -> float:
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        t0 = time.perf_counter()
        fn()
        return time.perf_counter() - t0
    finally:
        if enabled:
            gc.enable()


def median_time(fn: Callable[[], object], repeats: int) -> float:
    """Median wall time of ``fn()`` over ``repeats`` runs, GC paused while timing."""
    return statistics.median(_time_once(fn) for _ in range(repeats))


def _interleaved_medians(
    calls: Sequence[Callable[[], object]], repeats: int, warmup: bool = True
) -> list[float]:
    # optional untimed warm-up per call, then rounds that time every call once
    if warmup:
        for fn in calls:
            fn()
    times: list[list[float]] = [[] for _ in calls]
    for _ in range(repeats):
        for fn, acc in zip(calls, times):
            acc.append(_time_once(fn))
    return [statistics.median(acc) for acc in times]


def run_bench(
    k: int,
    sizes: Sequence[int],
    seed: int,
    repeats: int = 5,
    naive_max_n: int = 2048,
    naive_repeats: int = 3,
) -> list[BenchRow]:
    """Time :func:`lexdfs_plus_chordal` on ``gen_chordal(n, k, seed)`` for each size.

    Runs are interleaved: every round times each size once and the median
    over ``repeats`` rounds is reported, so a slow phase of a shared machine
    hits all sizes alike instead of skewing one doubling step.  The naive
    oracle is only timed up to ``naive_max_n`` vertices since it is
    quadratic; it has nothing to compile, so it gets no warm-up run.
    """
    cases = []
    for n in sizes:
        g = gen_chordal(n, k, seed)
        cases.append((g, gen_rho(g, 0, seed)))
    t_fast = _interleaved_medians(
        [functools.partial(lexdfs_plus_chordal, g, 0, rho) for g, rho in cases], repeats
    )
    small = [(g, rho) for g, rho in cases if g.n <= naive_max_n]
    t_naive = _interleaved_medians(
        [functools.partial(naive_lexdfs_plus, g, rho) for g, rho in small],
        naive_repeats,
        warmup=False,
    )
    t_naive += [None] * (len(cases) - len(small))
    return [BenchRow(g.n, g.m, tf, tn) for (g, _), tf, tn in zip(cases, t_fast, t_naive)]


def growth_factors(rows: Sequence[BenchRow], naive: bool = False) -> list[tuple[float, float]]:
    """``(size growth, time growth)`` between consecutive rows."""
    out = []
    for a, b in zip(rows, rows[1:]):
        ta, tb = (a.t_naive, b.t_naive) if naive else (a.t_fast, b.t_fast)
        if ta is None or tb is None:
            continue
        out.append((b.size / a.size, tb / ta))
    return out


def linearity_verdict(rows: Sequence[BenchRow], limit: float = DOUBLING_LIMIT) -> bool:
    """True if every step's time growth stays within ``limit`` per doubling of ``n + m``."""
    return all(tg <= limit * sg / 2 for sg, tg in growth_factors(rows))


def format_table(rows: Sequence[BenchRow]) -> str:
    lines = [f"{'n':>8} {'m':>9} {'t_fast':>10} {'t_naive':>10} {'ratio':>8}"]
    for r in rows:
        naive = "-" if r.t_naive is None else f"{r.t_naive:10.4f}"
        ratio = "-" if r.ratio is None else f"{r.ratio:8.1f}"
        lines.append(f"{r.n:>8} {r.m:>9} {r.t_fast:10.4f} {naive:>10} {ratio:>8}")
    return "\n".join(lines)
