"""Input generators and linearity benchmarks for the rev-scan engines.

A benchmark run records wall time and the scan's work counters per input
size; dividing by n and watching consecutive size doublings makes the
linear-time claim measurable.  Growth of the per-symbol ratio beyond the
tolerance flags non-linearity; shrinking ratios (fixed costs fading out) are
fine.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import Text
from .encodings import ComplementMap
from .rev_engine import Counters, CtStats, scan_rev

GENERATORS = ("random", "runs", "dna", "perm", "alternating")
GROWTH_LIMIT = 0.25


def generate(kind: str, n: int, seed: int = 0) -> Text:
    """Deterministic benchmark input of length n."""
    rng = np.random.default_rng((seed, n))
    if kind == "random":
        return Text.from_tokens(rng.integers(0, 4, size=n).tolist())
    if kind == "runs":
        return Text.from_str("a" * n)
    if kind == "dna":
        bases = np.frombuffer(b"ACGT", dtype=np.uint8)
        return Text(
            symbols=tuple(bases[rng.integers(0, 4, size=n)].tolist()),
            alphabet_kind="byte",
        )
    if kind == "perm":
        return Text.from_tokens(rng.permutation(n).tolist())
    if kind == "alternating":
        return Text.from_str("ab" * (n // 2) + "a" * (n % 2))
    raise ValueError(f"unknown generator {kind!r}")


def default_complement(kind: str) -> ComplementMap:
    """Complement map used for the theta model per generator."""
    if kind == "dna":
        return ComplementMap.watson_crick()
    if kind in ("random", "perm"):
        return ComplementMap.from_pairs([(0, 1), (2, 3)])
    return ComplementMap.identity()


@dataclass
class BenchRecord:
    n: int
    seconds: float
    counters: Counters
    ct_stats: CtStats | None

    @property
    def work(self) -> int:
        return self.counters.work

    @property
    def ops_per_symbol(self) -> float:
        return self.work / self.n

    @property
    def ns_per_symbol(self) -> float:
        return self.seconds * 1e9 / self.n


def run_scan(
    model: str,
    text: Text,
    *,
    complement: ComplementMap | None = None,
    repeats: int = 1,
    collect_ct_stats: bool = False,
) -> BenchRecord:
    """Scan once per repeat, keep the best wall time and the last counters."""
    best = float("inf")
    counters = Counters()
    stats = None
    for _ in range(max(1, repeats)):
        counters = Counters()
        stats = CtStats() if collect_ct_stats and model == "ct" else None
        start = time.perf_counter()
        scan_rev(text, model, complement=complement, counters=counters, ct_stats=stats)
        best = min(best, time.perf_counter() - start)
    return BenchRecord(n=text.n, seconds=best, counters=counters, ct_stats=stats)


def run_ladder(
    model: str,
    generator: str,
    sizes,
    *,
    seed: int = 0,
    complement: ComplementMap | None = None,
    collect_ct_stats: bool = False,
) -> list[BenchRecord]:
    if complement is None and model == "theta":
        complement = default_complement(generator)
    records = []
    for n in sizes:
        text = generate(generator, n, seed)
        repeats = 3 if n <= 1 << 15 else 1
        records.append(
            run_scan(
                model,
                text,
                complement=complement,
                repeats=repeats,
                collect_ct_stats=collect_ct_stats,
            )
        )
    return records


def growth_flags(values: list[float], limit: float = GROWTH_LIMIT) -> list[bool]:
    """True where a per-symbol ratio grew more than ``limit`` vs the previous
    size (the non-linearity signal); the first entry is never flagged."""
    flags = [False]
    for prev, cur in zip(values, values[1:]):
        flags.append(prev > 0 and cur > prev * (1 + limit))
    return flags


def doubling_sizes(lo: int, hi: int) -> list[int]:
    if lo < 1 or hi < lo:
        raise ValueError(f"bad size range {lo}..{hi}")
    sizes = []
    n = lo
    while n <= hi:
        sizes.append(n)
        n *= 2
    return sizes


def format_report(model: str, generator: str, records: list[BenchRecord]) -> str:
    ratios = [r.ops_per_symbol for r in records]
    flags = growth_flags(ratios)
    lines = [
        f"model={model} gen={generator}",
        f"{'n':>9} {'work':>12} {'ops/n':>8} {'time_s':>10} {'ns/char':>9}  flag",
    ]
    for rec, flag in zip(records, flags):
        lines.append(
            f"{rec.n:>9} {rec.work:>12} {rec.ops_per_symbol:>8.3f} "
            f"{rec.seconds:>10.4f} {rec.ns_per_symbol:>9.1f}  {'!' if flag else '.'}"
        )
    return "\n".join(lines)
