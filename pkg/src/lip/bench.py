"""Latency and footprint measurement for the preprocessing pipeline."""

from __future__ import annotations

import os
import platform
import time
import tracemalloc
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .assets import AssetBundle, asset_footprint, default_assets, load_assets
from .config import DEFAULT_ASSET_DIR, Config
from .pipeline import preprocess_with_report
from .segmentation import segment

DEFAULT_CORPUS = Path(__file__).resolve().parent / "data" / "bench_corpus.txt"
MIN_PUBLISHED_ITERATIONS = 1000
BUCKETS = (("<=50", 0, 50), ("51-200", 51, 200), ("201+", 201, None))


@dataclass
class LatencyReport:
    message_length_bucket: str
    messages: int
    iterations: int
    p50_us: float
    p90_us: float
    p99_us: float
    per_stage_p50_us: dict[str, float]
    asset_footprint_bytes: int
    below_minimum: bool
    footprint_stable: bool
    hardware: str = field(default_factory=lambda: hardware_descriptor())

    def to_dict(self) -> dict:
        return asdict(self)


def hardware_descriptor() -> str:
    return (
        f"{platform.machine()} {platform.processor() or 'unknown-cpu'} x{os.cpu_count()}; "
        f"{platform.system()} {platform.release()}; "
        f"{platform.python_implementation()} {platform.python_version()}"
    )


def percentile(sorted_values: list[float], q: float) -> float:
    """Nearest-rank percentile of an already sorted list."""
    if not sorted_values:
        raise ValueError("no samples")
    rank = max(1, -(-len(sorted_values) * q // 100))
    return sorted_values[int(rank) - 1]


def read_corpus(path: str | Path) -> list[str]:
    lines = [line.rstrip("\n") for line in Path(path).read_text(encoding="utf-8").splitlines()]
    messages = [line for line in lines if line.strip()]
    if not messages:
        raise ValueError(f"benchmark corpus {path} is empty")
    return messages


def bucket_of(message: str) -> str:
    n = len(segment(message))
    for name, lo, hi in BUCKETS:
        if n >= lo and (hi is None or n <= hi):
            return name
    raise AssertionError(n)


def bench(
    corpus: str | Path = DEFAULT_CORPUS,
    iterations: int = 10_000,
    config: Config | None = None,
    bundle: AssetBundle | None = None,
    warmup: int = 200,
) -> list[LatencyReport]:
    """Time ``iterations`` calls per length bucket, cycling through its messages."""
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    config = config or Config()
    bundle = bundle or default_assets(config.asset_dir)
    grouped: dict[str, list[str]] = defaultdict(list)
    for message in read_corpus(corpus):
        grouped[bucket_of(message)].append(message)

    footprint_before = asset_footprint(bundle)
    reports = []
    for name, _, _ in BUCKETS:
        messages = grouped.get(name)
        if not messages:
            continue
        for i in range(min(warmup, iterations)):
            preprocess_with_report(messages[i % len(messages)], config, bundle)
        totals: list[float] = []
        stages: dict[str, list[float]] = defaultdict(list)
        for i in range(iterations):
            message = messages[i % len(messages)]
            start = time.perf_counter_ns()
            result = preprocess_with_report(message, config, bundle)
            totals.append((time.perf_counter_ns() - start) / 1000.0)
            for stage, micros in result.stage_timings:
                stages[stage].append(micros)
        totals.sort()
        reports.append(
            LatencyReport(
                message_length_bucket=name,
                messages=len(messages),
                iterations=iterations,
                p50_us=percentile(totals, 50),
                p90_us=percentile(totals, 90),
                p99_us=percentile(totals, 99),
                per_stage_p50_us={s: percentile(sorted(v), 50) for s, v in stages.items()},
                asset_footprint_bytes=footprint_before,
                below_minimum=iterations < MIN_PUBLISHED_ITERATIONS,
                footprint_stable=asset_footprint(bundle) == footprint_before,
            )
        )
    return reports


def resident_probe(directory: str | Path = DEFAULT_ASSET_DIR) -> int:
    """Peak Python heap allocated while loading the assets (tracemalloc)."""
    already = tracemalloc.is_tracing()
    if not already:
        tracemalloc.start()
    tracemalloc.reset_peak()
    base, _ = tracemalloc.get_traced_memory()
    bundle = load_assets(directory)
    _, peak = tracemalloc.get_traced_memory()
    if not already:
        tracemalloc.stop()
    del bundle
    return peak - base
