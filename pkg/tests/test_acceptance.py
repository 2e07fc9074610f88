"""Acceptance criteria, each checked at its stated tolerance.

Every test records a PASS/FAIL line that is printed in the terminal summary.
"""

import io
import random
import time

from acceptance_report import record
from oracles import cardinal, parse_cardinal
import properties
from test_profanity import INNOCENT

from lip.assets import asset_footprint, default_assets, footprint_breakdown, load_assets
from lip.bench import DEFAULT_CORPUS, bench, bucket_of, read_corpus
from lip.cli import run_cli
from lip.config import DEFAULT_ASSET_DIR
from lip.goldens import run_goldens
from lip.numbers import LIMIT, number_to_words

FOOTPRINT_BUDGET = 3_723_000
P50_LIMIT_US = 4_000
P99_LIMIT_US = 10_000
LATENCY_ITERATIONS = 10_000
PROPERTY_EXAMPLES = 1_000


def test_criterion_1_goldens():
    start = time.perf_counter()
    bundle = load_assets(DEFAULT_ASSET_DIR)
    results = run_goldens(bundle=bundle)
    elapsed = time.perf_counter() - start
    passed = sum(r.passed for r in results)
    ok = len(results) == 11 and passed == 11 and elapsed < 1.0
    record(1, "golden suite", ok, f"{passed}/{len(results)} passed in {elapsed:.3f}s including asset load")
    assert ok, [(r.case.id, r.actual) for r in results if not r.passed]


def test_criterion_2_latency(tmp_path):
    short = [m for m in read_corpus(DEFAULT_CORPUS) if bucket_of(m) == "<=50"]
    corpus = tmp_path / "short.txt"
    corpus.write_text("\n".join(short) + "\n", encoding="utf-8")
    (report,) = bench(corpus, LATENCY_ITERATIONS)
    ok = (
        report.iterations >= LATENCY_ITERATIONS
        and report.p50_us <= P50_LIMIT_US
        and report.p99_us <= P99_LIMIT_US
        and report.footprint_stable
    )
    record(
        2,
        "latency for messages of at most 50 graphemes",
        ok,
        f"p50 {report.p50_us:.0f} us, p99 {report.p99_us:.0f} us over {report.iterations} runs; {report.hardware}",
    )
    assert ok


def test_criterion_3_footprint():
    bundle = default_assets()
    total = asset_footprint(bundle)
    out = io.StringIO()
    code = run_cli(["assets"], env={}, out=out)
    listed = all(name in out.getvalue() for name in footprint_breakdown(bundle))
    ok = total <= FOOTPRINT_BUDGET and code == 0 and listed
    record(3, "asset footprint", ok, f"{total:,d} of {FOOTPRINT_BUDGET:,d} bytes")
    assert ok


def test_criterion_4_number_oracles():
    mismatches = []
    for n in range(0, 20_001):
        words = number_to_words(n)
        if words != cardinal(n) or parse_cardinal(words) != n:
            mismatches.append(n)
    rng = random.Random(4)
    for _ in range(10_000):
        n = rng.randrange(LIMIT)
        words = number_to_words(n)
        if words != cardinal(n) or parse_cardinal(words) != n:
            mismatches.append(n)
    ok = not mismatches
    record(4, "number words against the independent oracles", ok, f"{len(mismatches)} mismatches in 30,001 values")
    assert ok, mismatches[:10]


def test_criterion_5_properties():
    assert len(set(INNOCENT)) >= 100
    suites = {
        "output alphabet": properties.output_alphabet,
        "pii rescan": properties.pii_rescan,
        "idempotence": properties.idempotence,
        "emoji repetition": properties.emoji_repetition,
        "punctuation repetition": properties.punctuation_repetition,
        "segmentation lossless": properties.segmentation_lossless,
        "profanity word boundaries": properties.scunthorpe(sorted(set(INNOCENT))),
    }
    failures = {}
    for name, check in suites.items():
        try:
            properties.run_property(check, PROPERTY_EXAMPLES)
        except Exception as exc:  # collect every suite before failing
            failures[name] = exc
    ok = not failures
    detail = f"{len(suites) - len(failures)}/{len(suites)} suites, {PROPERTY_EXAMPLES} examples each"
    if failures:
        detail += "; failing: " + ", ".join(failures)
    record(5, "property suites", ok, detail)
    assert ok, failures
