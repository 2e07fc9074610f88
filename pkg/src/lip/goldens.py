"""Golden end-to-end cases: fixed inputs with their expected spoken form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .assets import AssetBundle, default_assets
from .config import Config
from .pipeline import preprocess

DEFAULT_FIXTURES = Path(__file__).resolve().parent / "data" / "goldens.json"


@dataclass(frozen=True)
class GoldenCase:
    id: str
    input: str
    expected: str
    flags: dict[str, Any] = field(default_factory=dict)
    normalization: str = "relaxed"


@dataclass(frozen=True)
class GoldenResult:
    case: GoldenCase
    actual: str
    passed: bool


def relaxed(text: str) -> str:
    """Lowercase, collapse whitespace, drop a terminal question mark."""
    text = " ".join(text.lower().split())
    return text[:-1].rstrip() if text.endswith("?") else text


def load_cases(path: str | Path = DEFAULT_FIXTURES) -> list[GoldenCase]:
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    cases = []
    for item in raw:
        case = GoldenCase(**item)
        if case.normalization not in ("exact", "relaxed"):
            raise ValueError(f"golden {case.id}: unknown normalization {case.normalization!r}")
        cases.append(case)
    return cases


def run_case(case: GoldenCase, base: Config | None = None, bundle: AssetBundle | None = None) -> GoldenResult:
    config = (base or Config()).with_overrides(**case.flags)
    bundle = bundle or default_assets(config.asset_dir)
    actual = preprocess(case.input, config, bundle).tts_text
    if case.normalization == "exact":
        passed = actual == case.expected
    else:
        passed = relaxed(actual) == relaxed(case.expected)
    return GoldenResult(case, actual, passed)


def run_goldens(
    path: str | Path = DEFAULT_FIXTURES, base: Config | None = None, bundle: AssetBundle | None = None
) -> list[GoldenResult]:
    return [run_case(case, base, bundle) for case in load_cases(path)]
