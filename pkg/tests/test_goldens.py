import json

import pytest

from lip.goldens import DEFAULT_FIXTURES, GoldenCase, load_cases, relaxed, run_case, run_goldens


def test_relaxed():
    assert relaxed("Oh  beep I missed that question?") == "oh beep i missed that question"
    assert relaxed("  A\tB ") == "a b"


@pytest.mark.parametrize("case", load_cases(), ids=lambda c: c.id)
def test_shipped_golden(case):
    result = run_case(case)
    assert result.passed, (case.expected, result.actual)


def test_eleven_cases():
    assert len(load_cases()) == 11


def test_exact_mode_is_strict():
    case = GoldenCase("x", "Oh shit??", "Oh beep", normalization="exact")
    assert not run_case(case).passed
    case = GoldenCase("x", "Oh shit??", "oh beep?", normalization="exact")
    assert run_case(case).passed


def test_flags_apply():
    case = GoldenCase("x", "!@#", "exclamation mark at symbol hash symbol", {"allow_punctuation_spamming": True})
    assert run_case(case).passed


def test_unknown_normalization(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps([{"id": "x", "input": "a", "expected": "a", "normalization": "fuzzy"}]))
    with pytest.raises(ValueError):
        load_cases(path)


def test_deterministic():
    first = [r.actual for r in run_goldens(DEFAULT_FIXTURES)]
    assert first == [r.actual for r in run_goldens(DEFAULT_FIXTURES)]
