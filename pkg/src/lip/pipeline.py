"""End-to-end preprocessing of one message into TTS-ready text."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import emojis, entities, lexical, punctuation
from .assets import AssetBundle, default_assets
from .config import Config
from .emojis import EmojiTrailer
from .profanity import censor
from .punctuation import PunctuationReadout
from .segmentation import (
    KEPT_SYMBOLS,
    ClassifiedGrapheme,
    GraphemeClass,
    classify,
    count_unique_emojis,
    fold_ascii,
    has_alphanumeric,
    lowercase,
    segment,
    strip_tone_text,
)

MAX_GRAPHEMES = 10_000

STAGES = (
    "lowercase",
    "segment",
    "classify",
    "have_char",
    "count_emoji",
    "extract_emoji",
    "inline_informational",
    "normalize",
    "entities",
    "censor",
    "punctuation",
    "assemble",
)

_DEFAULT_CONFIG = Config()


class InputTooLarge(ValueError):
    pass


@dataclass
class ProcessedMessage:
    tts_text: str
    body: list[str]
    emoji_trailer: EmojiTrailer
    punctuation_phrase: PunctuationReadout | None
    have_char: bool
    unique_emoji_count: int
    informational_count: int = 0
    stage_timings: list[tuple[str, float]] = field(default_factory=list)


class _Stopwatch:
    def __init__(self) -> None:
        self.timings: list[tuple[str, float]] = []
        self._last = time.perf_counter_ns()

    def lap(self, stage: str) -> None:
        now = time.perf_counter_ns()
        self.timings.append((stage, (now - self._last) / 1000.0))
        self._last = now


class _NoStopwatch:
    timings: list[tuple[str, float]] = []

    def lap(self, stage: str) -> None:
        pass


def _render(body: list[ClassifiedGrapheme]) -> str:
    parts = []
    for c in body:
        if c.kind is GraphemeClass.WHITESPACE:
            parts.append(" ")
        elif c.kind is GraphemeClass.TEXT:
            parts.append(fold_ascii(c.text))
        elif c.text in KEPT_SYMBOLS:
            parts.append(c.text)
        else:
            parts.append(fold_ascii(c.text) or " ")
    return "".join(parts)


def _process_text(body: list[ClassifiedGrapheme], config: Config, bundle: AssetBundle, watch) -> list[str]:
    text = punctuation.join_contractions(_render(body))
    tokens = text.split()
    if config.rm_common_abbr:
        tokens = lexical.normalize_text(tokens, bundle)
    watch.lap("normalize")
    tokens = entities.apply_entities(tokens, config)
    if config.rm_common_abbr:
        # Verbalized entities can contain shorthand of their own ("fb.com").
        tokens = lexical.normalize_text(tokens, bundle, protect=lambda t: False)
    watch.lap("entities")
    text = censor(" ".join(tokens), bundle.profanity_matcher)
    watch.lap("censor")
    text = punctuation.strip_punctuation(text)
    watch.lap("punctuation")
    return text.split()


def _run(text: str, config: Config, bundle: AssetBundle, watch) -> ProcessedMessage:
    text = lowercase(text)
    watch.lap("lowercase")
    graphemes = segment(text)
    if len(graphemes) > MAX_GRAPHEMES:
        raise InputTooLarge(f"message has {len(graphemes)} graphemes, limit is {MAX_GRAPHEMES}")
    # A skin-tone modifier with no base emoji carries nothing to read.
    graphemes = [g for g in graphemes if strip_tone_text(g.text)]
    watch.lap("segment")
    classified = classify(graphemes, bundle)
    watch.lap("classify")
    have_char = has_alphanumeric(classified)
    watch.lap("have_char")
    unique = count_unique_emojis(classified)
    informational = len(
        {c.emoji_key for c in classified if c.kind is GraphemeClass.INFORMATIONAL_EMOJI}
    )
    watch.lap("count_emoji")
    body, occurrences = emojis.extract_emojis(classified)
    ranked = emojis.rank_emojis(occurrences)
    watch.lap("extract_emoji")
    body = emojis.inline_informational(body)
    watch.lap("inline_informational")

    readout = None
    if have_char:
        words = _process_text(body, config, bundle, watch)
    else:
        words = [fold_ascii(c.text) for c in body if c.kind is GraphemeClass.TEXT]
        words = " ".join(words).split()
        marks = "".join(c.text for c in body if c.kind is GraphemeClass.PUNCTUATION)
        if marks:
            readout = punctuation.punctuation_readout(marks, bundle, config.allow_punctuation_spamming)
        watch.lap("punctuation")

    trailer = emojis.build_trailer(ranked, bool(words), config.allow_emoji_spamming)
    parts = [" ".join(words), readout.phrase if readout else "", trailer.phrase]
    tts_text = censor(" ".join(p for p in parts if p), bundle.profanity_matcher)
    watch.lap("assemble")
    return ProcessedMessage(
        tts_text=tts_text,
        body=words,
        emoji_trailer=trailer,
        punctuation_phrase=readout,
        have_char=have_char,
        unique_emoji_count=unique,
        informational_count=informational,
        stage_timings=list(watch.timings),
    )


def preprocess(text: str, config: Config | None = None, bundle: AssetBundle | None = None) -> ProcessedMessage:
    """Rewrite ``text`` into speakable prose.

    Emoji are summarized after the body, PII is masked, numbers and
    structured values are read out in words, shorthand is expanded, swear
    words become "beep" and punctuation is dropped (or named, when the
    message has nothing else to say).
    """
    config = config or _DEFAULT_CONFIG
    bundle = bundle or default_assets(config.asset_dir)
    return _run(text, config, bundle, _NoStopwatch())


def preprocess_with_report(
    text: str, config: Config | None = None, bundle: AssetBundle | None = None
) -> ProcessedMessage:
    """:func:`preprocess` with per-stage wall-clock timings in microseconds."""
    config = config or _DEFAULT_CONFIG
    bundle = bundle or default_assets(config.asset_dir)
    return _run(text, config, bundle, _Stopwatch())
