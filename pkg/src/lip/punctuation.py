"""Punctuation removal for ordinary messages, spoken readout for symbol-only ones."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .assets import AssetBundle

MAX_NAMED = 2
SUPPRESSOR = "and some other punctuations"

_INNER_APOSTROPHE = re.compile(r"(?<=[^\W\d_])['’](?=[^\W\d_])")
_NOT_KEPT = re.compile(r"[^\w\s?]|_")
_QUESTIONS = re.compile(r"\?+")


@dataclass(frozen=True)
class PunctuationReadout:
    named: tuple[str, ...] = ()
    suppressed_count: int = 0
    phrase: str = ""


def join_contractions(text: str) -> str:
    """Drop apostrophes between letters: ``it's`` -> ``its``."""
    return _INNER_APOSTROPHE.sub("", text)


def strip_punctuation(text: str) -> str:
    text = join_contractions(text)
    text = _NOT_KEPT.sub(" ", text)
    text = _QUESTIONS.sub("?", text)
    return " ".join(text.split())


def punctuation_readout(text: str, bundle: AssetBundle, allow_spamming: bool) -> PunctuationReadout:
    marks: list[str] = []
    for ch in text:
        if not ch.isspace() and ch not in marks:
            marks.append(ch)
    known = [bundle.punctuation_names[m] for m in marks if m in bundle.punctuation_names]
    unknown = len(marks) - len(known)
    named = known if allow_spamming else known[:MAX_NAMED]
    suppressed = unknown + len(known) - len(named)
    parts = list(named)
    if suppressed:
        parts.append(SUPPRESSOR)
    return PunctuationReadout(tuple(named), suppressed, " ".join(parts))
