"""Grapheme segmentation and per-grapheme classification."""

from __future__ import annotations

import enum
import functools
import unicodedata
from dataclasses import dataclass

import regex

from .assets import UNKNOWN_EMOJI, AssetBundle, EmojiRecord, SKIN_TONES

_CLUSTER = regex.compile(r"\X")

# Pictographic planes used to catch emoji missing from the table.
_EMOJI_RANGES = ((0x1F000, 0x1FAFF), (0x1FC00, 0x1FFFD))

# Typographic marks mapped to the ASCII mark they stand in for.
_TYPOGRAPHIC = str.maketrans({"’": "'", "‘": "'", "′": "'", "“": '"', "”": '"', "″": '"', "–": "-", "—": "-"})
KEPT_SYMBOLS = frozenset("₹€£")


class GraphemeClass(enum.Enum):
    TEXT = "text"
    EMOJI = "emoji"
    INFORMATIONAL_EMOJI = "informational_emoji"
    PUNCTUATION = "punctuation"
    WHITESPACE = "whitespace"


@dataclass(frozen=True, slots=True)
class Grapheme:
    text: str
    start: int
    end: int


@dataclass(frozen=True, slots=True)
class ClassifiedGrapheme:
    grapheme: Grapheme
    kind: GraphemeClass
    emoji_record: EmojiRecord | None = None

    @property
    def text(self) -> str:
        return self.grapheme.text

    @property
    def is_emoji(self) -> bool:
        return self.kind in (GraphemeClass.EMOJI, GraphemeClass.INFORMATIONAL_EMOJI)

    @property
    def emoji_key(self) -> str:
        """Identity used to deduplicate emoji: table key, or the tone-free text."""
        if self.emoji_record is not None:
            return self.emoji_record.key
        return strip_tone_text(self.grapheme.text)


def lowercase(text: str) -> str:
    if text.isascii():
        return text.lower()
    # Simple case mapping: skip characters whose lowercase expands (e.g. U+0130).
    return "".join(low if len(low := c.lower()) == 1 else c for c in text)


def segment(text: str) -> list[Grapheme]:
    return [Grapheme(m.group(), m.start(), m.end()) for m in _CLUSTER.finditer(text)]


def strip_tone_text(text: str) -> str:
    if not any(c in SKIN_TONES for c in text):
        return text
    return "".join(c for c in text if c not in SKIN_TONES)


def strip_skin_tone(g: Grapheme) -> Grapheme:
    stripped = strip_tone_text(g.text)
    if stripped == g.text:
        return g
    return Grapheme(stripped, g.start, g.end)


def _looks_pictographic(text: str) -> bool:
    return any(lo <= ord(c) <= hi for c in text for lo, hi in _EMOJI_RANGES)


@functools.lru_cache(maxsize=4096)
def fold_ascii(text: str) -> str:
    """Best-effort ASCII rendering of a grapheme: accents dropped, digits kept."""
    if text.isascii():
        return text.lower()
    out = []
    for c in text.translate(_TYPOGRAPHIC):
        if c.isascii():
            out.append(c)
            continue
        decomposed = unicodedata.normalize("NFKD", c).encode("ascii", "ignore").decode()
        if decomposed:
            out.append(decomposed)
        elif c.isdecimal():
            out.append(str(unicodedata.decimal(c)))
    return "".join(out).lower()


def _classify_one(text: str, bundle: AssetBundle) -> tuple[GraphemeClass, EmojiRecord | None]:
    if len(text) == 1 and text.isascii():
        if text.isalnum():
            return GraphemeClass.TEXT, None
        if text.isspace():
            return GraphemeClass.WHITESPACE, None
        return GraphemeClass.PUNCTUATION, None
    key = strip_tone_text(text)
    record = bundle.lookup_emoji(key) if key else None
    if record is not None:
        if record.informational:
            return GraphemeClass.INFORMATIONAL_EMOJI, record
        return GraphemeClass.EMOJI, record
    if not key or _looks_pictographic(text):
        return GraphemeClass.EMOJI, EmojiRecord(key, UNKNOWN_EMOJI, 0)
    if text.isspace():
        return GraphemeClass.WHITESPACE, None
    if any(c.isalnum() for c in text):
        return GraphemeClass.TEXT, None
    return GraphemeClass.PUNCTUATION, None


def classify(graphemes: list[Grapheme], bundle: AssetBundle) -> list[ClassifiedGrapheme]:
    out = []
    for g in graphemes:
        kind, record = _classify_one(g.text, bundle)
        out.append(ClassifiedGrapheme(g, kind, record))
    return out


def has_alphanumeric(classified: list[ClassifiedGrapheme]) -> bool:
    """True when some text grapheme carries an ASCII letter or digit once folded.

    Keycap digits are emoji graphemes and never count.
    """
    for c in classified:
        if c.kind is GraphemeClass.TEXT and any(ch.isalnum() for ch in fold_ascii(c.text) if ch.isascii()):
            return True
    return False


def count_unique_emojis(classified: list[ClassifiedGrapheme]) -> int:
    return len({c.emoji_key for c in classified if c.is_emoji})
