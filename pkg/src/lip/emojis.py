"""Emoji extraction, popularity ranking and the spoken trailer phrase."""

from __future__ import annotations

from dataclasses import dataclass

from .assets import EmojiRecord
from .segmentation import ClassifiedGrapheme, Grapheme, GraphemeClass

MAX_NAMED = 3
SUPPRESSOR = "and some other emojis"


@dataclass
class EmojiOccurrence:
    record: EmojiRecord
    first_position: int
    count: int = 1


@dataclass(frozen=True)
class EmojiTrailer:
    named: tuple[str, ...] = ()
    suppressed_count: int = 0
    phrase: str = ""


def extract_emojis(
    classified: list[ClassifiedGrapheme],
) -> tuple[list[ClassifiedGrapheme], list[EmojiOccurrence]]:
    """Pull ordinary emoji out of the message, leaving informational ones in place.

    Each removed emoji leaves a single space behind so the words on either
    side do not fuse.
    """
    body: list[ClassifiedGrapheme] = []
    seen: dict[str, EmojiOccurrence] = {}
    for position, c in enumerate(classified):
        if c.kind is not GraphemeClass.EMOJI:
            body.append(c)
            continue
        key = c.emoji_key
        if key in seen:
            seen[key].count += 1
        else:
            seen[key] = EmojiOccurrence(c.emoji_record, position)
        g = c.grapheme
        body.append(ClassifiedGrapheme(Grapheme(" ", g.start, g.end), GraphemeClass.WHITESPACE))
    return body, list(seen.values())


def rank_emojis(occurrences: list[EmojiOccurrence]) -> list[EmojiOccurrence]:
    return sorted(occurrences, key=lambda o: (-o.record.popularity, o.record.name, o.first_position))


def build_trailer(ranked: list[EmojiOccurrence], has_body_text: bool, allow_spamming: bool) -> EmojiTrailer:
    if not ranked:
        return EmojiTrailer()
    names = [o.record.name for o in ranked]
    named = names if allow_spamming else names[:MAX_NAMED]
    suppressed = len(names) - len(named)
    parts = [f"{name} emoji" for name in named]
    if suppressed:
        parts.append(SUPPRESSOR)
    phrase = " ".join(parts)
    if has_body_text:
        phrase = "with " + phrase
    return EmojiTrailer(tuple(named), suppressed, phrase)


def inline_informational(body: list[ClassifiedGrapheme]) -> list[ClassifiedGrapheme]:
    """Replace keycap and letter emoji by their word, padded with spaces."""
    out: list[ClassifiedGrapheme] = []
    for c in body:
        if c.kind is not GraphemeClass.INFORMATIONAL_EMOJI:
            out.append(c)
            continue
        g = c.grapheme
        space = ClassifiedGrapheme(Grapheme(" ", g.start, g.start), GraphemeClass.WHITESPACE)
        word = ClassifiedGrapheme(Grapheme(c.emoji_record.word, g.start, g.end), GraphemeClass.TEXT)
        out.extend((space, word, ClassifiedGrapheme(Grapheme(" ", g.end, g.end), GraphemeClass.WHITESPACE)))
    return out
