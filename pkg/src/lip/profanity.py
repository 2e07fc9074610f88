"""Whole-word swear-word masking."""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass

REPLACEMENT = "beep"

# Boundaries are spelled out instead of using \b: '_' counts as a word
# character for \b but is later turned into a space by punctuation stripping.
_LEFT = r"(?<![A-Za-z0-9])"
_RIGHT = r"(?![A-Za-z0-9])"
_RUN = re.compile(r"[A-Za-z0-9]+")


class ProfanityListError(ValueError):
    pass


@dataclass(frozen=True)
class ProfanityMatcher:
    words: tuple[str, ...]
    pattern: re.Pattern[str] | None
    lookup: frozenset[str] = frozenset()
    # Set probing is only exact when every entry is a plain alphanumeric word.
    probe: bool = False

    def __contains__(self, word: str) -> bool:
        return word in self.lookup

    def search(self, text: str) -> re.Match[str] | None:
        if self.pattern is None:
            return None
        return self.pattern.search(text)


def compile_matcher(words: Iterable[str]) -> ProfanityMatcher:
    """Compile ``word1|word2|...`` anchored on word boundaries, longest entry first."""
    entries = []
    for word in words:
        if not word or word != word.strip() or any(c.isspace() for c in word):
            raise ProfanityListError(f"profanity entry {word!r} is empty or contains whitespace")
        if word != word.lower():
            raise ProfanityListError(f"profanity entry {word!r} is not lowercase")
        if word == REPLACEMENT:
            raise ProfanityListError(f"{REPLACEMENT!r} cannot be a profanity entry")
        entries.append(word)
    ordered = tuple(sorted(set(entries), key=lambda w: (-len(w), w)))
    if not ordered:
        return ProfanityMatcher(words=(), pattern=None)
    alternation = "|".join(re.escape(w) for w in ordered)
    pattern = re.compile(f"{_LEFT}(?:{alternation}){_RIGHT}", re.IGNORECASE)
    probe = all(w.isascii() and w.isalnum() for w in ordered)
    return ProfanityMatcher(words=ordered, pattern=pattern, lookup=frozenset(ordered), probe=probe)


def censor(text: str, matcher: ProfanityMatcher) -> str:
    if matcher.pattern is None:
        return text
    # Any whole-word hit is a maximal alphanumeric run, so a set probe decides
    # cheaply whether the alternation needs to run at all.
    if matcher.probe and not any(m.group().lower() in matcher.lookup for m in _RUN.finditer(text)):
        return text
    return matcher.pattern.sub(REPLACEMENT, text)
