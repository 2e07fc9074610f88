"""Loading and validation of the static dictionaries shipped in ``lip/data``."""

from __future__ import annotations

import functools
import json
import re
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Any

from .config import DEFAULT_ASSET_DIR
from .profanity import ProfanityListError, ProfanityMatcher, compile_matcher

ASSET_FILES = (
    "emoji_meta.json",
    "contractions.json",
    "collapsed_words.json",
    "wordlist.txt",
    "profanity.txt",
    "punctuation_names.json",
)

SKIN_TONES = frozenset(chr(c) for c in range(0x1F3FB, 0x1F400))
VS16 = "️"

_PHRASE = re.compile(r"[a-z]+(?: [a-z]+)*")


class AssetError(ValueError):
    """An asset file is missing, unreadable, or violates a bundle invariant."""


@dataclass(frozen=True)
class EmojiRecord:
    key: str
    name: str
    popularity: int
    informational: bool = False
    word: str | None = None


UNKNOWN_EMOJI = "unknown emoji"


@dataclass(frozen=True, eq=False)
class AssetBundle:
    emoji_table: Mapping[str, EmojiRecord]
    contractions: Mapping[str, str]
    collapsed_words: Mapping[str, str]
    word_list: frozenset[str]
    profanity_matcher: ProfanityMatcher
    punctuation_names: Mapping[str, str]
    file_sizes: Mapping[str, int]
    # Same records keyed with U+FE0F removed, so text-style and emoji-style
    # presentations of one emoji resolve identically.
    _loose_index: Mapping[str, EmojiRecord]

    @property
    def footprint_bytes(self) -> int:
        return sum(self.file_sizes.values())

    def lookup_emoji(self, key: str) -> EmojiRecord | None:
        record = self.emoji_table.get(key)
        if record is None:
            record = self._loose_index.get(key.replace(VS16, ""))
        return record

    def serialize(self) -> str:
        """Canonical JSON rendering of the bundle contents."""
        return json.dumps(
            {
                "emoji_table": {
                    k: [r.name, r.popularity, r.informational, r.word]
                    for k, r in sorted(self.emoji_table.items())
                },
                "contractions": dict(sorted(self.contractions.items())),
                "collapsed_words": dict(sorted(self.collapsed_words.items())),
                "word_list": sorted(self.word_list),
                "profanity": sorted(self.profanity_matcher.words),
                "punctuation_names": dict(sorted(self.punctuation_names.items())),
                "file_sizes": dict(sorted(self.file_sizes.items())),
            },
            ensure_ascii=False,
            sort_keys=True,
        )


def _read_json(path: Path) -> dict[str, Any]:
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        return {}
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AssetError(f"{path.name}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise AssetError(f"{path.name}: expected a JSON object")
    return data


def _read_lines(path: Path) -> list[str]:
    lines = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def _check_phrase(file: str, key: str, value: Any) -> str:
    if not isinstance(value, str) or not _PHRASE.fullmatch(value):
        raise AssetError(f"{file}: value for {key!r} must be lowercase words a-z, got {value!r}")
    return value


def _parse_emoji(data: dict[str, Any]) -> dict[str, EmojiRecord]:
    table = {}
    for key, entry in data.items():
        where = f"emoji_meta.json: entry {key!r}"
        if not key or any(c in SKIN_TONES for c in key):
            raise AssetError(f"{where} contains a skin-tone modifier")
        if not isinstance(entry, dict):
            raise AssetError(f"{where} must be an object")
        name = entry.get("name")
        if not isinstance(name, str) or not _PHRASE.fullmatch(name):
            raise AssetError(f"{where} needs a lowercase name without digits, got {name!r}")
        rank = entry.get("rank", 0)
        if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
            raise AssetError(f"{where} rank must be a non-negative integer")
        informational = entry.get("informational", False)
        if not isinstance(informational, bool):
            raise AssetError(f"{where} informational must be a boolean")
        word = entry.get("word")
        if informational:
            _check_phrase("emoji_meta.json", key, word)
        table[key] = EmojiRecord(key, name, rank, informational, word if informational else None)
    return table


def _audit_profanity(matcher: ProfanityMatcher, sources: dict[str, Mapping[str, str]]) -> None:
    for file, mapping in sources.items():
        for key, value in mapping.items():
            hit = matcher.search(value)
            if hit:
                raise AssetError(
                    f"{file}: value {value!r} for {key!r} contains profanity entry {hit.group()!r}"
                )


def load_assets(directory: str | Path = DEFAULT_ASSET_DIR) -> AssetBundle:
    """Load and validate every asset file in ``directory``.

    Word-list entries that are also contraction keys are dropped: such a
    word would be left alone when repaired from an elongation but expanded
    on a second pass.
    """
    directory = Path(directory)
    sizes = {}
    for name in ASSET_FILES:
        path = directory / name
        if not path.is_file():
            raise AssetError(f"missing asset file {name} in {directory}")
        sizes[name] = path.stat().st_size

    emoji_table = _parse_emoji(_read_json(directory / "emoji_meta.json"))
    contractions = _read_json(directory / "contractions.json")
    collapsed = _read_json(directory / "collapsed_words.json")
    punctuation = _read_json(directory / "punctuation_names.json")
    for file, mapping in (
        ("contractions.json", contractions),
        ("collapsed_words.json", collapsed),
        ("punctuation_names.json", punctuation),
    ):
        for key, value in mapping.items():
            if not key or key != key.lower() or any(c.isspace() for c in key):
                raise AssetError(f"{file}: key {key!r} must be lowercase without whitespace")
            _check_phrase(file, key, value)

    words = _read_lines(directory / "wordlist.txt")
    for w in words:
        if w != w.lower() or any(c.isspace() for c in w):
            raise AssetError(f"wordlist.txt: entry {w!r} must be a lowercase word")
    try:
        matcher = compile_matcher(_read_lines(directory / "profanity.txt"))
    except ProfanityListError as exc:
        raise AssetError(f"profanity.txt: {exc}") from exc

    _audit_profanity(
        matcher,
        {
            "contractions.json": contractions,
            "collapsed_words.json": collapsed,
            "punctuation_names.json": punctuation,
            "emoji_meta.json": {k: r.name for k, r in emoji_table.items()},
            "emoji_meta.json words": {k: r.word for k, r in emoji_table.items() if r.word},
        },
    )

    loose: dict[str, EmojiRecord] = {}
    for key, record in emoji_table.items():
        loose.setdefault(key.replace(VS16, ""), record)

    return AssetBundle(
        emoji_table=MappingProxyType(emoji_table),
        contractions=MappingProxyType(dict(contractions)),
        collapsed_words=MappingProxyType(dict(collapsed)),
        word_list=frozenset(words) - frozenset(contractions),
        profanity_matcher=matcher,
        punctuation_names=MappingProxyType(dict(punctuation)),
        file_sizes=MappingProxyType(sizes),
        _loose_index=MappingProxyType(loose),
    )


@functools.lru_cache(maxsize=8)
def default_assets(directory: str | Path = DEFAULT_ASSET_DIR) -> AssetBundle:
    """Cached :func:`load_assets`; bundles are immutable so sharing is safe."""
    return load_assets(directory)


def asset_footprint(bundle: AssetBundle) -> int:
    return bundle.footprint_bytes


def footprint_breakdown(bundle: AssetBundle) -> dict[str, int]:
    return dict(bundle.file_sizes)
