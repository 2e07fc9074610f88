"""SMS shorthand expansion and repair of elongated words ("yesss", "messsaaageee")."""

from __future__ import annotations

import itertools
import re
from collections.abc import Callable, Iterable

from .assets import AssetBundle
from .entities import is_entity_token

MAX_RUNS = 8

_REPEATS = re.compile(r"(.)\1+")
_WORD = re.compile(r"[a-z0-9]+")


def collapse_full(token: str) -> str:
    return _REPEATS.sub(r"\1", token)


def token_runs(token: str) -> list[tuple[str, int]]:
    return [(ch, len(list(group))) for ch, group in itertools.groupby(token)]


def candidate_forms(token: str) -> list[str]:
    """Every spelling with each repeated run cut to two or one characters.

    Doubles are tried before singles, leftmost run first; the list always
    ends with the fully collapsed form.
    """
    runs = token_runs(token)
    repeated = [i for i, (_, n) in enumerate(runs) if n >= 2]
    if not repeated:
        return [token]
    if len(repeated) > MAX_RUNS:
        return [collapse_full(token)]
    out: list[str] = []
    seen: set[str] = set()
    for lengths in itertools.product((2, 1), repeat=len(repeated)):
        chosen = dict(zip(repeated, lengths))
        form = "".join(ch * chosen.get(i, n) for i, (ch, n) in enumerate(runs))
        if form not in seen:
            seen.add(form)
            out.append(form)
    return out


def normalize_token(token: str, bundle: AssetBundle) -> str:
    expansion = bundle.contractions.get(token)
    if expansion is not None:
        return expansion
    for form in candidate_forms(token):
        if form in bundle.word_list:
            return form
    collapsed = collapse_full(token)
    if collapsed in bundle.collapsed_words:
        return bundle.collapsed_words[collapsed]
    if collapsed in bundle.contractions:
        return bundle.contractions[collapsed]
    return token


def _normalize_word(match: re.Match[str], bundle: AssetBundle) -> str:
    word = match.group()
    if word.isdigit():
        return word
    return normalize_token(word, bundle)


def normalize_text(
    tokens: Iterable[str],
    bundle: AssetBundle,
    protect: Callable[[str], bool] = is_entity_token,
) -> list[str]:
    """Normalize every word inside each token, leaving entity tokens to the entity pass.

    A token such as ``"fb,"`` is normalized word by word (``"facebook,"``), so
    the words surviving punctuation removal are exactly the ones seen here.
    """
    out: list[str] = []
    for token in tokens:
        if protect(token):
            out.append(token)
            continue
        out.extend(_WORD.sub(lambda m: _normalize_word(m, bundle), token).split())
    return out


def audit_fixed_points(bundle: AssetBundle) -> list[tuple[str, str]]:
    """Dictionary output words that normalization would rewrite again.

    Any hit breaks idempotence of the pipeline; the shipped assets must
    produce an empty list.
    """
    sources = {
        "contractions": bundle.contractions.values(),
        "collapsed_words": bundle.collapsed_words.values(),
        "punctuation_names": bundle.punctuation_names.values(),
        "emoji names": (r.name for r in bundle.emoji_table.values()),
        "informational words": (r.word for r in bundle.emoji_table.values() if r.word),
    }
    bad = []
    for source, phrases in sources.items():
        for phrase in phrases:
            for word in phrase.split():
                if normalize_token(word, bundle) != word:
                    bad.append((source, word))
    return bad
