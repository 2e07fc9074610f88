"""Token-level entity detection, PII masking and verbalization.

Every pattern is anchored to a whole whitespace token, so a date embedded in
a link is never read as a date: the link pattern claims the whole token
first. Patterns that naturally span several tokens ("$ 100", Aadhaar groups
"3675 9834 6012", "+91 98765 43210") are matched on a sliding window before
the per-token pass.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Callable
from dataclasses import dataclass

from .config import Config
from .numbers import LIMIT, digits_to_words, number_to_words, ordinal_words, year_to_words


class EntityKind(enum.Enum):
    # Declaration order is matching precedence.
    URL = "url"
    EMAIL = "email"
    MENTION = "mention"
    HASHTAG = "hashtag"
    CURRENCY = "currency"
    PERCENTAGE = "percentage"
    TIME = "time"
    DATE = "date"
    AADHAAR = "aadhaar"
    DRIVING_LICENCE = "driving_licence"
    PHONE = "phone"
    LENGTH = "length"
    FRACTION = "fraction"
    DECIMAL = "decimal"
    INTEGER = "integer"


PII_KINDS = frozenset({EntityKind.EMAIL, EntityKind.PHONE, EntityKind.AADHAAR, EntityKind.DRIVING_LICENCE})


@dataclass(frozen=True)
class EntitySpan:
    kind: EntityKind
    source: str
    token_range: tuple[int, int]
    verbalization: str = ""


_TLDS = "com|org|net|in|io|co|edu|gov|info|biz|me|ly|uk|us|ai|app|dev|ca|au|de|fr|jp|tv|xyz|online|site"
_AMOUNT = r"\d{1,3}(?:,\d{3})+(?:\.\d+)?|\d+(?:\.\d+)?"
_SYMBOL = r"[$₹€£]|rs\.?|inr"

_MONTHS = (
    "january february march april may june july august september october november december"
).split()

_CURRENCY_UNITS = {
    "$": ("dollar", "dollars"),
    "₹": ("rupee", "rupees"),
    "rs": ("rupee", "rupees"),
    "inr": ("rupee", "rupees"),
    "€": ("euro", "euros"),
    "£": ("pound", "pounds"),
}


def _valid_date(m: re.Match[str]) -> bool:
    if m.group("y1"):
        day, month = int(m.group("d1")), int(m.group("m1"))
    else:
        day, month = int(m.group("d2")), int(m.group("m2"))
    return 1 <= month <= 12 and 1 <= day <= 31


_TOKEN_PATTERNS: list[tuple[EntityKind, re.Pattern[str], Callable[[re.Match[str]], bool] | None]] = [
    (
        EntityKind.URL,
        re.compile(
            rf"(?:https?://|www\.)\S+|[a-z0-9-]+(?:\.[a-z0-9-]+)*\.(?:{_TLDS})(?::\d+)?(?:[/?#]\S*)?"
        ),
        None,
    ),
    (EntityKind.EMAIL, re.compile(r"[a-z0-9._%+-]+@[a-z0-9-]+(?:\.[a-z0-9-]+)*\.[a-z]{2,}"), None),
    (EntityKind.MENTION, re.compile(r"@[a-z0-9_]+"), None),
    (EntityKind.HASHTAG, re.compile(r"#[a-z0-9_]+"), None),
    (EntityKind.CURRENCY, re.compile(rf"(?:{_SYMBOL})(?:{_AMOUNT})|(?:{_AMOUNT})[$₹€£]"), None),
    (EntityKind.PERCENTAGE, re.compile(rf"(?:{_AMOUNT})%"), None),
    (EntityKind.TIME, re.compile(r"(?:[01]?\d|2[0-3]):[0-5]\d(?:am|pm)?"), None),
    (
        EntityKind.DATE,
        re.compile(
            r"(?P<y1>\d{4})(?P<s1>[/.-])(?P<m1>\d{1,2})(?P=s1)(?P<d1>\d{1,2})"
            r"|(?P<d2>\d{1,2})(?P<s2>[/.-])(?P<m2>\d{1,2})(?P=s2)(?P<y2>\d{4}|\d{2})"
        ),
        _valid_date,
    ),
    (EntityKind.AADHAAR, re.compile(r"\d{4}(-?)\d{4}\1\d{4}"), None),
    (EntityKind.DRIVING_LICENCE, re.compile(r"[a-z]{2}\d{2}-?[a-z0-9]{11}"), None),
    (
        EntityKind.PHONE,
        re.compile(r"(?:\+?91-?|0)?(?:\d{10}|\d{5}-\d{5}|\d{3}-\d{3}-\d{4})"),
        None,
    ),
    (EntityKind.LENGTH, re.compile(r"\d+'\d+\"?|\d+['\"]|\d+(?:\.\d+)?(?:ft|feet)"), None),
    (EntityKind.FRACTION, re.compile(r"\d+/\d+"), None),
    (EntityKind.DECIMAL, re.compile(r"(?:\d{1,3}(?:,\d{3})+|\d+)\.\d+"), None),
    (EntityKind.INTEGER, re.compile(r"\d{1,3}(?:,\d{3})+|\d+(?:st|nd|rd|th)?"), None),
]

# Matched against space-joined windows of 3, then 2 tokens.
_WINDOW_PATTERNS: dict[int, list[tuple[EntityKind, re.Pattern[str]]]] = {
    3: [
        (EntityKind.AADHAAR, re.compile(r"\d{4} \d{4} \d{4}")),
        (EntityKind.PHONE, re.compile(r"(?:\+?91|0) \d{5} \d{5}|\d{3} \d{3} \d{4}")),
    ],
    2: [
        (EntityKind.CURRENCY, re.compile(rf"(?:{_SYMBOL}) (?:{_AMOUNT})|(?:{_AMOUNT}) [$₹€£]")),
        (EntityKind.DRIVING_LICENCE, re.compile(r"[a-z]{2}\d{2} [a-z0-9]{11}")),
        (EntityKind.PHONE, re.compile(r"\d{5} \d{5}|(?:\+?91|0) \d{10}")),
    ],
}

_EDGE = re.compile(r"^([^0-9a-z$₹€£#@+]*)(.*?)([^0-9a-z%$₹€£]*)$", re.DOTALL)
_DIGIT_RUN = re.compile(r"\d+")
# A lone decimal inside free text ("1.5m"); dotted sequences like 1.2.3 stay digit runs.
_NUMBER_RUN = re.compile(r"(?<![\d.])\d+\.\d+(?![.\d])|\d+")


def split_edges(token: str) -> tuple[str, str, str]:
    """Split surrounding punctuation off a token: ``"(9am)."`` -> ``("(", "9am", ").")``."""
    m = _EDGE.match(token)
    return m.group(1), m.group(2), m.group(3)


def _match_token(token: str) -> EntityKind | None:
    for kind, pattern, valid in _TOKEN_PATTERNS:
        m = pattern.fullmatch(token)
        if m and (valid is None or valid(m)):
            return kind
    return None


def classify_token(token: str) -> EntityKind | None:
    """First kind (in precedence order) whose pattern covers the entire token."""
    return _match_token(token)


_ENTITY_MARKERS = frozenset("0123456789@#.")


def _classify_with_edges(token: str) -> tuple[EntityKind, str, str, str] | None:
    # Every pattern needs a digit, '@', '#' or '.'.
    if _ENTITY_MARKERS.isdisjoint(token):
        return None
    kind = _match_token(token)
    if kind is not None:
        return kind, "", token, ""
    lead, core, trail = split_edges(token)
    if core and core != token:
        kind = _match_token(core)
        if kind is not None:
            return kind, lead, core, trail
    return None


def is_entity_token(token: str) -> bool:
    return _classify_with_edges(token) is not None


def scan_multi_token(tokens: list[str]) -> list[EntitySpan]:
    spans: list[EntitySpan] = []
    has_digit = [_DIGIT_RUN.search(t) is not None for t in tokens]
    if not any(has_digit):
        return spans
    i = 0
    while i < len(tokens):
        for width in (3, 2):
            window = tokens[i : i + width]
            if len(window) < width:
                continue
            if not (has_digit[i] or has_digit[i + width - 1]):
                continue
            _, first, _ = split_edges(window[0])
            _, last, _ = split_edges(window[-1])
            inner = window[1:-1]
            joined = " ".join([first, *inner, last])
            hit = next((k for k, p in _WINDOW_PATTERNS[width] if p.fullmatch(joined)), None)
            if hit is not None:
                spans.append(EntitySpan(hit, joined, (i, i + width)))
                i += width
                break
        else:
            i += 1
    return spans


def _read_digit_run(ds: str) -> str:
    if len(ds) <= 4 and (ds == "0" or not ds.startswith("0")):
        return number_to_words(int(ds))
    return digits_to_words(ds)


def _read_number_run(run: str) -> str:
    whole, _, frac = run.partition(".")
    if frac:
        return f"{_read_digit_run(whole)} point {digits_to_words(frac)}"
    return _read_digit_run(run)


def speak_digits_in(text: str) -> str:
    """Verbalize every digit run inside free text (``"abc123"`` -> ``"abc one hundred ..."``)."""
    return " ".join(_NUMBER_RUN.sub(lambda m: f" {_read_number_run(m.group())} ", text).split())


def _speak_word(text: str) -> str:
    return " ".join(speak_digits_in(re.sub(r"[^a-z0-9]+", " ", text)).split())


def _amount_words(amount: str) -> tuple[str, bool]:
    amount = amount.replace(",", "")
    whole, _, frac = amount.partition(".")
    n = int(whole)
    words = number_to_words(n) if n < LIMIT else digits_to_words(whole)
    if frac:
        return f"{words} point {digits_to_words(frac)}", False
    return words, n == 1


def _verbalize_currency(source: str) -> str:
    compact = source.replace(" ", "")
    m = re.fullmatch(rf"({_SYMBOL})({_AMOUNT})|({_AMOUNT})([$₹€£])", compact)
    symbol = (m.group(1) or m.group(4)).rstrip(".")
    amount = m.group(2) or m.group(3)
    words, singular = _amount_words(amount)
    one, many = _CURRENCY_UNITS[symbol]
    return f"{words} {one if singular else many}"


def _verbalize_time(source: str) -> str:
    m = re.fullmatch(r"(\d{1,2}):(\d{2})(am|pm)?", source)
    hour, minute, suffix = int(m.group(1)), int(m.group(2)), m.group(3)
    words = f"{number_to_words(hour)} o clock" if minute == 0 else f"{number_to_words(hour)} {number_to_words(minute)}"
    if suffix:
        words += f" {suffix[0]} m"
    return words


def _verbalize_date(source: str) -> str:
    for _, pattern, _ in _TOKEN_PATTERNS:
        if "y1" in pattern.groupindex:
            m = pattern.fullmatch(source)
            break
    if m.group("y1"):
        year, month, day = m.group("y1"), int(m.group("m1")), int(m.group("d1"))
    else:
        year, month, day = m.group("y2"), int(m.group("m2")), int(m.group("d2"))
    return f"{number_to_words(day)} {_MONTHS[month - 1]} {year_to_words(year)}"


def _verbalize_length(source: str) -> str:
    m = re.fullmatch(r"(\d+)'(\d+)\"?", source)
    if m:
        feet, inches = int(m.group(1)), int(m.group(2))
        return f"{number_to_words(feet)} {'foot' if feet == 1 else 'feet'} {number_to_words(inches)} {'inch' if inches == 1 else 'inches'}"
    m = re.fullmatch(r"(\d+)(['\"])", source)
    if m:
        n = int(m.group(1))
        if m.group(2) == "'":
            return f"{number_to_words(n)} {'foot' if n == 1 else 'feet'}"
        return f"{number_to_words(n)} {'inch' if n == 1 else 'inches'}"
    m = re.fullmatch(r"(\d+(?:\.\d+)?)(?:ft|feet)", source)
    words, singular = _amount_words(m.group(1))
    return f"{words} {'foot' if singular else 'feet'}"


def _verbalize_url(source: str) -> str:
    host = re.sub(r"^(?:https?://)?(?:www\.)?", "", source)
    host = re.split(r"[/?#:]", host, maxsplit=1)[0]
    labels = [_speak_word(label) for label in host.split(".") if label]
    return "link to " + " dot ".join(label for label in labels if label)


def _verbalize_email(source: str, masked: bool) -> str:
    if masked:
        return "email"
    local, _, domain = source.partition("@")
    local_words = " dot ".join(_speak_word(p) for p in local.split(".") if _speak_word(p))
    domain_words = " dot ".join(_speak_word(p) for p in domain.split(".") if _speak_word(p))
    return f"{local_words} at {domain_words}"


def _spell(source: str) -> str:
    return " ".join(digits_to_words(c) if c.isdigit() else c for c in source if c.isalnum())


def verbalize(span: EntitySpan, config: Config) -> str:
    """Speakable, digit-free rendering of an entity, masking PII as configured."""
    kind, source = span.kind, span.source
    masked = not config.disable_pii_masking
    if kind is EntityKind.PHONE:
        digits = re.sub(r"\D", "", source)
        if config.show_phonenumber or not masked:
            return digits_to_words(digits)
        return f"a {number_to_words(len(digits))} digit number"
    if kind is EntityKind.AADHAAR:
        return "a twelve digit number" if masked else digits_to_words(re.sub(r"\D", "", source))
    if kind is EntityKind.DRIVING_LICENCE:
        return "a driving licence number" if masked else _spell(source)
    if kind is EntityKind.EMAIL:
        return _verbalize_email(source, masked)
    if kind is EntityKind.URL:
        return _verbalize_url(source)
    if kind is EntityKind.MENTION:
        return f"at {_speak_word(source[1:])}".strip()
    if kind is EntityKind.HASHTAG:
        return f"hashtag {_speak_word(source[1:])}".strip()
    if kind is EntityKind.CURRENCY:
        return _verbalize_currency(source)
    if kind is EntityKind.PERCENTAGE:
        return f"{_amount_words(source[:-1])[0]} percent"
    if kind is EntityKind.TIME:
        return _verbalize_time(source)
    if kind is EntityKind.DATE:
        return _verbalize_date(source)
    if kind is EntityKind.LENGTH:
        return _verbalize_length(source)
    if kind is EntityKind.FRACTION:
        a, b = source.split("/")
        return f"{_amount_words(a)[0]} by {_amount_words(b)[0]}"
    if kind is EntityKind.DECIMAL:
        return _amount_words(source)[0]
    if kind is EntityKind.INTEGER:
        m = re.fullmatch(r"(\d+)(st|nd|rd|th)", source)
        if m and int(m.group(1)) < LIMIT:
            return ordinal_words(int(m.group(1)))
        return _amount_words(source.replace(",", "") if not m else m.group(1))[0]
    raise ValueError(f"unhandled entity kind {kind}")


def find_entities(tokens: list[str]) -> list[tuple[EntitySpan, str, str]]:
    """All spans in ``tokens`` with the punctuation that surrounded them."""
    found: list[tuple[EntitySpan, str, str]] = []
    consumed: set[int] = set()
    for span in scan_multi_token(tokens):
        start, stop = span.token_range
        consumed.update(range(start, stop))
        lead, _, _ = split_edges(tokens[start])
        _, _, trail = split_edges(tokens[stop - 1])
        found.append((span, lead, trail))
    for i, token in enumerate(tokens):
        if i in consumed:
            continue
        hit = _classify_with_edges(token)
        if hit is not None:
            kind, lead, core, trail = hit
            found.append((EntitySpan(kind, core, (i, i + 1)), lead, trail))
    found.sort(key=lambda item: item[0].token_range)
    return found


def apply_entities(tokens: list[str], config: Config) -> list[str]:
    """Replace entities by their verbalization; spell out any digits left over."""
    replacements: dict[int, tuple[int, str]] = {}
    for span, lead, trail in find_entities(tokens):
        start, stop = span.token_range
        replacements[start] = (stop, f"{lead} {verbalize(span, config)} {trail}")
    out: list[str] = []
    i = 0
    while i < len(tokens):
        if i in replacements:
            stop, text = replacements[i]
            out.extend(text.split())
            i = stop
            continue
        token = tokens[i]
        if _DIGIT_RUN.search(token):
            out.extend(speak_digits_in(token).split())
        else:
            out.append(token)
        i += 1
    return out


def find_pii(text: str) -> list[EntitySpan]:
    return [span for span, _, _ in find_entities(text.split()) if span.kind in PII_KINDS]
