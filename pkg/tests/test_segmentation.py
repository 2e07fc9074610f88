import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lip.segmentation import (
    GraphemeClass,
    classify,
    count_unique_emojis,
    fold_ascii,
    has_alphanumeric,
    lowercase,
    segment,
    strip_skin_tone,
    strip_tone_text,
)


def _classes(text, bundle):
    return classify(segment(text), bundle)


@pytest.mark.parametrize(
    "text, expected",
    [("Yesss!!!!", "yesss!!!!"), ("", ""), ("ABC123😄", "abc123😄"), ("İx", "İx")],
)
def test_lowercase(text, expected):
    assert lowercase(text) == expected


@pytest.mark.parametrize("text, count", [("4️⃣", 1), ("ab", 2), ("🧒🏽", 1), ("", 0), ("👨‍👩‍👧", 1), ("🇮🇳", 1)])
def test_segment_counts(text, count):
    assert len(segment(text)) == count


def test_segment_offsets():
    graphemes = segment("a🧒🏽b")
    assert [(g.start, g.end) for g in graphemes] == [(0, 1), (1, 3), (3, 4)]


def test_strip_skin_tone():
    (g,) = segment("🧒🏽")
    assert strip_skin_tone(g).text == "🧒"
    (plain,) = segment("🧒")
    assert strip_skin_tone(plain) is plain
    assert strip_tone_text("🏽") == ""


def test_classify_examples(bundle):
    (keycap,) = _classes("4️⃣", bundle)
    assert keycap.kind is GraphemeClass.INFORMATIONAL_EMOJI
    assert keycap.emoji_record.word == "four"
    (q,) = _classes("?", bundle)
    assert q.kind is GraphemeClass.PUNCTUATION
    (party,) = _classes("🥳", bundle)
    assert party.kind is GraphemeClass.EMOJI and party.emoji_record.name == "partying face"
    (toned,) = _classes("👍🏽", bundle)
    assert toned.emoji_record.name == "thumbs up"


def test_unknown_pictograph_falls_back(bundle):
    (g,) = _classes("\U0001F8FF", bundle)
    assert g.kind is GraphemeClass.EMOJI
    assert g.emoji_record.name == "unknown emoji" and g.emoji_record.popularity == 0


def test_text_presentation_heart(bundle):
    (g,) = _classes("❤", bundle)
    assert g.emoji_record.name == "red heart"


@pytest.mark.parametrize("text, expected", [("!@#$%&*()", False), ("a!", True), ("4️⃣🤣", False), ("é", True), ("", False)])
def test_has_alphanumeric(text, expected, bundle):
    assert has_alphanumeric(_classes(text, bundle)) is expected


@pytest.mark.parametrize("text, expected", [("🥳🥳🥳", 1), ("", 0), ("🧒🧒🏽", 1), ("😂🤣4️⃣", 3)])
def test_count_unique(text, expected, bundle):
    assert count_unique_emojis(_classes(text, bundle)) == expected


def test_fold_ascii():
    assert fold_ascii("É") == "e"
    assert fold_ascii("’") == "'"
    assert fold_ascii("٣") == "3"
    assert fold_ascii("中") == ""


@settings(max_examples=1000)
@given(st.text())
def test_segment_lossless(text):
    graphemes = segment(text)
    assert "".join(g.text for g in graphemes) == text
    assert all(a.end == b.start for a, b in zip(graphemes, graphemes[1:]))


@settings(max_examples=300)
@given(st.text())
def test_classify_total(bundle, text):
    classified = classify(segment(text), bundle)
    assert len(classified) == len(segment(text))
    assert all(isinstance(c.kind, GraphemeClass) for c in classified)


@settings(max_examples=300)
@given(st.text())
def test_strip_idempotent(text):
    for g in segment(text):
        assert strip_skin_tone(strip_skin_tone(g)) == strip_skin_tone(g)


@settings(max_examples=300)
@given(st.lists(st.sampled_from(list("!?.,;:@#$%&*() \t") + ["😂", "🥳", "🧒🏽", "4️⃣", "🅰️"])).map("".join))
def test_no_text_means_no_alphanumeric(bundle, text):
    assert not has_alphanumeric(_classes(text, bundle))
