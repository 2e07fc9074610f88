from lip.assets import EmojiRecord
from lip.emojis import EmojiOccurrence, build_trailer, extract_emojis, inline_informational, rank_emojis
from lip.segmentation import GraphemeClass, classify, segment


def _body_text(body):
    return "".join(c.text for c in body)


def _occ(name, popularity, position=0):
    return EmojiOccurrence(EmojiRecord(name, name, popularity), position)


def test_extract_keeps_informational(bundle):
    body, occurrences = extract_emojis(classify(segment("i will be there in 4️⃣ 🤣🤣 hours."), bundle))
    assert "4️⃣" in _body_text(body)
    assert [(o.record.name, o.count) for o in occurrences] == [("rolling on the floor laughing", 2)]
    assert not any(c.kind is GraphemeClass.EMOJI for c in body)


def test_extract_without_emoji(bundle):
    classified = classify(segment("plain words"), bundle)
    body, occurrences = extract_emojis(classified)
    assert body == classified and occurrences == []


def test_tone_variants_aggregate(bundle):
    _, occurrences = extract_emojis(classify(segment("🧒🧒🏽"), bundle))
    assert [(o.record.name, o.count) for o in occurrences] == [("child", 2)]


def test_rank_by_popularity():
    ranked = rank_emojis([_occ("house", 500, 0), _occ("star", 600, 1)])
    assert [o.record.name for o in ranked] == ["star", "house"]
    assert [o.record.name for o in rank_emojis([_occ("x", 1)])] == ["x"]


def test_rank_ties_alphabetical():
    ranked = rank_emojis([_occ("zebra", 7, 0), _occ("apple", 7, 1)])
    assert [o.record.name for o in ranked] == ["apple", "zebra"]


def test_trailer_single():
    assert build_trailer([_occ("partying face", 10)], True, False).phrase == "with partying face emoji"


def test_trailer_empty():
    assert build_trailer([], True, False).phrase == ""


def test_trailer_suppression(bundle):
    _, occ = extract_emojis(classify(segment("🏡🤩🕺✨"), bundle))
    trailer = build_trailer(rank_emojis(occ), True, False)
    assert trailer.phrase == (
        "with sparkles emoji star struck emoji man dancing emoji and some other emojis"
    )
    assert trailer.suppressed_count == 1


def test_trailer_without_body(bundle):
    _, occ = extract_emojis(classify(segment("🌞🎂🎈🙏☁️🎁🍕✨😂🎉😎🥳🤣"), bundle))
    trailer = build_trailer(rank_emojis(occ), False, False)
    assert trailer.phrase == (
        "face with tears of joy emoji sparkles emoji rolling on the floor laughing emoji "
        "and some other emojis"
    )


def test_trailer_spamming_names_everything(bundle):
    _, occ = extract_emojis(classify(segment("😂😂🤣✨🎉"), bundle))
    trailer = build_trailer(rank_emojis(occ), True, True)
    assert len(trailer.named) == 4 and trailer.suppressed_count == 0
    assert "and some other" not in trailer.phrase


def test_inline_informational(bundle):
    body, _ = extract_emojis(classify(segment("i will be there in 4️⃣ hours"), bundle))
    text = " ".join(_body_text(inline_informational(body)).split())
    assert text == "i will be there in four hours"
    body, _ = extract_emojis(classify(segment("🅰️ team"), bundle))
    assert " ".join(_body_text(inline_informational(body)).split()) == "a team"


def test_inline_leaves_plain_body(bundle):
    body, _ = extract_emojis(classify(segment("no emoji here"), bundle))
    assert inline_informational(body) == body
