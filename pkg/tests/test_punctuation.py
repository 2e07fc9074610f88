import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lip.punctuation import join_contractions, punctuation_readout, strip_punctuation

ALL_NAMES = (
    "exclamation mark at symbol hash symbol dollar sign percentage symbol ampersand sign "
    "asterisk opening bracket closing bracket"
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("yes!!!! its holiday today", "yes its holiday today"),
        ("no punctuation here", "no punctuation here"),
        ("i missed that question??", "i missed that question?"),
        ("it's fine", "its fine"),
        ("snake_case  words", "snake case words"),
        ("", ""),
    ],
)
def test_strip(text, expected):
    assert strip_punctuation(text) == expected


def test_join_contractions_only_between_letters():
    assert join_contractions("don't 'quote' 90's") == "dont 'quote' 90's"


@settings(max_examples=500)
@given(st.text(alphabet=st.characters(codec="ascii")))
def test_strip_alphabet(text):
    assert re.fullmatch(r"[a-zA-Z0-9 ?]*", strip_punctuation(text))


def test_readout_examples(bundle):
    r = punctuation_readout("!@#$%&*()", bundle, False)
    assert r.phrase == "exclamation mark at symbol and some other punctuations"
    assert r.named == ("exclamation mark", "at symbol") and r.suppressed_count == 7
    assert punctuation_readout("!", bundle, False).phrase == "exclamation mark"
    assert punctuation_readout("!@#$%&*()", bundle, True).phrase == ALL_NAMES


def test_readout_repetition(bundle):
    assert punctuation_readout("!!!", bundle, False) == punctuation_readout("!", bundle, False)


def test_unknown_mark_counts_as_suppressed(bundle):
    r = punctuation_readout("!‽", bundle, False)
    assert r.named == ("exclamation mark",) and r.suppressed_count == 1
    assert r.phrase == "exclamation mark and some other punctuations"


@settings(max_examples=300)
@given(st.text(alphabet="!@#$%^&*()-_=+[]{};:'\",.<>/?\\|`~§"))
def test_named_cap(bundle, marks):
    assert len(punctuation_readout(marks, bundle, False).named) <= 2
