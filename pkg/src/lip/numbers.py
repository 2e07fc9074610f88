"""Cardinal, digit-by-digit and year readings of numbers."""

from __future__ import annotations

ONES = (
    "zero one two three four five six seven eight nine ten eleven twelve thirteen "
    "fourteen fifteen sixteen seventeen eighteen nineteen"
).split()
TENS = "_ _ twenty thirty forty fifty sixty seventy eighty ninety".split()
SCALES = ("", "thousand", "million", "billion")
LIMIT = 10**12

_ORDINAL_WORDS = {
    "one": "first",
    "two": "second",
    "three": "third",
    "five": "fifth",
    "eight": "eighth",
    "nine": "ninth",
    "twelve": "twelfth",
}


def _below_hundred(n: int) -> str:
    if n < 20:
        return ONES[n]
    tens, units = divmod(n, 10)
    return TENS[tens] + (f"-{ONES[units]}" if units else "")


def _group(n: int) -> str:
    hundreds, rest = divmod(n, 100)
    if not hundreds:
        return _below_hundred(rest)
    words = f"{ONES[hundreds]} hundred"
    if rest:
        words += f" and {_below_hundred(rest)}"
    return words


def number_to_words(n: int) -> str:
    """Short-scale cardinal; "and" joins hundreds to the tens within a group.

    >>> number_to_words(9321673878)
    'nine billion three hundred and twenty-one million six hundred and seventy-three thousand eight hundred and seventy-eight'
    """
    if n < 0:
        raise ValueError("negative numbers are not supported")
    if n >= LIMIT:
        return digits_to_words(str(n))
    if n == 0:
        return ONES[0]
    parts = []
    scale = 0
    while n:
        n, chunk = divmod(n, 1000)
        if chunk:
            parts.append(_group(chunk) + (f" {SCALES[scale]}" if scale else ""))
        scale += 1
    return " ".join(reversed(parts))


def digits_to_words(ds: str) -> str:
    return " ".join(ONES[int(d)] for d in ds)


def ordinal_words(n: int) -> str:
    words = number_to_words(n)
    head, sep, last = words.rpartition(" ")
    stem_sep = "-" if "-" in last else ""
    prefix, _, unit = last.rpartition("-") if stem_sep else ("", "", last)
    if unit in _ORDINAL_WORDS:
        unit = _ORDINAL_WORDS[unit]
    elif unit.endswith("y"):
        unit = unit[:-1] + "ieth"
    else:
        unit += "th"
    last = f"{prefix}{stem_sep}{unit}"
    return f"{head}{sep}{last}"


def year_to_words(ds: str) -> str:
    """Read a year as two pairs: 2018 -> twenty eighteen, 1905 -> nineteen oh five."""
    if len(ds) != 4:
        return number_to_words(int(ds))
    century, rest = int(ds[:2]), int(ds[2:])
    if century == 0 or (rest == 0 and century % 10 == 0):
        return number_to_words(int(ds))
    if rest == 0:
        return f"{number_to_words(century)} hundred"
    if rest < 10:
        return f"{number_to_words(century)} oh {ONES[rest]}"
    return f"{number_to_words(century)} {number_to_words(rest)}"
