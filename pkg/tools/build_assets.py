#!/usr/bin/env python3
"""Regenerate the shipped dictionaries under src/lip/data/.

Development-only: needs ``emoji``, ``wordfreq`` and ``better_profanity``,
none of which are runtime dependencies. The output is committed.

    python tools/build_assets.py
"""

from __future__ import annotations

import json
import re
import unicodedata
from pathlib import Path

import better_profanity
import emoji
from wordfreq import top_n_list

OUT = Path(__file__).resolve().parents[1] / "src" / "lip" / "data"
WORDLIST_SIZE = 50_000
SKIN_TONES = {chr(c) for c in range(0x1F3FB, 0x1F400)}

NUMBER_WORDS = (
    "zero one two three four five six seven eight nine ten eleven twelve thirteen "
    "fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty "
    "sixty seventy eighty ninety hundred thousand million billion and point oh"
).split()
ORDINALS = {"1st": "first", "2nd": "second", "3rd": "third"}

# Ordered most to least popular. Ranks are spaced by ten and anchored on
# rolling on the floor laughing == 5000; everything else is ranked by age.
POPULAR = (
    "😂 ❤️ ✨ 🤣 😊 🙏 👍 😭 😘 🥰 😍 🤩 🕺 🎉 😁 💕 🥺 😅 🔥 ☺️ 🤦 ♥️ 🤷 🙄 😆 🤗 😉 "
    "🎂 🤔 👏 🙂 😳 🥳 😎 👌 💜 😔 💪 💖 👀 😋 😏 😢 👉 💗 😩 💯 🌹 💞 🎈 💙 😃 😡 💐 "
    "😜 🙈 🤞 😄 🤤 🙌 🤪 ❣️ 😀 💋 💀 👇 💔 😌 💓 🙃 😬 😱 😴 🤭 😐 🌞 😒 😇 🌸 😈 🎶 "
    "✌️ 🎊 🥵 😞 💚 ☀️ 🖤 💰 😚 👑 🎁 💥 🙋 ☹️ 😑 🥴 👈 💩 ✅ 👋 🤮 😤 🤢 🌟 ❗ 😥 🌈 "
    "💛 😝 😫 😲 🖕 ‼️ 🔴 🌻 🤯 💃 👊 🤬 🏃 😕 👁️ ⚡ ☕ 🍀 💦 ⭐ 🦋 🤨 🌺 😹 🤘 🌷 💝 "
    "💤 🤝 🐰 😓 💘 🍻 😟 😣 🧐 😠 🤠 😻 🌙 😛 🤙 🙊 🏠 🍕 ☁️ 📺 🕶️ 🏡"
).split()
PINNED_RANK = ("🤣", 5000)

INFORMATIONAL_WORDS = {
    **{f"{d}️⃣": w for d, w in zip("0123456789", NUMBER_WORDS[:10])},
    "#️⃣": "hash",
    "*️⃣": "star",
    "🔟": "ten",
    "🅰️": "a",
    "🅱️": "b",
    "🅾️": "o",
    "🅿️": "p",
    "Ⓜ️": "m",
}

CONTRACTIONS = {
    "msg": "message", "msgs": "messages", "messg": "message", "msging": "messaging",
    "hv": "have", "u": "you", "ur": "your", "r": "are", "n": "and", "plz": "please",
    "pls": "please", "plss": "please", "chk": "check", "knw": "know", "kno": "know",
    "fb": "facebook", "2day": "today", "2moro": "tomorrow", "2morrow": "tomorrow",
    "tmrw": "tomorrow", "tmr": "tomorrow", "2nite": "tonight", "tonite": "tonight",
    "b4": "before", "gr8": "great", "l8r": "later", "l8": "late", "w8": "wait",
    "thx": "thanks", "thnx": "thanks", "tnx": "thanks", "thanx": "thanks",
    "ty": "thank you", "ppl": "people", "abt": "about", "bc": "because",
    "coz": "because", "cuz": "because", "bcoz": "because", "becoz": "because",
    "bcz": "because", "wat": "what", "wht": "what", "wen": "when", "whr": "where",
    "btw": "by the way", "brb": "be right back", "idk": "i do not know",
    "imo": "in my opinion", "imho": "in my humble opinion", "lol": "laughing out loud",
    "nvm": "never mind", "gn": "good night", "gm": "good morning",
    "ttyl": "talk to you later", "ttys": "talk to you soon", "tc": "take care",
    "hru": "how are you", "wbu": "what about you", "k": "okay", "kk": "okay",
    "dm": "direct message", "pic": "picture", "pics": "pictures",
    "govt": "government", "info": "information", "bday": "birthday",
    "hbd": "happy birthday", "bro": "brother", "sis": "sister", "luv": "love",
    "frnd": "friend", "frnds": "friends", "gud": "good", "nyt": "night",
    "nite": "night", "txt": "text", "sry": "sorry", "srry": "sorry", "wid": "with",
    "dat": "that", "dis": "this", "jus": "just", "juz": "just", "wanna": "want to",
    "gonna": "going to", "gotta": "got to", "lemme": "let me", "gimme": "give me",
    "dunno": "do not know", "hrs": "hours", "mins": "minutes", "asap": "as soon as possible",
    "fyi": "for your information", "np": "no problem", "jk": "just kidding",
    "hw": "homework", "tho": "though", "thru": "through", "bf": "boyfriend",
    "gf": "girlfriend", "ily": "i love you", "ilu": "i love you", "cya": "see you",
    "cud": "could", "shud": "should", "wud": "would", "4u": "for you",
    "2gether": "together", "some1": "someone", "any1": "anyone", "ne1": "anyone",
    "every1": "everyone", "no1": "no one", "prob": "probably", "probs": "probably",
    "rly": "really", "rlly": "really", "srsly": "seriously", "congrats": "congratulations",
    "grats": "congratulations", "irl": "in real life", "afaik": "as far as i know",
    "tbh": "to be honest", "smh": "shaking my head", "ikr": "i know right",
    "fam": "family", "convo": "conversation", "fav": "favourite", "fave": "favourite",
    "yday": "yesterday", "wkend": "weekend", "xmas": "christmas", "bdy": "birthday",
    "ques": "question", "ans": "answer", "pwd": "password", "addr": "address",
    "yr": "year", "yrs": "years", "mnth": "month", "wk": "week", "wks": "weeks",
    "tym": "time", "gng": "going", "nthng": "nothing", "smthng": "something",
    "evry": "every", "evryone": "everyone", "bt": "but", "nd": "and", "hpy": "happy",
    "bday2u": "happy birthday to you", "gudnyt": "good night", "gm8": "good mate",
}

PUNCTUATION_NAMES = {
    "!": "exclamation mark", '"': "double quote", "#": "hash symbol",
    "$": "dollar sign", "%": "percentage symbol", "&": "ampersand sign",
    "'": "apostrophe", "(": "opening bracket", ")": "closing bracket",
    "*": "asterisk", "+": "plus sign", ",": "comma", "-": "hyphen",
    ".": "full stop", "/": "slash", ":": "colon", ";": "semicolon",
    "<": "less than sign", "=": "equals sign", ">": "greater than sign",
    "?": "question mark", "@": "at symbol", "[": "opening square bracket",
    "\\": "backslash", "]": "closing square bracket", "^": "caret",
    "_": "underscore", "`": "backtick", "{": "opening curly bracket",
    "|": "vertical bar", "}": "closing curly bracket", "~": "tilde",
    "…": "ellipsis", "•": "bullet", "°": "degree sign", "§": "section sign",
    "¶": "pilcrow", "₹": "rupee sign", "€": "euro sign", "£": "pound sign",
    "¥": "yen sign", "¢": "cent sign", "¿": "inverted question mark",
    "¡": "inverted exclamation mark", "«": "opening guillemet",
    "»": "closing guillemet", "–": "en dash", "—": "em dash",
    "“": "opening quote", "”": "closing quote", "‘": "opening single quote",
    "’": "closing single quote", "¬": "not sign", "±": "plus minus sign",
    "×": "multiplication sign", "÷": "division sign",
}

# Words the upstream list carries that are ordinary vocabulary rather than swearing.
NOT_PROFANITY = set(
    """
    anal anus areole arian aryan breasts clitoris crotch ejaculate ejaculated ejaculates
    ejaculating ejaculatings ejaculation erect erection erotic erotism enlargement facial
    fat fondle foreskin glans gonad gonads hymen labia loin loins menses menstruate
    menstruation nipple nipples nude nudes naked oral orally organ ovary ovum ovums
    penetrate penetration penial penile penis phallic phalli pubic pubis rectal rectum
    rectus scrotum semen sex sexual sperm testes testis testicle testical teste testee
    uterus vagina vulva womb urine urinal bondage busty cowgirl cowgirls drunk dummy
    dopey doofus extacy extasy flange floozy foobar fubar gay gays gigolo god gringo
    hemp heroin herp herpes herpy hiv homey hookah hooch hootch kill kinky lesbians
    lust lusting lusty maxi masochist massa meth molest murder napalm nappy nimrod
    ninny opiate opium orgy orgies pawn peyote pms pot potty poop prig prude racy reich
    revue rum rump ruski sadism sadist sandbar scantily schizo screw screwed screwing
    seaman seamen seduce slave sleaze sleazy slope sniper snuff souse soused steamy
    stoned strip stroke stupid suck sucked sucking tampon tawdry teat tinkle toke toots
    tramp transsexual trashy tush ugly undies unwed uzi valium viagra virgin vixen
    vodka vomit voyeur vulgar wad weed weenie weirdo wedgie whiz willies willy woody xx
    howtokill howtomurdep junky junkie dink dinks homoerotic jerk jerked pimp prostitute
    pornography playboy thug lech omg lmao lmfao hooter hooters kooch pastie pasty
    pantie panties panty lube mams paddy ganja reefer pcp shota moron hell fingering
    thrust inbred incest leper stiffy strip stripclub hump humped humping nob chink
    niggle kum organ spunk gai gae knob
    """.split()
)


# CLDR names whose words would be rewritten by shorthand expansion or
# elongation repair; the spoken trailer must survive a second pass unchanged.
NAME_FIXES = {"u s": "united states", "zzz": "sleeping symbol"}


def emoji_name(key: str, data: dict) -> str:
    raw = data["en"].strip(":")
    raw = raw.replace("o’clock", "o clock").replace("’", "")
    if all(0x1F1E6 <= ord(c) <= 0x1F1FF for c in key) or key.startswith("\U0001F3F4\U000E0067"):
        raw = "flag of " + raw
    raw = re.sub(r"(?<![0-9])(1st|2nd|3rd)", lambda m: ORDINALS[m.group(1)], raw)
    raw = unicodedata.normalize("NFKD", raw).encode("ascii", "ignore").decode()
    raw = raw.lower().replace("&", " and ")
    words = re.sub(r"[^a-z0-9]+", " ", raw).split()
    out = []
    for w in words:
        if w.isdigit() and int(w) < 20:
            out.append(NUMBER_WORDS[int(w)])
        elif w.isdigit():
            raise SystemExit(f"unhandled number in emoji name {raw!r}")
        else:
            out.append(w)
    name = " ".join(out)
    for old, new in NAME_FIXES.items():
        name = re.sub(rf"\b{old}\b", new, name)
    return name


def build_emoji_meta() -> dict:
    popularity = {}
    pinned_at = POPULAR.index(PINNED_RANK[0])
    for i, e in enumerate(POPULAR):
        popularity[e] = PINNED_RANK[1] + (pinned_at - i) * 10
    meta = {}
    for key, data in emoji.EMOJI_DATA.items():
        if data["status"] != emoji.STATUS["fully_qualified"]:
            continue
        if any(c in SKIN_TONES for c in key):
            continue
        name = emoji_name(key, data)
        record = {"name": name}
        if key in popularity:
            record["rank"] = popularity[key]
        else:
            # Older emoji are more widely used; keeps the tail deterministic.
            record["rank"] = max(1, int(100 - 6 * float(data["E"])))
        record["informational"] = key in INFORMATIONAL_WORDS
        if key in INFORMATIONAL_WORDS:
            record["word"] = INFORMATIONAL_WORDS[key]
        meta[key] = record
    missing = [e for e in POPULAR + list(INFORMATIONAL_WORDS) if e not in meta]
    if missing:
        raise SystemExit(f"popular/informational emoji missing from table: {missing}")
    return meta


def collapse(word: str) -> str:
    return re.sub(r"(.)\1+", r"\1", word)


def vocabulary(meta: dict) -> set[str]:
    vocab = set(NUMBER_WORDS)
    for rec in meta.values():
        vocab.update(rec["name"].split())
        vocab.update(rec.get("word", "").split())
    for value in CONTRACTIONS.values():
        vocab.update(value.split())
    for name in PUNCTUATION_NAMES.values():
        vocab.update(name.split())
    vocab.update(
        "emoji emojis with some other punctuations beep link to dot at email hashtag "
        "digit number driving licence percent point by feet inches o clock a "
        "dollar dollars rupee rupees euro euros pound pounds p m "
        "january february march april may june july august september october november december".split()
    )
    return vocab


def build_profanity(vocab: set[str]) -> list[str]:
    path = Path(better_profanity.__file__).with_name("profanity_wordlist.txt")
    base = sorted(
        {
            w.strip()
            for w in path.read_text().splitlines()
            if re.fullmatch(r"[a-z]+", w.strip()) and w.strip() not in NOT_PROFANITY
        }
    )
    words = set(base)
    for w in base:
        if not re.search(r"(s|x|z|h|y|ing|ed|er)$", w):
            words.add(w + "s")
    words -= vocab
    words -= set(CONTRACTIONS)
    words.discard("beep")
    return sorted(words)


def build_wordlist(vocab: set[str], profanity: list[str]) -> list[str]:
    words = {w for w in top_n_list("en", WORDLIST_SIZE) if re.fullmatch(r"[a-z]+", w)}
    words |= vocab | set(profanity)
    words -= set(CONTRACTIONS)
    # Spellings with a run of three ("ahhhh", "www") are elongations; repair
    # caps runs at two, so such entries could never come back unchanged.
    return sorted(w for w in words if not re.search(r"(.)\1\1", w))


def build_collapsed(wordlist: list[str], profanity: list[str]) -> dict[str, str]:
    known = set(wordlist)
    banned = set(profanity)
    out: dict[str, str] = {}
    # Frequency order decides which word owns an ambiguous collapsed form.
    ranked = [w for w in top_n_list("en", WORDLIST_SIZE) if w in known]
    ranked += sorted(known - set(ranked))
    for w in ranked:
        c = collapse(w)
        if c == w or c in known or c in CONTRACTIONS or c in out or w in banned:
            continue
        out[c] = w
    return dict(sorted(out.items()))


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    meta = build_emoji_meta()
    vocab = vocabulary(meta)
    profanity = build_profanity(vocab)
    wordlist = build_wordlist(vocab, profanity)
    collapsed = build_collapsed(wordlist, profanity)

    def dump(name, obj):
        (OUT / name).write_text(
            json.dumps(obj, ensure_ascii=False, indent=0, sort_keys=True) + "\n", encoding="utf-8"
        )

    dump("emoji_meta.json", meta)
    dump("contractions.json", CONTRACTIONS)
    dump("collapsed_words.json", collapsed)
    dump("punctuation_names.json", PUNCTUATION_NAMES)
    (OUT / "wordlist.txt").write_text(
        "# lowercase word list used to validate elongation repair\n" + "\n".join(wordlist) + "\n"
    )
    (OUT / "profanity.txt").write_text("# one entry per line\n" + "\n".join(profanity) + "\n")
    for p in sorted(OUT.iterdir()):
        print(f"{p.name:24s} {p.stat().st_size:>9,d} bytes")
    print(f"emoji={len(meta)} words={len(wordlist)} collapsed={len(collapsed)} profanity={len(profanity)}")


if __name__ == "__main__":
    main()
