"""Suffix-stripping stemmer after Lovins (1968), plus its iterated variant.

The stemmer removes the longest of 294 endings whose context condition
holds and whose removal leaves a stem of at least two characters, then
applies a fixed sequence of respelling rules ("recoding"). The iterated
variant reapplies the stemmer until the word stops changing, which makes
it aggressive enough to conflate singular/plural and close derivational
variants ("networks" and "network" both end up as "network").
"""

from __future__ import annotations

# Context conditions, keyed by the code letters of the published tables.
# Each predicate receives the candidate stem (the word minus the ending).


def _cond_a(stem: str) -> bool:
    return True


def _cond_b(stem: str) -> bool:
    return len(stem) >= 3


def _cond_c(stem: str) -> bool:
    return len(stem) >= 4


def _cond_d(stem: str) -> bool:
    return len(stem) >= 5


def _cond_e(stem: str) -> bool:
    return stem[-1] != "e"


def _cond_f(stem: str) -> bool:
    return len(stem) >= 3 and stem[-1] != "e"


def _cond_g(stem: str) -> bool:
    return len(stem) >= 3 and stem[-1] == "f"


def _cond_h(stem: str) -> bool:
    return stem[-1] == "t" or stem[-2:] == "ll"


def _cond_i(stem: str) -> bool:
    return stem[-1] not in "oe"


def _cond_j(stem: str) -> bool:
    return stem[-1] not in "ae"


def _cond_k(stem: str) -> bool:
    return len(stem) >= 3 and (
        stem[-1] in "li" or (stem[-1] == "e" and stem[-3] == "u")
    )


def _cond_l(stem: str) -> bool:
    if stem[-1] in "ux":
        return False
    return stem[-1] != "s" or stem[-2:-1] == "o"


def _cond_m(stem: str) -> bool:
    return stem[-1] not in "acem"


def _cond_n(stem: str) -> bool:
    # Minimum stem length 4 when the third-last stem character is "s",
    # otherwise 3; for a three-character stem that is its first character.
    if len(stem) >= 4:
        return True
    return len(stem) == 3 and stem[-3] != "s"


def _cond_o(stem: str) -> bool:
    return stem[-1] in "li"


def _cond_p(stem: str) -> bool:
    return stem[-1] != "c"


def _cond_q(stem: str) -> bool:
    return len(stem) >= 3 and stem[-1] not in "ln"


def _cond_r(stem: str) -> bool:
    return stem[-1] in "nr"


def _cond_s(stem: str) -> bool:
    return stem[-2:] == "dr" or (stem[-1] == "t" and stem[-2:-1] != "t")


def _cond_t(stem: str) -> bool:
    return stem[-1] == "s" or (stem[-1] == "t" and stem[-2:-1] != "o")


def _cond_u(stem: str) -> bool:
    return stem[-1] in "lmnr"


def _cond_v(stem: str) -> bool:
    return stem[-1] == "c"


def _cond_w(stem: str) -> bool:
    return stem[-1] not in "su"


def _cond_x(stem: str) -> bool:
    return stem[-1] in "li" or (
        stem[-1] == "e" and len(stem) >= 3 and stem[-3] == "u"
    )


def _cond_y(stem: str) -> bool:
    return stem[-2:] == "in"


def _cond_z(stem: str) -> bool:
    return stem[-1] != "f"


def _cond_aa(stem: str) -> bool:
    return stem[-1] in "dflt" or stem[-2:] in ("ph", "th", "er", "or", "es")


def _cond_bb(stem: str) -> bool:
    return (
        len(stem) >= 3
        and not stem.endswith("met")
        and not stem.endswith("ryst")
    )


def _cond_cc(stem: str) -> bool:
    return stem[-1] == "l"


_CONDITIONS = {
    "A": _cond_a, "B": _cond_b, "C": _cond_c, "D": _cond_d, "E": _cond_e,
    "F": _cond_f, "G": _cond_g, "H": _cond_h, "I": _cond_i, "J": _cond_j,
    "K": _cond_k, "L": _cond_l, "M": _cond_m, "N": _cond_n, "O": _cond_o,
    "P": _cond_p, "Q": _cond_q, "R": _cond_r, "S": _cond_s, "T": _cond_t,
    "U": _cond_u, "V": _cond_v, "W": _cond_w, "X": _cond_x, "Y": _cond_y,
    "Z": _cond_z, "AA": _cond_aa, "BB": _cond_bb, "CC": _cond_cc,
}

# The 294 endings with their condition codes, grouped by ending length.
_ENDINGS: dict[int, dict[str, str]] = {
    11: {
        "alistically": "B", "arizability": "A", "izationally": "B",
    },
    10: {
        "antialness": "A", "arisations": "A", "arizations": "A",
        "entialness": "A",
    },
    9: {
        "allically": "C", "antaneous": "A", "antiality": "A",
        "arisation": "A", "arization": "A", "ationally": "B",
        "ativeness": "A", "eableness": "E", "entations": "A",
        "entiality": "A", "entialize": "A", "entiation": "A",
        "ionalness": "A", "istically": "A", "itousness": "A",
        "izability": "A", "izational": "A",
    },
    8: {
        "ableness": "A", "arizable": "A", "entation": "A", "entially": "A",
        "eousness": "A", "ibleness": "A", "icalness": "A", "ionalism": "A",
        "ionality": "A", "ionalize": "A", "iousness": "A", "izations": "A",
        "lessness": "A",
    },
    7: {
        "ability": "A", "aically": "A", "alistic": "B", "alities": "A",
        "ariness": "E", "aristic": "A", "arizing": "A", "ateness": "A",
        "atingly": "A", "ational": "B", "atively": "A", "ativism": "A",
        "elihood": "E", "encible": "A", "entally": "A", "entials": "A",
        "entiate": "A", "entness": "A", "fulness": "A", "ibility": "A",
        "icalism": "A", "icalist": "A", "icality": "A", "icalize": "A",
        "ication": "G", "icianry": "A", "ination": "A", "ingness": "A",
        "ionally": "A", "isation": "A", "ishness": "A", "istical": "A",
        "iteness": "A", "iveness": "A", "ivistic": "A", "ivities": "A",
        "ization": "F", "izement": "A", "oidally": "A", "ousness": "A",
    },
    6: {
        "aceous": "A", "acious": "B", "action": "G", "alness": "A",
        "ancial": "A", "ancies": "A", "ancing": "B", "ariser": "A",
        "arized": "A", "arizer": "A", "atable": "A", "ations": "B",
        "atives": "A", "eature": "Z", "efully": "A", "encies": "A",
        "encing": "A", "ential": "A", "enting": "C", "entist": "A",
        "eously": "A", "ialist": "A", "iality": "A", "ialize": "A",
        "ically": "A", "icance": "A", "icians": "A", "icists": "A",
        "ifully": "A", "ionals": "A", "ionate": "D", "ioning": "A",
        "ionist": "A", "iously": "A", "istics": "A", "izable": "E",
        "lessly": "A", "nesses": "A", "oidism": "A",
    },
    5: {
        "acies": "A", "acity": "A", "aging": "B", "aical": "A",
        "alist": "A", "alism": "B", "ality": "A", "alize": "A",
        "allic": "BB", "anced": "B", "ances": "B", "antic": "C",
        "arial": "A", "aries": "A", "arily": "A", "arity": "B",
        "arize": "A", "aroid": "A", "ately": "A", "ating": "I",
        "ation": "B", "ative": "A", "ators": "A", "atory": "A",
        "ature": "E", "early": "Y", "ehood": "A", "eless": "A",
        "elily": "A", "ement": "A", "enced": "A", "ences": "A",
        "eness": "E", "ening": "E", "ental": "A", "ented": "C",
        "ently": "A", "fully": "A", "ially": "A", "icant": "A",
        "ician": "A", "icide": "A", "icism": "A", "icist": "A",
        "icity": "A", "idine": "I", "iedly": "A", "ihood": "A",
        "inate": "A", "iness": "A", "ingly": "B", "inism": "J",
        "inity": "CC", "ional": "A", "ioned": "A", "ished": "A",
        "istic": "A", "ities": "A", "itous": "A", "ively": "A",
        "ivity": "A", "izers": "F", "izing": "F", "oidal": "A",
        "oides": "A", "otide": "A", "ously": "A",
    },
    4: {
        "able": "A", "ably": "A", "ages": "B", "ally": "B", "ance": "B",
        "ancy": "B", "ants": "B", "aric": "A", "arly": "K", "ated": "I",
        "ates": "A", "atic": "B", "ator": "A", "ealy": "Y", "edly": "E",
        "eful": "A", "eity": "A", "ence": "A", "ency": "A", "ened": "E",
        "enly": "E", "eous": "A", "hood": "A", "ials": "A", "ians": "A",
        "ible": "A", "ibly": "A", "ical": "A", "ides": "L", "iers": "A",
        "iful": "A", "ines": "M", "ings": "N", "ions": "B", "ious": "A",
        "isms": "B", "ists": "A", "itic": "H", "ized": "F", "izer": "F",
        "less": "A", "lily": "A", "ness": "A", "ogen": "A", "ward": "A",
        "wise": "A", "ying": "B", "yish": "A",
    },
    3: {
        "acy": "A", "age": "B", "aic": "A", "als": "BB", "ant": "B",
        "ars": "O", "ary": "F", "ata": "A", "ate": "A", "eal": "Y",
        "ear": "Y", "ely": "E", "ene": "E", "ent": "C", "ery": "E",
        "ese": "A", "ful": "A", "ial": "A", "ian": "A", "ics": "A",
        "ide": "L", "ied": "A", "ier": "A", "ies": "P", "ily": "A",
        "ine": "M", "ing": "N", "ion": "Q", "ish": "C", "ism": "B",
        "ist": "A", "ite": "AA", "ity": "A", "ium": "A", "ive": "A",
        "ize": "F", "oid": "A", "one": "R", "ous": "A",
    },
    2: {
        "ae": "A", "al": "BB", "ar": "X", "as": "B", "ed": "E",
        "en": "F", "es": "E", "ia": "A", "ic": "A", "is": "A",
        "ly": "B", "on": "S", "or": "T", "um": "U", "us": "V",
        "yl": "R", "s'": "A", "'s": "A",
    },
    1: {
        "a": "A", "e": "A", "i": "A", "o": "A", "s": "W", "y": "B",
    },
}

_MAX_ENDING = max(_ENDINGS)
_MIN_STEM = 2

# Respelling rules applied in order after ending removal. Each entry is
# (pattern, replacement, excluded preceding letters); a rule fires when the
# word ends with the pattern and the letter before it (if any) is not
# excluded.
_RECODINGS: tuple[tuple[str, str, str], ...] = (
    ("iev", "ief", ""),
    ("uct", "uc", ""),
    ("umpt", "um", ""),
    ("rpt", "rb", ""),
    ("urs", "ur", ""),
    ("istr", "ister", ""),
    ("metr", "meter", ""),
    ("olv", "olut", ""),
    ("ul", "l", "aio"),
    ("bex", "bic", ""),
    ("dex", "dic", ""),
    ("pex", "pic", ""),
    ("tex", "tic", ""),
    ("ax", "ac", ""),
    ("ex", "ec", ""),
    ("ix", "ic", ""),
    ("lux", "luc", ""),
    ("uad", "uas", ""),
    ("vad", "vas", ""),
    ("cid", "cis", ""),
    ("lid", "lis", ""),
    ("erid", "eris", ""),
    ("pand", "pans", ""),
    ("end", "ens", "s"),
    ("ond", "ons", ""),
    ("lud", "lus", ""),
    ("rud", "rus", ""),
    ("her", "hes", "pt"),
    ("mit", "mis", ""),
    ("ent", "ens", "m"),
    ("ert", "ers", ""),
    ("et", "es", "n"),
    ("yt", "ys", ""),
    ("yz", "ys", ""),
)

_ASCII_LOWER = str.maketrans(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ", "abcdefghijklmnopqrstuvwxyz"
)

_DOUBLES = ("bb", "dd", "gg", "ll", "mm", "nn", "pp", "rr", "ss", "tt")


def _remove_ending(word: str) -> str:
    longest = min(_MAX_ENDING, len(word) - _MIN_STEM)
    for size in range(longest, 0, -1):
        code = _ENDINGS[size].get(word[-size:])
        if code is None:
            continue
        stem = word[:-size]
        if _CONDITIONS[code](stem):
            return stem
    return word


def _recode(word: str) -> str:
    if word[-2:] in _DOUBLES:
        word = word[:-1]
    for pattern, replacement, excluded in _RECODINGS:
        if not word.endswith(pattern):
            continue
        prefix = word[: -len(pattern)]
        if excluded and prefix and prefix[-1] in excluded:
            continue
        word = prefix + replacement
    return word


def lovins_stem(word: str) -> str:
    """Stem a single word; words matching no rule come back unchanged.

    The output is never longer than the input (a respelling that would
    lengthen the word is discarded together with the removal).
    """
    word = word.translate(_ASCII_LOWER)
    if len(word) <= 2:
        return word
    stemmed = _recode(_remove_ending(word))
    return stemmed if len(stemmed) <= len(word) else word


def iterated_lovins_stem(word: str) -> str:
    """Apply the stemmer repeatedly until the word stops changing."""
    current = word.translate(_ASCII_LOWER)
    for _ in range(len(current) + 1):
        stemmed = lovins_stem(current)
        if stemmed == current or len(stemmed) > len(current):
            break
        current = stemmed
    return current
