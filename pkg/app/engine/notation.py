"""Text form of letters: a_1_2_3, d_(1,2,4,3), s3^-1, b_1_4^-1, and bare names for free words."""

import re
from collections.abc import Iterable

from app.api.exceptions import InvalidIndicesError, MalformedInputError
from app.engine.gamma import canonicalize, gamma_alphabet
from app.engine.gnk import gnk_alphabet, gnk_generator
from app.engine.words import FREE, Alphabet, AlphabetKind, GroupWord, Letter

_EXPONENT = r"(?:\^(?P<exp>[+-]?1))?"
_GNK = re.compile(r"a_(?P<idx>\d+(?:_\d+)+)" + _EXPONENT)
_GAMMA = re.compile(r"d_(?:\((?P<paren>\d+(?:,\s*\d+){3})\)|(?P<flat>\d+(?:_\d+){3}))" + _EXPONENT)
_SIGMA = re.compile(r"s(?P<idx>\d+)" + _EXPONENT)
_PURE = re.compile(r"b_(?P<i>\d+)_(?P<j>\d+)" + _EXPONENT)
_FREE = re.compile(r"(?P<name>[A-Za-z]\w*?)" + _EXPONENT)


def _exponent(match: re.Match[str]) -> int:
    return -1 if match.group("exp") == "-1" else 1


def _full(pattern: re.Pattern[str], text: str) -> re.Match[str]:
    match = pattern.fullmatch(text.strip())
    if match is None:
        raise MalformedInputError("unparsable letter", letter=text)
    return match


def parse_letter(text: str, alphabet: Alphabet) -> Letter:
    match alphabet.kind:
        case AlphabetKind.GNK:
            found = _full(_GNK, text)
            indices = [int(x) for x in found.group("idx").split("_")]
            return Letter(gnk_generator(indices, alphabet.n, alphabet.k or 0), 1)
        case AlphabetKind.GAMMA:
            found = _full(_GAMMA, text)
            raw = found.group("paren") or found.group("flat")
            indices = [int(x) for x in re.split(r"[,_]\s*", raw)]
            return Letter(canonicalize(indices, alphabet.n), 1)
        case AlphabetKind.SIGMA:
            found = _full(_SIGMA, text)
            index = int(found.group("idx"))
            if not 1 <= index < alphabet.n:
                raise InvalidIndicesError([index], f"sigma index must lie in 1..{alphabet.n - 1}")
            return Letter(index, _exponent(found))
        case AlphabetKind.PURE:
            found = _full(_PURE, text)
            i, j = int(found.group("i")), int(found.group("j"))
            if not 1 <= i < j <= alphabet.n:
                raise InvalidIndicesError([i, j], f"need 1 <= i < j <= {alphabet.n}")
            return Letter((i, j), _exponent(found))
        case _:
            found = _full(_FREE, text)
            return Letter(found.group("name"), _exponent(found))


def format_letter(letter: Letter, alphabet: Alphabet) -> str:
    suffix = "^-1" if letter.exponent < 0 else ""
    match alphabet.kind:
        case AlphabetKind.GNK:
            return "a_" + "_".join(str(x) for x in letter.generator)  # type: ignore[union-attr]
        case AlphabetKind.GAMMA:
            return "d_(" + ",".join(str(x) for x in letter.generator) + ")"  # type: ignore[union-attr]
        case AlphabetKind.SIGMA:
            return f"s{letter.generator}{suffix}"
        case AlphabetKind.PURE:
            i, j = letter.generator  # type: ignore[misc]
            return f"b_{i}_{j}{suffix}"
        case _:
            return f"{letter.generator}{suffix}"


def parse_word(texts: Iterable[str], alphabet: Alphabet) -> GroupWord:
    return GroupWord(alphabet, tuple(parse_letter(text, alphabet) for text in texts))


def format_word(w: GroupWord) -> list[str]:
    return [format_letter(letter, w.alphabet) for letter in w.letters]


def alphabet_for(kind: AlphabetKind, n: int, k: int | None = None) -> Alphabet:
    match kind:
        case AlphabetKind.GNK:
            return gnk_alphabet(n, k or 3)
        case AlphabetKind.GAMMA:
            return gamma_alphabet(n)
        case AlphabetKind.FREE:
            return FREE
        case _:
            return Alphabet(kind, n)
