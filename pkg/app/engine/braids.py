"""Planar braid words in sigma letters and pure braid words in b_ij letters.

Positions and strands are 1-based. Words are read left to right as time, and
the arrangement ``arr`` after a prefix records arr[p-1] = strand at position p.
"""

from collections.abc import Iterable
from itertools import combinations

from app.api.exceptions import InvalidIndicesError, NonPureBraidError
from app.engine.words import Alphabet, AlphabetKind, GroupWord, Letter

Pair = tuple[int, int]
PureLetter = tuple[Pair, int]
LinkingNumbers = dict[Pair, int]


def sigma_alphabet(n: int) -> Alphabet:
    return Alphabet(AlphabetKind.SIGMA, n)


def pure_alphabet(n: int) -> Alphabet:
    return Alphabet(AlphabetKind.PURE, n)


def sigma_word(n: int, letters: Iterable[tuple[int, int]]) -> GroupWord:
    word = GroupWord(sigma_alphabet(n), tuple(Letter(i, e) for i, e in letters))
    for letter in word:
        if not 1 <= int(letter.generator) < n:  # type: ignore[call-overload]
            raise InvalidIndicesError([int(letter.generator)], f"sigma index must lie in 1..{n - 1}")  # type: ignore[call-overload]
    return word


def pure_word(n: int, letters: Iterable[PureLetter]) -> GroupWord:
    word = GroupWord(pure_alphabet(n), tuple(Letter(pair, e) for pair, e in letters))
    for letter in word:
        i, j = letter.generator  # type: ignore[misc]
        if not 1 <= i < j <= n:
            raise InvalidIndicesError([i, j], f"need 1 <= i < j <= {n}")
    return word


def expand_b(i: int, j: int, n: int) -> GroupWord:
    if not 1 <= i < j <= n:
        raise InvalidIndicesError([i, j], f"need 1 <= i < j <= {n}")
    up = [(k, 1) for k in range(j - 1, i, -1)]
    down = [(k, -1) for k in range(i + 1, j)]
    return sigma_word(n, [*up, (i, 1), (i, 1), *down])


def permutation(w: GroupWord) -> tuple[int, ...]:
    arr = list(range(1, w.alphabet.n + 1))
    for letter in w:
        k = int(letter.generator)  # type: ignore[call-overload]
        arr[k - 1], arr[k] = arr[k], arr[k - 1]
    return tuple(arr)


def is_pure(w: GroupWord) -> bool:
    if w.alphabet.kind is AlphabetKind.PURE:
        return True
    return permutation(w) == tuple(range(1, w.alphabet.n + 1))


def center_word(n: int) -> GroupWord:
    if n < 2:
        raise InvalidIndicesError([n], "center needs at least 2 strands")
    return sigma_word(n, [(k, 1) for _ in range(n) for k in range(1, n)])


def linking_numbers(w: GroupWord) -> LinkingNumbers:
    n = w.alphabet.n
    numbers: LinkingNumbers = dict.fromkeys(combinations(range(1, n + 1), 2), 0)
    if w.alphabet.kind is AlphabetKind.PURE:
        for letter in w:
            numbers[letter.generator] += letter.exponent  # type: ignore[index]
        return numbers

    final = permutation(w)
    if final != tuple(range(1, n + 1)):
        raise NonPureBraidError(final)
    arr = list(range(1, n + 1))
    for letter in w:
        k = int(letter.generator)  # type: ignore[call-overload]
        a, b = arr[k - 1], arr[k]
        numbers[(min(a, b), max(a, b))] += letter.exponent
        arr[k - 1], arr[k] = b, a
    return {pair: crossings // 2 for pair, crossings in numbers.items()}


def modulo_center(numbers: LinkingNumbers) -> LinkingNumbers:
    """Subtracts the multiple of the full-twist vector (all ones) fixed by pair (1,2)."""
    shift = numbers.get((1, 2), 0)
    return {pair: value - shift for pair, value in numbers.items()}


# combing


def permutation_braid(target: tuple[int, ...]) -> list[int]:
    """Positive sigma letters taking the identity arrangement to ``target``, by bubble sort."""
    final_position = {strand: p for p, strand in enumerate(target)}
    arr = list(range(1, len(target) + 1))
    letters: list[int] = []
    swapped = True
    while swapped:
        swapped = False
        for p in range(len(arr) - 1):
            if final_position[arr[p]] > final_position[arr[p + 1]]:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
                letters.append(p + 1)
                swapped = True
    return letters


def _invert_letters(letters: list[PureLetter]) -> list[PureLetter]:
    return [(pair, -e) for pair, e in reversed(letters)]


def _conjugate_generator(k: int, eps: int, i: int, j: int) -> list[PureLetter]:
    """sigma_k^eps · A_ij · sigma_k^-eps as a word in the A generators."""
    if k == i and j == i + 1:
        return [((i, j), 1)]
    if k == i:
        if eps > 0:
            return [((i + 1, j), 1)]
        return [((i, i + 1), -1), ((i + 1, j), 1), ((i, i + 1), 1)]
    if k == i - 1:
        if eps > 0:
            return [((i - 1, i), 1), ((i - 1, j), 1), ((i - 1, i), -1)]
        return [((i - 1, j), 1)]
    if k == j - 1:
        if eps > 0:
            return [((j - 1, j), 1), ((i, j - 1), 1), ((j - 1, j), -1)]
        return [((i, j - 1), 1)]
    if k == j:
        if eps > 0:
            return [((i, j + 1), 1)]
        return [((j, j + 1), -1), ((i, j + 1), 1), ((j, j + 1), 1)]
    return [((i, j), 1)]


def conjugate_by_sigma(k: int, eps: int, letters: list[PureLetter]) -> list[PureLetter]:
    out: list[PureLetter] = []
    for (i, j), e in letters:
        image = _conjugate_generator(k, eps, i, j)
        out.extend(image if e > 0 else _invert_letters(image))
    return out


def conjugate_by_positive(sigmas: list[int], letters: list[PureLetter]) -> list[PureLetter]:
    """T · X · T⁻¹ for T = sigmas[0] sigmas[1] …; the innermost letter acts first."""
    for k in reversed(sigmas):
        letters = conjugate_by_sigma(k, 1, letters)
    return letters


def comb(w: GroupWord) -> GroupWord:
    """Rewrites a pure sigma word in b_ij letters.

    Between consecutive letters the word is split by T(π)·T(π)⁻¹, where T(π) is
    the positive permutation braid of the current arrangement; each piece
    T(π)·σ_k^e·T(π')⁻¹ is either trivial or a conjugate of b_{k,k+1}^{±1}.
    """
    n = w.alphabet.n
    final = permutation(w)
    if final != tuple(range(1, n + 1)):
        raise NonPureBraidError(final)

    arr = list(range(1, n + 1))
    out: list[PureLetter] = []
    for letter in w:
        k, e = int(letter.generator), letter.exponent  # type: ignore[call-overload]
        a, b = arr[k - 1], arr[k]
        before = tuple(arr)
        arr[k - 1], arr[k] = b, a
        if e > 0 and a > b:
            out.extend(conjugate_by_positive(permutation_braid(tuple(arr)), [((k, k + 1), 1)]))
        elif e < 0 and a < b:
            out.extend(conjugate_by_positive(permutation_braid(before), [((k, k + 1), -1)]))
    return pure_word(n, out)
