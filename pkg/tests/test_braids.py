import numpy as np
import pytest

from app.api.exceptions import InvalidIndicesError, NonPureBraidError
from app.engine.braids import (
    center_word,
    comb,
    expand_b,
    is_pure,
    linking_numbers,
    modulo_center,
    permutation,
    permutation_braid,
    pure_word,
    sigma_alphabet,
    sigma_word,
)
from app.engine.words import concat_all


def test_expand_b() -> None:
    assert expand_b(1, 2, 3) == sigma_word(3, [(1, 1), (1, 1)])
    assert expand_b(1, 3, 3) == sigma_word(3, [(2, 1), (1, 1), (1, 1), (2, -1)])
    with pytest.raises(InvalidIndicesError):
        expand_b(2, 2, 3)


def test_sigma_word_validates_indices() -> None:
    with pytest.raises(InvalidIndicesError):
        sigma_word(3, [(3, 1)])


def test_permutation_and_purity() -> None:
    w = sigma_word(3, [(1, 1), (2, 1)])
    assert permutation(w) == (2, 3, 1)
    assert not is_pure(w)
    assert is_pure(expand_b(1, 3, 4))


def test_permutation_braid_realizes_target() -> None:
    target = (3, 1, 4, 2)
    letters = permutation_braid(target)
    assert permutation(sigma_word(4, [(k, 1) for k in letters])) == target


@pytest.mark.parametrize(
    ("letters", "expected"),
    [
        ([(1, 1), (1, 1)], [((1, 2), 1)]),
        ([(2, 1), (1, 1), (1, 1), (2, -1)], [((1, 3), 1)]),
        ([(1, 1), (2, 1), (2, 1), (1, 1)], [((1, 2), 1), ((1, 3), 1)]),
        ([(1, -1), (1, -1)], [((1, 2), -1)]),
    ],
)
def test_comb(letters: list[tuple[int, int]], expected: list) -> None:
    assert comb(sigma_word(3, letters)) == pure_word(3, expected)


def test_comb_rejects_non_pure() -> None:
    with pytest.raises(NonPureBraidError) as exc_info:
        comb(sigma_word(3, [(1, 1)]))
    assert exc_info.value.extra["permutation"] == [2, 1, 3]


def test_comb_of_every_generator_expansion() -> None:
    n = 5
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert comb(expand_b(i, j, n)) == pure_word(n, [((i, j), 1)])


def test_linking_numbers_agree_before_and_after_combing() -> None:
    rng = np.random.default_rng(11)
    n = 5
    for _ in range(50):
        factors = []
        expected = dict.fromkeys(linking_numbers(pure_word(n, [])), 0)
        for _ in range(6):
            i, j = sorted(int(x) for x in rng.choice(np.arange(1, n + 1), 2, replace=False))
            sign = int(rng.choice([-1, 1]))
            factors.append(expand_b(i, j, n) ** sign)
            expected[(i, j)] += sign
        sigma = concat_all(sigma_alphabet(n), factors)
        assert linking_numbers(sigma) == expected
        assert linking_numbers(comb(sigma)) == expected


def test_center_has_all_linking_numbers_one() -> None:
    numbers = linking_numbers(center_word(4))
    assert set(numbers.values()) == {1}
    assert set(modulo_center(numbers).values()) == {0}


def test_modulo_center_subtracts_full_twists() -> None:
    numbers = {(1, 2): 3, (1, 3): 5, (2, 3): 3}
    assert modulo_center(numbers) == {(1, 2): 0, (1, 3): 2, (2, 3): 0}


def test_linking_numbers_of_non_pure_sigma_word() -> None:
    with pytest.raises(NonPureBraidError):
        linking_numbers(sigma_word(3, [(2, 1)]))
