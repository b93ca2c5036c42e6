"""Homomorphisms from the planar pure braid group PB_n to G_n^3, G_n^4 and Gamma_n^4.

Each image is assembled literally from the products of the defining formulas.
A product factor whose multi-index repeats a value or leaves 1..n names no
generator: in lenient mode it is skipped and counted, in strict mode it raises.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from functools import lru_cache

from app.api.exceptions import InvalidFactorError, InvalidIndicesError, InvalidPresentationError, MismatchedAlphabetsError
from app.custom_logging import get_logger
from app.engine.gamma import GammaGenerator, canonicalize, gamma_abelianize, gamma_alphabet, get_gamma_presentation
from app.engine.gf2 import F2Vector
from app.engine.gnk import abelianize, get_presentation, gnk_alphabet
from app.engine.words import Alphabet, AlphabetKind, GroupWord, Letter, concat_all, invert

logger = get_logger(__name__)


class HomKind(StrEnum):
    PHI = "phi"
    PSI = "psi"
    XI = "xi"


MINIMUM_STRANDS = {HomKind.PHI: 4, HomKind.PSI: 5, HomKind.XI: 4}


@dataclass(frozen=True)
class HomSpec:
    kind: HomKind
    n: int
    strict: bool = False

    def __post_init__(self) -> None:
        if self.n < MINIMUM_STRANDS[self.kind]:
            k = 3 if self.kind is HomKind.PHI else 4
            raise InvalidPresentationError(self.n, k, f"{self.kind} needs n >= {MINIMUM_STRANDS[self.kind]}")

    @property
    def target(self) -> Alphabet:
        match self.kind:
            case HomKind.PHI:
                return gnk_alphabet(self.n, 3)
            case HomKind.PSI:
                return gnk_alphabet(self.n, 4)
            case HomKind.XI:
                return gamma_alphabet(self.n)


@dataclass(frozen=True)
class HomImage:
    word: GroupWord
    skipped_factors: int = 0


@dataclass
class Expansion:
    """Collects the factors of one literal product."""

    alphabet: Alphabet
    strict: bool
    site: str
    letters: list[Letter] = field(default_factory=list)
    skipped: int = 0

    def valid(self, indices: Sequence[int]) -> bool:
        if len(set(indices)) == len(indices) and min(indices) >= 1 and max(indices) <= self.alphabet.n:
            return True
        if self.strict:
            raise InvalidFactorError(self.site, indices)
        self.skipped += 1
        return False

    def gnk_factor(self, *indices: int) -> None:
        if self.valid(indices):
            self.letters.append(Letter(tuple(sorted(indices))))

    def gamma_letter(self, generator: GammaGenerator) -> None:
        self.letters.append(Letter(generator))

    def image(self) -> HomImage:
        return HomImage(GroupWord(self.alphabet, tuple(self.letters)), self.skipped)


def _product(alphabet: Alphabet, parts: Sequence[HomImage]) -> HomImage:
    return HomImage(concat_all(alphabet, (p.word for p in parts)), sum(p.skipped_factors for p in parts))


def _inverse(image: HomImage) -> HomImage:
    return HomImage(invert(image.word), image.skipped_factors)


def _check_pair(i: int, j: int, n: int) -> None:
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidIndicesError([i, j], f"need distinct indices in 1..{n}")


# phi


def c3(i: int, j: int, n: int, *, strict: bool = False) -> HomImage:
    _check_pair(i, j, n)
    expansion = Expansion(gnk_alphabet(n, 3), strict, f"c3({i},{j})")
    for k in [*range(j + 1, n + 1), *range(1, j)]:
        expansion.gnk_factor(i, j, k)
    return expansion.image()


def _conjugated_square(alphabet: Alphabet, pieces: list[HomImage], center: HomImage, *, inverse_first: bool) -> HomImage:
    """P⁻¹ · center² · P when ``inverse_first``, else P · center² · P⁻¹, with P = c_{i,i+1} … c_{i,j-1}."""
    if inverse_first:
        left = [_inverse(p) for p in pieces]
        right = list(reversed(pieces))
    else:
        left = list(pieces)
        right = [_inverse(p) for p in reversed(pieces)]
    return _product(alphabet, [*left, center, center, *right])


def phi(i: int, j: int, n: int, *, strict: bool = False) -> HomImage:
    alphabet = gnk_alphabet(n, 3)
    pieces = [c3(i, m, n, strict=strict) for m in range(i + 1, j)]
    return _conjugated_square(alphabet, pieces, c3(i, j, n, strict=strict), inverse_first=True)


# psi


def c4_parts(i: int, j: int, n: int, *, strict: bool = False) -> tuple[HomImage, HomImage, HomImage]:
    if not 1 <= i < j <= n or n < 4:
        raise InvalidIndicesError([i, j], f"need 1 <= i < j <= {n} and n >= 4")
    alphabet = gnk_alphabet(n, 4)
    first = Expansion(alphabet, strict, f"c4_I({i},{j})")
    for p in range(2, j):
        for q in range(1, p):
            first.gnk_factor(i, j, p, q)
    second = Expansion(alphabet, strict, f"c4_II({i},{j})")
    for p in range(1, j):
        for q in range(1, n - j + 1):
            second.gnk_factor(i, j - p, j, j + q)
    third = Expansion(alphabet, strict, f"c4_III({i},{j})")
    for p in range(1, n - j + 2):
        for q in range(n - p + 2):
            third.gnk_factor(i, j, n - p, n - q)
    return first.image(), second.image(), third.image()


def c4(i: int, j: int, n: int, *, strict: bool = False) -> HomImage:
    first, second, third = c4_parts(i, j, n, strict=strict)
    return _product(gnk_alphabet(n, 4), [second, first, third])


def psi(i: int, j: int, n: int, *, strict: bool = False) -> HomImage:
    alphabet = gnk_alphabet(n, 4)
    pieces = [c4(i, m, n, strict=strict) for m in range(i + 1, j)]
    return _conjugated_square(alphabet, pieces, c4(i, j, n, strict=strict), inverse_first=False)


# xi


def d_oriented(p: int, q: int, r: int, s: int) -> GammaGenerator:
    """d_{p,q,(r,s)_s}: the quadrilateral picked by the relative order of p, q and s."""
    if len({p, q, r, s}) != 4:
        raise InvalidIndicesError([p, q, r, s], "need 4 distinct indices")
    if p < q < s:
        cycle = (p, q, r, s)
    elif p < s < q:
        cycle = (p, r, s, q)
    elif s < p < q:
        cycle = (r, s, p, q)
    elif q < p < s:
        cycle = (q, p, r, s)
    elif q < s < p:
        cycle = (q, r, s, p)
    else:
        cycle = (r, s, q, p)
    return canonicalize(cycle)


def gamma_selector(p: int, q: int, i: int, j: int) -> bool:
    lo, mid, hi = sorted((p, q, j))
    value = lo - mid + hi - 2
    if lo < i < mid or i > hi:
        return value == 0
    if i < lo or mid < i < hi:
        return value == 1
    return False


def gamma_factor(p: int, q: int, i: int, j: int, n: int, *, strict: bool = False) -> HomImage:
    expansion = Expansion(gamma_alphabet(n), strict, f"gamma({p},{q},({i},{j}))")
    _gamma_into(expansion, p, q, i, j)
    return expansion.image()


def _gamma_into(expansion: Expansion, p: int, q: int, i: int, j: int) -> None:
    if expansion.valid((p, q, i, j)) and gamma_selector(p, q, i, j):
        expansion.gamma_letter(d_oriented(p, q, i, j))


def delta_parts(r: int, s: int, n: int, *, strict: bool = False) -> tuple[HomImage, HomImage, HomImage]:
    """Delta^I, Delta^II, Delta^III for the subscript pair (r,s)_s."""
    alphabet = gamma_alphabet(n)
    first = Expansion(alphabet, strict, f"delta_I({r},{s})")
    for p in range(2, s):
        for q in range(1, p):
            _gamma_into(first, p, q, r, s)
    second = Expansion(alphabet, strict, f"delta_II({r},{s})")
    for p in range(1, s):
        for q in range(1, n - s + 1):
            _gamma_into(second, s - p, s + q, r, s)
    third = Expansion(alphabet, strict, f"delta_III({r},{s})")
    for p in range(1, n - s):
        for q in range(p):
            _gamma_into(third, n - p, n - q, r, s)
    return first.image(), second.image(), third.image()


def delta(r: int, s: int, n: int, *, strict: bool = False) -> HomImage:
    first, second, third = delta_parts(r, s, n, strict=strict)
    return _product(gamma_alphabet(n), [second, first, third])


def xi(i: int, j: int, n: int, *, strict: bool = False) -> HomImage:
    if not 1 <= i < j <= n:
        raise InvalidIndicesError([i, j], f"need 1 <= i < j <= {n}")
    prefix = [delta(i, m, n, strict=strict) for m in range(i + 1, j)]
    suffix = [_inverse(delta(m, i, n, strict=strict)) for m in range(j - 1, i, -1)]
    return _product(gamma_alphabet(n), [*prefix, delta(i, j, n, strict=strict), delta(j, i, n, strict=strict), *suffix])


# extension to words


@lru_cache(maxsize=4096)
def generator_image(spec: HomSpec, i: int, j: int) -> HomImage:
    match spec.kind:
        case HomKind.PHI:
            return phi(i, j, spec.n, strict=spec.strict)
        case HomKind.PSI:
            return psi(i, j, spec.n, strict=spec.strict)
        case HomKind.XI:
            return xi(i, j, spec.n, strict=spec.strict)


def apply_hom(spec: HomSpec, w: GroupWord) -> HomImage:
    if w.alphabet.kind is not AlphabetKind.PURE or w.alphabet.n != spec.n:
        raise MismatchedAlphabetsError(f"PB_{spec.n}", str(w.alphabet))
    images = []
    for letter in w:
        i, j = letter.generator  # type: ignore[misc]
        image = generator_image(spec, i, j)
        images.append(image if letter.exponent > 0 else _inverse(image))
    result = _product(spec.target, images)
    if result.skipped_factors:
        logger.debug("%s image skipped %d invalid factors", spec.kind, result.skipped_factors)
    return result


def image_invariant(spec: HomSpec, word: GroupWord) -> F2Vector:
    """F2 abelianization of a word in the target group (coset representative for Gamma)."""
    if spec.kind is HomKind.XI:
        return gamma_abelianize(word, get_gamma_presentation(spec.n))
    return abelianize(word, get_presentation(spec.n, 3 if spec.kind is HomKind.PHI else 4))
