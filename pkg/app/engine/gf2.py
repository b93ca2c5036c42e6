"""GF(2) vectors and echelon bases on int bitsets."""

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Self


@dataclass(frozen=True)
class F2Vector:
    length: int
    bits: int = 0

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> Self:
        bits = 0
        for index in indices:
            bits ^= 1 << index
        return cls(length, bits)

    def __xor__(self, other: "F2Vector") -> "F2Vector":
        if self.length != other.length:
            msg = f"length mismatch: {self.length} != {other.length}"
            raise ValueError(msg)
        return F2Vector(self.length, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def support(self) -> list[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]


@dataclass
class EchelonBasis:
    """Row-reduced basis keyed by the highest set bit of each row.

    Reduction walks pivots from high to low, so the remainder of any vector is the
    unique representative of its coset with no pivot bits set.
    """

    length: int
    rows: dict[int, int] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def quotient_dimension(self) -> int:
        return self.length - self.rank

    def reduce(self, bits: int) -> int:
        for pivot in sorted(self.rows, reverse=True):
            if (bits >> pivot) & 1:
                bits ^= self.rows[pivot]
        return bits

    def add(self, bits: int) -> bool:
        remainder = self.reduce(bits)
        if remainder == 0:
            return False
        pivot = remainder.bit_length() - 1
        # keep rows fully reduced against the new pivot
        for other, row in self.rows.items():
            if (row >> pivot) & 1:
                self.rows[other] = row ^ remainder
        self.rows[pivot] = remainder
        return True

    def contains(self, bits: int) -> bool:
        return self.reduce(bits) == 0


def rank(rows: Iterable[int], length: int) -> int:
    basis = EchelonBasis(length)
    for row in rows:
        basis.add(row)
    return basis.rank
