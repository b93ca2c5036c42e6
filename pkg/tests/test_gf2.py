import pytest

from app.engine.gf2 import EchelonBasis, F2Vector, rank


def test_vector_from_indices_cancels_pairs() -> None:
    v = F2Vector.from_indices(5, [0, 3, 0, 4])
    assert v.support == [3, 4]
    assert v.to_list() == [0, 0, 0, 1, 1]
    assert not (v ^ v)


def test_xor_length_mismatch() -> None:
    with pytest.raises(ValueError, match="length mismatch"):
        F2Vector(3) ^ F2Vector(4)


def test_rank() -> None:
    assert rank([0b011, 0b110, 0b101], 3) == 2
    assert rank([0b001, 0b010, 0b100], 3) == 3
    assert rank([], 4) == 0


def test_echelon_reduction_gives_coset_representatives() -> None:
    basis = EchelonBasis(4)
    assert basis.add(0b1100)
    assert basis.add(0b0110)
    assert not basis.add(0b1010)
    assert basis.quotient_dimension == 2
    assert basis.contains(0b1010)
    assert basis.reduce(0b1000) == basis.reduce(0b0100) == basis.reduce(0b0010)
    assert basis.reduce(0b0001) == 0b0001
