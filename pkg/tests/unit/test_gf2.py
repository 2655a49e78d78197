import pytest
from hypothesis import given
from hypothesis.strategies import integers, lists, tuples

from sdcodes.errors import LengthMismatchError
from sdcodes.gf2 import (
    BitMatrix,
    BitWord,
    contains,
    dual,
    eliminate,
    inner_product,
    intersect,
    pack_rows,
    popcounts,
    rref,
    unpack_row,
    unpack_to_array,
    weight,
)


def words(length: int):
    return integers(min_value=0, max_value=(1 << length) - 1).map(
        lambda bits: BitWord(length, bits)
    )


def matrices(nrows: int = 6, cols: int = 12):
    return lists(
        integers(min_value=0, max_value=(1 << cols) - 1), min_size=1, max_size=nrows
    ).map(lambda rows: BitMatrix(cols, tuple(rows)))


def test_weight_of_zero_word():
    assert weight(BitWord.zero(8)) == 0


def test_weight_of_support():
    assert weight(BitWord.from_support(8, [1, 2, 3, 4])) == 4


def test_string_orientation():
    word = BitWord.from_string("1100")
    assert word.support() == [1, 2]
    assert str(word) == "1100"
    assert word[1] == 1 and word[4] == 0


def test_from_support_rejects_outside_coordinates():
    with pytest.raises(IndexError):
        BitWord.from_support(4, [5])


def test_inner_product_examples():
    assert inner_product(BitWord.from_string("11"), BitWord.from_string("11")) == 0
    assert inner_product(BitWord.from_string("10"), BitWord.from_string("11")) == 1


def test_inner_product_length_mismatch():
    with pytest.raises(LengthMismatchError):
        inner_product(BitWord.from_string("11"), BitWord.from_string("111"))


@given(words(20))
def test_self_inner_product_is_weight_parity(word: BitWord):
    assert inner_product(word, word) == word.weight % 2


def test_rref_identity():
    echelon = rref(BitMatrix.identity(4))
    assert echelon.matrix == BitMatrix.identity(4)
    assert echelon.rank == 4
    assert echelon.pivots == [1, 2, 3, 4]


def test_rref_zero():
    echelon = rref(BitMatrix.zeros(3, 5))
    assert echelon.rank == 0
    assert echelon.pivots == []
    assert all(row == 0 for row in echelon.matrix.rows)


def test_dual_of_repetition_code():
    assert dual(BitMatrix.from_strings(["11"])).to_strings() == ["11"]


def test_dual_of_identity_is_empty():
    assert dual(BitMatrix.identity(5)).nrows == 0


def test_dual_of_standard_form():
    M = BitMatrix.from_strings(["0111", "1011", "1101", "1110"])
    G = BitMatrix.identity(4).hstack(M)
    expected = M.transpose().hstack(BitMatrix.identity(4))
    assert dual(G) == expected


@given(matrices())
def test_dual_rows_are_orthogonal(G: BitMatrix):
    H = dual(G)
    assert H.nrows == G.cols - G.rank
    for row in H.rows:
        assert all((row & other).bit_count() % 2 == 0 for other in G.rows)


@given(tuples(matrices(), matrices()))
def test_intersection_dimension(pair):
    G1, G2 = pair
    common = intersect(G1, G2)
    assert common.rank == G1.rank + G2.rank - G1.vstack(G2).rank


def test_intersect_small_codes():
    first = BitMatrix.from_strings(["11"])
    second = BitMatrix.from_strings(["10"])
    assert intersect(first, second).rank == 0


@given(matrices())
def test_eliminate_gives_unit_pivot_columns(M: BitMatrix):
    order = list(reversed(range(M.cols)))
    rows, pivots = eliminate(M, order)
    assert len(rows) == M.rank
    for row, pivot in zip(rows, pivots):
        assert row >> pivot & 1
        assert sum(other >> pivot & 1 for other in rows) == 1


def test_matrix_product():
    A = BitMatrix.from_strings(["10", "11"])
    assert (A @ A).to_strings() == ["10", "01"]


@given(lists(integers(min_value=0, max_value=(1 << 130) - 1), min_size=1, max_size=5))
def test_packing_keeps_weights(rows):
    packed = pack_rows(rows, 130)
    assert popcounts(packed).tolist() == [row.bit_count() for row in rows]
    assert [unpack_row(row) for row in packed] == rows


def test_unpack_to_array():
    grid = unpack_to_array([0b101, 0b010], 3)
    assert grid.tolist() == [[1, 0, 1], [0, 1, 0]]


def span(G: BitMatrix) -> set:
    words = {0}
    for row in G.rows:
        words |= {word ^ row for word in words}
    return words


@given(matrices())
def test_rref_is_idempotent(M: BitMatrix):
    echelon = rref(M)
    assert rref(echelon.matrix) == echelon


@given(matrices(nrows=3, cols=6), words(6), words(6))
def test_contains_is_closed_under_addition(G: BitMatrix, u: BitWord, v: BitWord):
    if contains(G, u) and contains(G, v):
        assert contains(G, u + v)
    for row in G:
        assert contains(G, row)
    assert contains(G, BitWord.zero(6))


@given(matrices(nrows=3, cols=6))
def test_contains_matches_span(G: BitMatrix):
    members = span(G)
    for bits in range(1 << 6):
        assert contains(G, BitWord(6, bits)) == (bits in members)


@given(tuples(matrices(nrows=4, cols=8), matrices(nrows=4, cols=8)))
def test_intersection_matches_codeword_sets(pair):
    G1, G2 = pair
    common = intersect(G1, G2)
    assert span(common) == span(G1) & span(G2)
