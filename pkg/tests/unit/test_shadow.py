import pytest
from hypothesis import given
from hypothesis.strategies import integers, sampled_from

from sdcodes.codes import Code, ParityClass, four_circulant, is_self_dual, parity_class
from sdcodes.data import builtin_code, d112_support
from sdcodes.enumerators import GleasonType, fit_coefficients, shadow_enumerator
from sdcodes.errors import (
    AlreadyDoublyEvenError,
    DegenerateNeighborError,
    DimensionError,
    NotSelfDualError,
    OddVectorError,
)
from sdcodes.gf2 import BitMatrix, BitWord, intersect
from sdcodes.models import WeightDistribution
from sdcodes.shadow import (
    doubly_even_neighbors,
    even_subcode,
    find_low_weight_shadow,
    is_neighbor,
    neighbor_via_vector,
    shadow_decompose,
    shadow_distribution,
)
from sdcodes.weights import find_low_weight, weight_distribution_bruteforce
from tests.mocks import E8_SPEC, I4_I4, self_dual_codes, slow

REPETITION = Code(BitMatrix.from_strings(["11"]))
IDENTITY_PAIR = Code(BitMatrix.from_strings(I4_I4), name="pair")
E8 = four_circulant(E8_SPEC)


def singly_even_codes():
    codes = []
    for m in (2, 3, 4, 5):
        codes.extend(
            code
            for code in self_dual_codes(m, 20, seed=10 + m)
            if parity_class(code) is ParityClass.SINGLY_EVEN
        )
    return codes


def test_repetition_code_shadow():
    decomposition = shadow_decompose(REPETITION)
    assert decomposition.C0.k == 0
    assert {decomposition.t1.weight, decomposition.t3.weight} == {1}
    assert str(decomposition.t1) < str(decomposition.t3)
    assert shadow_distribution(REPETITION) == WeightDistribution(2, {1: 2})


def test_even_subcode_is_doubly_even():
    C0 = even_subcode(IDENTITY_PAIR)
    assert C0.k == 3
    assert all(row.bit_count() % 4 == 0 for row in C0.generator.rows)


def test_guards():
    with pytest.raises(AlreadyDoublyEvenError):
        shadow_decompose(E8)
    with pytest.raises(NotSelfDualError):
        shadow_decompose(Code(BitMatrix.from_strings(["1100"])))


def test_shadow_matches_enumerator():
    codes = singly_even_codes()
    assert codes
    for code in codes:
        dist = weight_distribution_bruteforce(code)
        coeffs = fit_coefficients(dist, GleasonType.I)
        expected = shadow_enumerator(code.n, coeffs).to_distribution(code.n)
        assert shadow_distribution(code) == expected


def test_shadow_membership():
    decomposition = shadow_decompose(IDENTITY_PAIR)
    assert decomposition.in_shadow(decomposition.t1)
    assert decomposition.in_shadow(decomposition.t3)
    assert not decomposition.in_shadow(decomposition.t2)


def test_neighbors_of_identity_pair():
    first, second = doubly_even_neighbors(IDENTITY_PAIR)
    assert first.same_code(E8) or second.same_code(E8)
    for neighbor in (first, second):
        assert parity_class(neighbor) is ParityClass.DOUBLY_EVEN
        assert is_neighbor(IDENTITY_PAIR, neighbor)
    assert {first.name, second.name} == {"pair-N1", "pair-N3"}


def test_neighbors_need_length_divisible_by_eight():
    with pytest.raises(DimensionError):
        doubly_even_neighbors(REPETITION)


def test_find_low_weight_shadow():
    decomposition = shadow_decompose(IDENTITY_PAIR)
    word = find_low_weight_shadow(IDENTITY_PAIR, 4, budget=20, seed=3)
    assert word is not None
    assert decomposition.in_shadow(word)


def test_neighbor_via_vector():
    x = BitWord.from_string("11110000")
    neighbor = neighbor_via_vector(IDENTITY_PAIR, x)
    assert neighbor.k == 4
    assert neighbor.contains(x)
    assert parity_class(neighbor) is ParityClass.DOUBLY_EVEN
    assert is_neighbor(IDENTITY_PAIR, neighbor)


def test_neighbor_via_vector_guards():
    with pytest.raises(OddVectorError):
        neighbor_via_vector(IDENTITY_PAIR, BitWord.from_string("10000000"))
    inside = BitWord.from_string("10001000")
    assert neighbor_via_vector(IDENTITY_PAIR, inside) is IDENTITY_PAIR
    with pytest.raises(DegenerateNeighborError):
        neighbor_via_vector(IDENTITY_PAIR, inside, strict=True)


def test_is_neighbor_rejects_same_code():
    assert not is_neighbor(E8, E8)


def test_d112_construction():
    c112 = builtin_code("c112")
    d112 = neighbor_via_vector(c112, d112_support(), name="d112")
    assert parity_class(d112) is ParityClass.DOUBLY_EVEN
    assert intersect(c112.generator, d112.generator).rank == 55
    assert any(d112.same_code(code) for code in doubly_even_neighbors(c112))


@slow
def test_c112_shadow_weight():
    word = find_low_weight_shadow(builtin_code("c112"), 16, budget=20_000)
    assert word is not None and word.weight == 16


@slow
def test_sibling_of_d112_has_weight_16_word():
    d112 = builtin_code("d112")
    pair = doubly_even_neighbors(builtin_code("c112"))
    sibling = next(code for code in pair if not code.same_code(d112))
    word = find_low_weight(sibling, 16, budget=20_000, seed=0)
    assert word is not None and word.weight == 16
    assert sibling.contains(word)


def satisfies_shadow_condition(code: Code, u: BitWord) -> bool:
    """``u.c = wt(c)/2 (mod 2)`` on the generator rows, which is linear in ``c``."""
    return all(
        (u.bits & row).bit_count() % 2 == row.bit_count() // 2 % 2
        for row in code.generator.rows
    )


def test_shadow_matches_its_definition():
    small = [REPETITION, IDENTITY_PAIR]
    small.extend(code for code in singly_even_codes() if code.n <= 12)
    for code in small:
        decomposition = shadow_decompose(code)
        members = [
            bits
            for bits in range(1 << code.n)
            if satisfies_shadow_condition(code, BitWord(code.n, bits))
        ]
        assert len(members) == 2**code.k
        for bits in members:
            assert decomposition.in_shadow(BitWord(code.n, bits))
            assert not code.contains(BitWord(code.n, bits))


def test_shadow_invariants():
    for code in singly_even_codes():
        decomposition = shadow_decompose(code)
        dist = shadow_distribution(code)
        assert dist.total == 2**code.k
        assert all(weight % 4 == code.n // 2 % 4 for weight, _ in dist.items())
        assert not code.contains(decomposition.t1)
        assert not code.contains(decomposition.t3)
        assert code.contains(decomposition.t1 + decomposition.t3)


SMALL_SELF_DUAL = [
    code for m in (1, 2, 3, 4) for code in self_dual_codes(m, 6, seed=40 + m)
]


@given(sampled_from(SMALL_SELF_DUAL), integers(min_value=0, max_value=2**16 - 1))
def test_neighbor_via_vector_is_self_dual(code, bits):
    x = BitWord(code.n, bits & ((1 << code.n) - 1))
    if x.weight % 2:
        x = x + BitWord.from_support(code.n, [1])
    neighbor = neighbor_via_vector(code, x)
    assert is_self_dual(neighbor)
    assert neighbor.contains(x)
    if not code.contains(x):
        assert is_neighbor(code, neighbor)
