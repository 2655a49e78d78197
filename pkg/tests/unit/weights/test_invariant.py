import numpy as np
import pytest
from hypothesis import given
from hypothesis.strategies import integers, lists, sets

from sdcodes.codes import four_circulant
from sdcodes.data import golay24
from sdcodes.errors import DimensionError, LengthMismatchError
from sdcodes.gf2 import BitWord
from sdcodes.weights import enumerate_weight, gram_invariant, gram_matrix
from tests.mocks import E8_SPEC

GOLAY_OCTADS = enumerate_weight(golay24(), 8, cap=1000)


def permute(word: BitWord, permutation) -> BitWord:
    return BitWord.from_support(
        word.length, [permutation[i - 1] + 1 for i in word.support()]
    )


def test_e8_invariant():
    words = enumerate_weight(four_circulant(E8_SPEC), 4, cap=100)
    assert gram_invariant(words) == [3, 7]


def test_golay_invariant():
    assert gram_invariant(GOLAY_OCTADS) == [77, 253]


@given(integers(min_value=0, max_value=2**32 - 1))
def test_permutation_invariance(seed):
    permutation = np.random.default_rng(seed).permutation(24).tolist()
    permuted = [permute(word, permutation) for word in GOLAY_OCTADS]
    assert gram_invariant(permuted) == [77, 253]


def test_chunks_add_up(monkeypatch):
    from sdcodes.weights import invariant

    monkeypatch.setattr(invariant, "CHUNK_ROWS", 7)
    assert gram_invariant(GOLAY_OCTADS) == [77, 253]


def test_errors():
    with pytest.raises(DimensionError):
        gram_invariant([])
    with pytest.raises(LengthMismatchError):
        gram_invariant([BitWord.zero(4), BitWord.zero(5)])


def test_golay_trace():
    assert int(np.trace(gram_matrix(GOLAY_OCTADS))) == 8 * 759


@given(
    integers(min_value=1, max_value=12).flatmap(
        lambda w: lists(
            sets(integers(min_value=1, max_value=16), min_size=w, max_size=w),
            min_size=1,
            max_size=20,
        )
    )
)
def test_trace_is_weight_times_count(supports):
    words = [BitWord.from_support(16, support) for support in supports]
    w = len(supports[0])
    gram = gram_matrix(words)
    assert int(np.trace(gram)) == w * len(words)
    assert (gram == gram.T).all()
