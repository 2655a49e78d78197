from typing import List, Sequence

import numpy as np

from ..errors import DimensionError, LengthMismatchError
from ..gf2 import BitWord, unpack_to_array

CHUNK_ROWS = 4096


def gram_matrix(words: Sequence[BitWord]) -> np.ndarray:
    """
    ``M^T M`` over the integers, where ``M`` stacks ``words`` as 0/1 rows.

    Entry ``(i, i)`` counts the words through coordinate ``i`` and entry
    ``(i, j)`` the words through both ``i`` and ``j``.
    """
    if not words:
        raise DimensionError("gram invariant needs at least one word")
    n = words[0].length
    for word in words:
        if word.length != n:
            raise LengthMismatchError(n, word.length)
    gram = np.zeros((n, n), dtype=np.int64)
    for start in range(0, len(words), CHUNK_ROWS):
        chunk = words[start : start + CHUNK_ROWS]
        block = unpack_to_array([word.bits for word in chunk], n).astype(np.int64)
        gram += block.T @ block
    return gram


def gram_invariant(words: Sequence[BitWord]) -> List[int]:
    """Sorted distinct entries of :func:`gram_matrix`."""
    return [int(value) for value in np.unique(gram_matrix(words))]
