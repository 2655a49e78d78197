"""
Bit-packed vectors and matrices over the two-element field.

Coordinate ``i`` (1-indexed, as printed in supports) is stored as bit ``i - 1``
of a Python integer, so adding two rows is one big-integer XOR.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

import numpy as np

from .errors import LengthMismatchError

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


@dataclass(frozen=True)
class BitWord:

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"word length must be positive, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits set beyond coordinate {self.length}")

    @classmethod
    def zero(cls, length: int) -> "BitWord":
        return cls(length, 0)

    @classmethod
    def from_string(cls, text: str) -> "BitWord":
        """
        Parse a bit string; the leftmost character is coordinate 1.
        """
        text = text.strip()
        if not text or any(char not in "01" for char in text):
            raise ValueError(f"not a bit string: {text!r}")
        bits = 0
        for index, char in enumerate(text):
            if char == "1":
                bits |= 1 << index
        return cls(len(text), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitWord":
        bits = 0
        for coordinate in support:
            if not 1 <= coordinate <= length:
                raise IndexError(f"coordinate {coordinate} outside 1..{length}")
            bits |= 1 << (coordinate - 1)
        return cls(length, bits)

    @classmethod
    def from_bits(cls, values: Sequence[int]) -> "BitWord":
        bits = 0
        for index, value in enumerate(values):
            if value:
                bits |= 1 << index
        return cls(len(values), bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> List[int]:
        return [index + 1 for index in range(self.length) if self.bits >> index & 1]

    def __getitem__(self, coordinate: int) -> int:
        if not 1 <= coordinate <= self.length:
            raise IndexError(f"coordinate {coordinate} outside 1..{self.length}")
        return self.bits >> (coordinate - 1) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: "BitWord") -> "BitWord":
        _check_lengths(self.length, other.length)
        return BitWord(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def __repr__(self) -> str:
        return f"BitWord({str(self)!r})"


def _check_lengths(expected: int, got: int):
    if expected != got:
        raise LengthMismatchError(expected, got)


def weight(v: BitWord) -> int:
    return v.weight


def inner_product(u: BitWord, v: BitWord) -> int:
    _check_lengths(u.length, v.length)
    return (u.bits & v.bits).bit_count() & 1


@dataclass(frozen=True)
class BitMatrix:

    cols: int
    rows: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.cols < 0:
            raise ValueError(f"column count must be nonnegative, got {self.cols}")
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if row < 0 or row >> self.cols:
                raise ValueError(f"row has bits beyond column {self.cols}")

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, cols: int) -> "BitMatrix":
        return cls(cols, (0,) * nrows)

    @classmethod
    def from_words(cls, words: Sequence[BitWord], cols: int = 0) -> "BitMatrix":
        if words:
            cols = words[0].length
        for word in words:
            _check_lengths(cols, word.length)
        return cls(cols, tuple(word.bits for word in words))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        return cls.from_words([BitWord.from_string(line) for line in lines])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def word(self, index: int) -> BitWord:
        """Row ``index`` (0-based) as a word."""
        return BitWord(self.cols, self.rows[index])

    def words(self) -> List[BitWord]:
        return [BitWord(self.cols, row) for row in self.rows]

    def __iter__(self) -> Iterator[BitWord]:
        return iter(self.words())

    def transpose(self) -> "BitMatrix":
        columns = []
        for col in range(self.cols):
            column = 0
            for index, row in enumerate(self.rows):
                if row >> col & 1:
                    column |= 1 << index
            columns.append(column)
        return BitMatrix(self.nrows, tuple(columns))

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        _check_lengths(self.nrows, other.nrows)
        return BitMatrix(
            self.cols + other.cols,
            tuple(a | b << self.cols for a, b in zip(self.rows, other.rows)),
        )

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        _check_lengths(self.cols, other.cols)
        return BitMatrix(self.cols, self.rows + other.rows)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        _check_lengths(self.cols, other.nrows)
        product = []
        for row in self.rows:
            acc = 0
            while row:
                low = row & -row
                acc ^= other.rows[low.bit_length() - 1]
                row ^= low
            product.append(acc)
        return BitMatrix(other.cols, tuple(product))

    @property
    def rank(self) -> int:
        return rref(self).rank

    def to_strings(self) -> List[str]:
        return [str(word) for word in self.words()]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


class RowEchelon(NamedTuple):
    matrix: BitMatrix
    rank: int
    pivots: List[int]


def rref(M: BitMatrix) -> RowEchelon:
    """
    Reduced row-echelon form.

    Pivots are taken in the leftmost available column from the first available
    row; zero rows end up at the bottom. Pivot columns are reported 1-indexed.
    """
    rows = list(M.rows)
    pivots: List[int] = []
    top = 0
    for col in range(M.cols):
        if top == len(rows):
            break
        bit = 1 << col
        pivot = next((i for i in range(top, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= rows[top]
        pivots.append(col + 1)
        top += 1
    return RowEchelon(BitMatrix(M.cols, tuple(rows)), top, pivots)


def eliminate(M: BitMatrix, column_order: Sequence[int]) -> Tuple[List[int], List[int]]:
    """
    Gaussian elimination preferring pivot columns in ``column_order``.

    Columns are 0-based here. Returns the nonzero reduced rows and, parallel to
    them, their pivot columns; every pivot column is a unit column of the
    result, so the rows form a systematic generator on those columns.
    """
    rows = [row for row in M.rows]
    reduced: List[int] = []
    pivots: List[int] = []
    for col in column_order:
        if not rows:
            break
        bit = 1 << col
        pivot = next((i for i, row in enumerate(rows) if row & bit), None)
        if pivot is None:
            continue
        pivot_row = rows.pop(pivot)
        rows = [row ^ pivot_row if row & bit else row for row in rows]
        reduced = [row ^ pivot_row if row & bit else row for row in reduced]
        reduced.append(pivot_row)
        pivots.append(col)
    return reduced, pivots


def dual(G: BitMatrix) -> BitMatrix:
    """
    Generator of the dual code: one row per non-pivot column of ``rref(G)``.

    For ``G = [I | M]`` this is exactly ``[M^T | I]``.
    """
    echelon = rref(G)
    pivot_columns = [p - 1 for p in echelon.pivots]
    pivot_set = set(pivot_columns)
    reduced = echelon.matrix.rows
    rows = []
    for free in range(G.cols):
        if free in pivot_set:
            continue
        row = 1 << free
        for index, pivot in enumerate(pivot_columns):
            if reduced[index] >> free & 1:
                row |= 1 << pivot
        rows.append(row)
    return BitMatrix(G.cols, tuple(rows))


def basis(G: BitMatrix) -> BitMatrix:
    """Nonzero rows of the reduced form: a basis of the row space."""
    echelon = rref(G)
    return BitMatrix(G.cols, echelon.matrix.rows[: echelon.rank])


def intersect(G1: BitMatrix, G2: BitMatrix) -> BitMatrix:
    _check_lengths(G1.cols, G2.cols)
    return dual(dual(G1).vstack(dual(G2)))


def contains(G: BitMatrix, v: BitWord) -> bool:
    _check_lengths(G.cols, v.length)
    echelon = rref(G)
    return reduce_word(echelon, v.bits) == 0


def reduce_word(echelon: RowEchelon, bits: int) -> int:
    """Canonical representative of ``bits`` modulo the row space."""
    for index, pivot in enumerate(echelon.pivots):
        if bits >> (pivot - 1) & 1:
            bits ^= echelon.matrix.rows[index]
    return bits


def words_per_row(n: int) -> int:
    return max(1, -(-n // WORD_BITS))


def pack_rows(rows: Sequence[int], n: int) -> np.ndarray:
    """Pack integer rows into a ``(len(rows), words)`` ``uint64`` array."""
    width = words_per_row(n)
    packed = np.zeros((len(rows), width), dtype=np.uint64)
    for index, row in enumerate(rows):
        for word in range(width):
            packed[index, word] = (row >> (WORD_BITS * word)) & _WORD_MASK
    return packed


def unpack_row(packed: np.ndarray) -> int:
    value = 0
    for word, chunk in enumerate(packed.tolist()):
        value |= int(chunk) << (WORD_BITS * word)
    return value


def popcounts(packed: np.ndarray) -> np.ndarray:
    """Row weights of a packed array (last axis holds the words)."""
    return np.bitwise_count(packed).sum(axis=-1, dtype=np.int64)


def unpack_to_array(words: Sequence[int], n: int) -> np.ndarray:
    """0/1 ``uint8`` matrix with one row per word and ``n`` columns."""
    nbytes = max(1, -(-n // 8))
    raw = b"".join(word.to_bytes(nbytes, "little") for word in words)
    grid = np.frombuffer(raw, dtype=np.uint8).reshape(len(words), nbytes)
    return np.unpackbits(grid, axis=1, bitorder="little")[:, :n]
