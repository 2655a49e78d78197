import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, List, Optional, Sequence

from .errors import DimensionError, LengthMismatchError, SpecFormatError
from .gf2 import BitMatrix, BitWord, RowEchelon, basis, dual, reduce_word, rref


class ParityClass(Enum):
    DOUBLY_EVEN = "doubly even"
    SINGLY_EVEN = "singly even"
    NOT_SELF_DUAL = "not self-dual"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FourCirculantSpec:
    """First rows of the circulants A and B; the code has length 4m."""

    rA: BitWord
    rB: BitWord

    def __post_init__(self):
        if self.rA.length != self.rB.length:
            raise LengthMismatchError(self.rA.length, self.rB.length)

    @classmethod
    def from_strings(cls, rA: str, rB: str) -> "FourCirculantSpec":
        return cls(BitWord.from_string(rA), BitWord.from_string(rB))

    @property
    def m(self) -> int:
        return self.rA.length

    @property
    def n(self) -> int:
        return 4 * self.m

    def line(self) -> str:
        return f"{self.rA} {self.rB}"

    def __str__(self) -> str:
        return self.line()


class Code:
    """
    Binary linear code held as a full-rank generator matrix.

    The generator is kept exactly as constructed; the reduced form is computed
    on first use.
    """

    def __init__(self, generator: BitMatrix, name: Optional[str] = None):
        echelon = rref(generator)
        if echelon.rank != generator.nrows:
            raise DimensionError(
                f"generator has {generator.nrows} rows but rank {echelon.rank}"
            )
        self._generator = generator
        self._echelon = echelon
        self.name = name

    @classmethod
    def spanned_by(cls, rows: BitMatrix, name: Optional[str] = None) -> "Code":
        return cls(basis(rows), name=name)

    @property
    def n(self) -> int:
        return self._generator.cols

    @property
    def k(self) -> int:
        return self._generator.nrows

    @property
    def generator(self) -> BitMatrix:
        return self._generator

    @property
    def echelon(self) -> RowEchelon:
        return self._echelon

    @cached_property
    def standard_form(self) -> BitMatrix:
        return self._echelon.matrix

    def contains(self, word: BitWord) -> bool:
        if word.length != self.n:
            raise LengthMismatchError(self.n, word.length)
        return reduce_word(self._echelon, word.bits) == 0

    def dual(self) -> "Code":
        return Code(dual(self._generator))

    def same_code(self, other: "Code") -> bool:
        return self.n == other.n and self.standard_form == other.standard_form

    def __eq__(self, other) -> bool:
        return isinstance(other, Code) and self.same_code(other)

    def __hash__(self) -> int:
        return hash((self.n, self.standard_form.rows))

    def dict(self):
        return {"name": self.name, "n": self.n, "k": self.k}

    def __repr__(self) -> str:
        return json.dumps(self.dict())


def rotate(word: BitWord, shift: int) -> BitWord:
    """Cyclic shift of the coordinates ``shift`` places to the right."""
    m = word.length
    shift %= m
    mask = (1 << m) - 1
    return BitWord(m, ((word.bits << shift) | (word.bits >> (m - shift))) & mask)


def circulant(first_row: BitWord) -> BitMatrix:
    return BitMatrix(
        first_row.length,
        tuple(rotate(first_row, i).bits for i in range(first_row.length)),
    )


def four_circulant(spec: FourCirculantSpec, name: Optional[str] = None) -> Code:
    """
    Generator ``[I_2m | (A B ; B^T A^T)]`` for circulants A, B of order m.
    """
    A = circulant(spec.rA)
    B = circulant(spec.rB)
    right = A.hstack(B).vstack(B.transpose().hstack(A.transpose()))
    return Code(BitMatrix.identity(2 * spec.m).hstack(right), name=name)


def self_duality_defect(spec: FourCirculantSpec) -> BitWord:
    """
    First row of ``AA^T + BB^T``; the matrix is circulant, so the pair gives a
    self-dual code exactly when this equals ``(1 0 ... 0)``.
    """
    m = spec.m
    row = 0
    for shift in range(m):
        overlap = (spec.rA.bits & rotate(spec.rA, shift).bits).bit_count()
        overlap += (spec.rB.bits & rotate(spec.rB, shift).bits).bit_count()
        if overlap & 1:
            row |= 1 << shift
    return BitWord(m, row)


def is_self_dual(code: Code) -> bool:
    if 2 * code.k != code.n:
        return False
    rows = code.generator.rows
    for i, row in enumerate(rows):
        for other in rows[i:]:
            if (row & other).bit_count() & 1:
                return False
    return True


def parity_class(code: Code) -> ParityClass:
    if not is_self_dual(code):
        return ParityClass.NOT_SELF_DUAL
    # a self-orthogonal code generated by doubly even rows is doubly even
    if all(row.bit_count() % 4 == 0 for row in code.generator.rows):
        return ParityClass.DOUBLY_EVEN
    return ParityClass.SINGLY_EVEN


def _content_lines(text: str) -> Iterable[tuple]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def parse_spec_file(text: str) -> List[FourCirculantSpec]:
    specs: List[FourCirculantSpec] = []
    for number, line in _content_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise SpecFormatError(f"expected 'rA rB', got {line!r}", number)
        rA, rB = fields
        if any(char not in "01" for char in rA + rB):
            raise SpecFormatError(f"characters outside {{0,1}} in {line!r}", number)
        if len(rA) != len(rB):
            raise SpecFormatError(
                f"rA has length {len(rA)} but rB has length {len(rB)}", number
            )
        if specs and len(rA) != specs[0].m:
            raise SpecFormatError(
                f"circulant order {len(rA)} differs from {specs[0].m}", number
            )
        specs.append(FourCirculantSpec.from_strings(rA, rB))
    return specs


def serialize_spec_file(specs: Sequence[FourCirculantSpec]) -> str:
    return "".join(f"{spec.line()}\n" for spec in specs)


def parse_generator_file(text: str) -> BitMatrix:
    rows: List[BitWord] = []
    for number, line in _content_lines(text):
        try:
            word = BitWord.from_string(line)
        except ValueError as e:
            raise SpecFormatError(str(e), number)
        if rows and word.length != rows[0].length:
            raise SpecFormatError(
                f"row length {word.length} differs from {rows[0].length}", number
            )
        rows.append(word)
    if not rows:
        raise SpecFormatError("generator file has no rows")
    return BitMatrix.from_words(rows)


def serialize_generator_file(matrix: BitMatrix) -> str:
    return "".join(f"{line}\n" for line in matrix.to_strings())
