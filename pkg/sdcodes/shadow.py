"""
Shadows and neighbors of singly even self-dual codes.

For a singly even self-dual ``C`` with doubly even subcode ``C0``,
``C0^⊥ = C0 ∪ C1 ∪ C2 ∪ C3`` with ``C = C0 ∪ C2`` and shadow ``S = C1 ∪ C3``.
"""
import json
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .codes import Code, ParityClass, is_self_dual, parity_class
from .errors import (
    AlreadyDoublyEvenError,
    DegenerateNeighborError,
    DimensionError,
    LengthMismatchError,
    NotSelfDualError,
    OddVectorError,
)
from .gf2 import BitMatrix, BitWord, dual, intersect, reduce_word
from .jobs import JobManager
from .logging import get_logger
from .models import WeightDistribution
from .weights import (
    DEFAULT_BRUTEFORCE_CAP,
    coset_weight_distribution,
    find_low_weight,
    min_weight,
)

logger = get_logger()


def _require_singly_even(code: Code):
    kind = parity_class(code)
    if kind is ParityClass.NOT_SELF_DUAL:
        raise NotSelfDualError(f"code {code.name or ''} is not self-dual".strip())
    if kind is ParityClass.DOUBLY_EVEN:
        raise AlreadyDoublyEvenError("a doubly even code has no shadow")


def _odd_rows(code: Code) -> List[int]:
    return [row for row in code.generator.rows if row.bit_count() % 4 == 2]


def even_subcode(code: Code) -> Code:
    """
    Codewords of weight divisible by four.

    Each generator row of weight 2 (mod 4) other than the first is replaced by
    its sum with the first, which is doubly even because rows are orthogonal.
    """
    _require_singly_even(code)
    odd = _odd_rows(code)
    pivot = odd[0]
    rows = []
    for row in code.generator.rows:
        if row == pivot:
            continue
        rows.append(row ^ pivot if row.bit_count() % 4 == 2 else row)
    name = f"{code.name}-C0" if code.name else None
    return Code(BitMatrix(code.n, tuple(rows)), name=name)


@dataclass(repr=False)
class ShadowDecomposition:
    """
    ``t1``, ``t2``, ``t3`` are canonical (reduced modulo ``C0``) representatives
    of ``C1``, ``C2``, ``C3``; ``C1`` holds the lexicographically smaller one.
    """

    code: Code
    C0: Code
    t1: BitWord
    t2: BitWord
    t3: BitWord

    @property
    def n(self) -> int:
        return self.code.n

    def in_shadow(self, word: BitWord) -> bool:
        bits = reduce_word(self.C0.echelon, word.bits)
        return bits in (self.t1.bits, self.t3.bits)

    def neighbor_generators(self) -> Tuple[BitMatrix, BitMatrix]:
        generator = self.C0.generator
        return (
            generator.vstack(BitMatrix(self.n, (self.t1.bits,))),
            generator.vstack(BitMatrix(self.n, (self.t3.bits,))),
        )

    def __repr__(self):
        return json.dumps(self.dict())

    def dict(self):
        return {
            "n": self.n,
            "C0_dimension": self.C0.k,
            "t1": self.t1.support(),
            "t2": self.t2.support(),
            "t3": self.t3.support(),
        }


def shadow_decompose(code: Code) -> ShadowDecomposition:
    C0 = even_subcode(code)
    n = code.n
    echelon = C0.echelon
    t2 = reduce_word(echelon, _odd_rows(code)[0])
    t1 = next(
        row for row in dual(C0.generator).rows if not code.contains(BitWord(n, row))
    )
    first = reduce_word(echelon, t1)
    second = reduce_word(echelon, t1 ^ t2)
    words = sorted((BitWord(n, first), BitWord(n, second)), key=str)
    logger.fdebug("Shadow representatives of weights {[w.weight for w in words]}")
    return ShadowDecomposition(code, C0, words[0], BitWord(n, t2), words[1])


def shadow_distribution(
    code: Code,
    cap: int = DEFAULT_BRUTEFORCE_CAP,
    jobs: Optional[JobManager] = None,
) -> WeightDistribution:
    """Weight distribution of ``C1 ∪ C3`` by enumerating both cosets."""
    decomposition = shadow_decompose(code)
    C0 = decomposition.C0
    first = coset_weight_distribution(C0, decomposition.t1, cap, jobs)
    return first.merge(coset_weight_distribution(C0, decomposition.t3, cap, jobs))


def find_low_weight_shadow(
    code: Code,
    target: int,
    budget: int,
    seed: Union[int, Sequence[int]] = 0,
) -> Optional[BitWord]:
    """
    Search both shadow cosets through the codes ``C0 + t1`` and ``C0 + t3``;
    only words outside ``C0`` are shadow vectors.
    """
    decomposition = shadow_decompose(code)
    C0 = decomposition.C0
    seeds = [seed] if isinstance(seed, int) else list(seed)
    best: Optional[BitWord] = None
    for index, generator in enumerate(decomposition.neighbor_generators()):
        found = find_low_weight(
            Code(generator),
            target,
            budget,
            seed=[*seeds, index],
            accept=lambda word: not C0.contains(word),
        )
        if found is not None and (best is None or found.weight < best.weight):
            best = found
    return best


def doubly_even_neighbors(
    code: Code, budget: Optional[int] = None
) -> Tuple[Code, Code]:
    """
    ``C0 ∪ C1`` and ``C0 ∪ C3``.

    Ordered by reduced generator; with a ``budget``, the code with the
    lighter minimum-weight witness comes first.
    """
    if code.n % 8:
        raise DimensionError(
            f"the shadow neighbors are self-dual only when 8 | n, got {code.n}"
        )
    decomposition = shadow_decompose(code)
    prefix = code.name or "C"
    neighbors = [
        Code(generator, name=f"{prefix}-N{index}")
        for index, generator in zip((1, 3), decomposition.neighbor_generators())
    ]
    neighbors.sort(key=lambda neighbor: neighbor.standard_form.to_strings())
    if budget is not None:

        def witness_weight(neighbor: Code) -> int:
            certificate = min_weight(neighbor, budget=budget)
            upper = certificate.upper_bound
            return upper if upper is not None else neighbor.n + 1

        neighbors.sort(key=witness_weight)
    return neighbors[0], neighbors[1]


def neighbor_via_vector(
    code: Code,
    x: BitWord,
    name: Optional[str] = None,
    strict: bool = False,
) -> Code:
    """
    The code spanned by ``{c in C : c.x = 0}`` and ``x``.

    Rows not orthogonal to ``x`` are fixed by adding the first of them, which
    leaves a codimension-one subcode.
    """
    if x.length != code.n:
        raise LengthMismatchError(code.n, x.length)
    if x.weight % 2:
        raise OddVectorError(f"x has odd weight {x.weight}, so x.x = 1")
    if code.contains(x):
        if strict:
            raise DegenerateNeighborError("x lies in C; the neighbor is C itself")
        logger.warning("x lies in the code; returning it unchanged")
        return code
    rows = code.generator.rows
    odd = [row for row in rows if (row & x.bits).bit_count() % 2]
    kept = [row for row in rows if not (row & x.bits).bit_count() % 2]
    kept.extend(row ^ odd[0] for row in odd[1:])
    kept.append(x.bits)
    neighbor = Code.spanned_by(BitMatrix(code.n, tuple(kept)), name=name)
    logger.fdebug("Neighbor of dimension {neighbor.k} from x of weight {x.weight}")
    return neighbor


def is_neighbor(code: Code, other: Code) -> bool:
    """Self-dual codes meeting in a subcode of dimension ``n/2 - 1``."""
    if code.n != other.n:
        raise LengthMismatchError(code.n, other.n)
    if not (is_self_dual(code) and is_self_dual(other)):
        return False
    common = intersect(code.generator, other.generator)
    return common.rank == code.n // 2 - 1
