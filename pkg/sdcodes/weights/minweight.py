"""
Minimum weight by information-set enumeration.

Codewords are enumerated as messages of growing weight through the
systematic generators of several column-disjoint information sets. After
level ``r`` in every set, a codeword not yet seen has at least ``r + 1``
ones on each full information set, which gives the certified lower bound.
"""
from math import comb
from typing import (
    Callable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from ..codes import Code
from ..errors import BudgetExceededError, CapExceededError, DimensionError
from ..gf2 import BitWord, eliminate, pack_rows, popcounts, unpack_row
from ..logging import get_logger
from ..models import CertificateKind, MinWeightCertificate

logger = get_logger()


class InformationSet(NamedTuple):
    """``rows`` is a generator that is systematic on ``pivots`` (0-based)."""

    rows: Tuple[int, ...]
    pivots: Tuple[int, ...]
    rank: int


def information_sets(code: Code) -> List[InformationSet]:
    """
    Column-disjoint information sets, taken greedily from the lowest free
    column. The last set may be partial; its rank is the number of pivots in
    columns not used by the earlier sets.
    """
    k, n = code.k, code.n
    used: List[int] = []
    sets: List[InformationSet] = []
    while k:
        used_set = set(used)
        fresh = [column for column in range(n) if column not in used_set]
        if not fresh:
            break
        rows, pivots = eliminate(code.generator, fresh + used)
        rank = sum(1 for pivot in pivots if pivot not in used_set)
        if rank == 0:
            break
        sets.append(InformationSet(tuple(rows), tuple(pivots), rank))
        if rank < k or len(fresh) == rank:
            break
        used.extend(pivot for pivot in pivots if pivot not in used_set)
    return sets


def weight_divisor(code: Code) -> int:
    """
    Largest of 4, 2, 1 that provably divides every codeword weight, read off
    the generator rows.
    """
    rows = code.generator.rows
    if all(row.bit_count() % 2 == 0 for row in rows):
        orthogonal = all(
            (row & other).bit_count() % 2 == 0
            for i, row in enumerate(rows)
            for other in rows[i + 1 :]
        )
        if orthogonal and all(row.bit_count() % 4 == 0 for row in rows):
            return 4
        return 2
    return 1


def _round_up(value: int, divisor: int) -> int:
    return -(-value // divisor) * divisor


def lower_bound(
    sets: Sequence[InformationSet], k: int, level: int, divisor: int
) -> int:
    """Certified bound once every message of weight <= ``level`` is seen."""
    bound = sum(max(0, level + 1 - (k - info.rank)) for info in sets)
    return _round_up(bound, divisor)


def _suffixes(
    packed: np.ndarray, size: int, upper: int
) -> Iterator[Tuple[np.ndarray, int]]:
    # size-subsets of range(upper) in colex order, with their smallest index
    if size == 0:
        yield np.zeros(packed.shape[1], dtype=np.uint64), upper
        return
    for top in range(size - 1, upper):
        for partial, low in _suffixes(packed, size - 1, top):
            yield partial ^ packed[top], low


def level_words(
    packed: np.ndarray, level: int
) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """
    All XORs of ``level`` distinct rows of ``packed``, in colexicographic
    order of the row subsets.

    Yields blocks ``(words, weights)``; the smallest index of each subset
    varies within a block.
    """
    k = packed.shape[0]
    if not 1 <= level <= k:
        return
    for suffix, low in _suffixes(packed, level - 1, k):
        if low == 0:
            continue
        block = packed[:low] ^ suffix
        yield block, popcounts(block)


def min_weight(
    code: Code,
    budget: Optional[int] = None,
    early_stop: Optional[int] = None,
) -> MinWeightCertificate:
    """
    Certify the minimum weight of ``code``.

    ``budget`` caps the number of messages enumerated over all sets; a level
    that would overrun it is not started. With ``early_stop`` the search ends
    as soon as a codeword of weight below it is seen.
    """
    k, n = code.k, code.n
    if k == 0:
        raise DimensionError("the zero code has no minimum weight")
    sets = information_sets(code)
    divisor = weight_divisor(code)
    packed_sets = [pack_rows(info.rows, n) for info in sets]
    ranks = tuple(info.rank for info in sets)
    best: Optional[BitWord] = None
    enumerated = 0
    level = 0
    bound = lower_bound(sets, k, 0, divisor)
    notes: List[str] = []
    logger.fdebug("Information sets {ranks}, weight divisor {divisor}")

    def certificate() -> MinWeightCertificate:
        levels = (level,) * len(sets)
        if best is not None and (best.weight <= bound or level == k):
            return MinWeightCertificate(
                CertificateKind.EXACT, best.weight, best, levels, ranks, enumerated
            )
        return MinWeightCertificate(
            CertificateKind.LOWER_BOUND,
            bound,
            best,
            levels,
            ranks,
            enumerated,
            tuple(notes),
        )

    while level < k:
        if best is not None and best.weight <= bound:
            break
        cost = len(sets) * comb(k, level + 1)
        if budget is not None and enumerated + cost > budget:
            notes.append(f"budget exhausted before level {level + 1}")
            logger.finfo("Budget {budget} exhausted before level {level + 1}")
            break
        stopped = False
        for packed in packed_sets:
            for block, weights in level_words(packed, level + 1):
                index = int(np.argmin(weights))
                if best is None or int(weights[index]) < best.weight:
                    best = BitWord(n, unpack_row(block[index]))
            if early_stop is not None and best and best.weight < early_stop:
                stopped = True
                break
        if stopped:
            # the level is incomplete, so the bound stays where it was
            notes.append(f"stopped at a word of weight {best.weight} < {early_stop}")
            break
        enumerated += cost
        level += 1
        bound = lower_bound(sets, k, level, divisor)
        logger.fdebug("Level {level}: bound {bound}, best {best and best.weight}")
    return certificate()


def _systematic(code: Code, order: Sequence[int]) -> np.ndarray:
    rows, _ = eliminate(code.generator, order)
    return pack_rows(rows, code.n)


def find_low_weight(
    code: Code,
    target: int,
    budget: int,
    seed: Union[int, Sequence[int]] = 0,
    accept: Optional[Callable[[BitWord], bool]] = None,
) -> Optional[BitWord]:
    """
    Randomised information-set search for a codeword of weight <= ``target``.

    Each of the ``budget`` iterations draws a column permutation, takes the
    systematic generator on it and checks every message of weight 1 and 2.
    ``accept`` filters candidates before they are returned.
    """
    n = code.n
    if code.k == 0:
        return None
    rng = np.random.default_rng(seed)
    for iteration in range(budget):
        packed = _systematic(code, rng.permutation(n).tolist())
        best: Optional[BitWord] = None
        for level in (1, 2):
            for block, weights in level_words(packed, level):
                for index in np.flatnonzero(weights <= target).tolist():
                    weight = int(weights[index])
                    if weight == 0 or (best is not None and weight >= best.weight):
                        continue
                    word = BitWord(n, unpack_row(block[index]))
                    if accept is None or accept(word):
                        best = word
        if best is not None:
            logger.fdebug("Found weight {best.weight} after {iteration + 1} iterations")
            return best
    logger.fdebug("No word of weight <= {target} in {budget} iterations")
    return None


def enumerate_weight(
    code: Code,
    w: int,
    cap: int,
    budget: Optional[int] = None,
) -> List[BitWord]:
    """
    Every codeword of weight exactly ``w``, ordered by support.

    Levels are enumerated until the certified bound passes ``w``.
    """
    k, n = code.k, code.n
    if w == 0:
        return [BitWord.zero(n)]
    if w > n or k == 0:
        return []
    sets = information_sets(code)
    divisor = weight_divisor(code)
    if w % divisor:
        return []
    packed_sets = [pack_rows(info.rows, n) for info in sets]
    found = set()
    enumerated = 0
    level = 0
    while level < k and lower_bound(sets, k, level, divisor) <= w:
        cost = len(sets) * comb(k, level + 1)
        if budget is not None and enumerated + cost > budget:
            raise BudgetExceededError(
                f"listing weight {w} needs level {level + 1}, beyond budget {budget}"
            )
        for packed in packed_sets:
            for block, weights in level_words(packed, level + 1):
                for index in np.flatnonzero(weights == w).tolist():
                    found.add(unpack_row(block[index]))
                if len(found) > cap:
                    raise CapExceededError(f"more than {cap} codewords of weight {w}")
        enumerated += cost
        level += 1
    logger.fdebug("{len(found)} codewords of weight {w} after level {level}")
    words = [BitWord(n, bits) for bits in found]
    return sorted(words, key=lambda word: word.support())
