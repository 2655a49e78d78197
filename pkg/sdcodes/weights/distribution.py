"""
Exact weight distributions by exhaustive enumeration.

The low ``lo`` generator rows are expanded once into a table of all their
combinations; the remaining rows are walked in Gray-code order, so every step
XORs one row into the running prefix and weighs a whole table at once.
"""
from typing import List, Optional, Sequence

import numpy as np

from ..codes import Code
from ..errors import CapExceededError, LengthMismatchError
from ..gf2 import BitWord, pack_rows, popcounts
from ..jobs import JobManager
from ..logging import get_logger
from ..models import WeightDistribution

DEFAULT_BRUTEFORCE_CAP = 28
TABLE_ROWS = 16
# Gray-code prefixes handled by one job
RANGE_SIZE = 1 << 10

logger = get_logger()


def _table(rows: Sequence[int], n: int, offset: int) -> np.ndarray:
    table = pack_rows([offset], n)
    for row in pack_rows(rows, n):
        table = np.concatenate([table, table ^ row])
    return table


def _gray_prefix(rows: Sequence[int], index: int) -> int:
    gray = index ^ (index >> 1)
    prefix = 0
    position = 0
    while gray:
        if gray & 1:
            prefix ^= rows[position]
        gray >>= 1
        position += 1
    return prefix


def distribution_range(
    rows: Sequence[int], n: int, lo: int, start: int, stop: int, offset: int = 0
) -> List[int]:
    """
    Weight counts of ``offset + <rows>`` restricted to Gray indices
    ``start <= i < stop`` over the rows above ``lo``.
    """
    low_rows, high_rows = rows[:lo], rows[lo:]
    table = _table(low_rows, n, offset)
    packed_high = pack_rows(high_rows, n)
    prefix = pack_rows([_gray_prefix(high_rows, start)], n)[0]
    counts = np.zeros(n + 1, dtype=np.int64)
    for index in range(start, stop):
        if index > start:
            # bit flipped between gray(index - 1) and gray(index)
            flip = (index & -index).bit_length() - 1
            prefix = prefix ^ packed_high[flip]
        counts += np.bincount(popcounts(table ^ prefix), minlength=n + 1)
    return [int(count) for count in counts]


def _distribution(
    code: Code,
    offset: int,
    cap: int,
    jobs: Optional[JobManager],
) -> WeightDistribution:
    k, n = code.k, code.n
    if k > cap:
        raise CapExceededError(f"dimension {k} exceeds brute-force cap {cap}")
    rows = code.generator.rows
    lo = min(k, TABLE_ROWS)
    total = 1 << (k - lo)
    ranges = [
        (rows, n, lo, start, min(start + RANGE_SIZE, total), offset)
        for start in range(0, total, RANGE_SIZE)
    ]
    logger.fdebug("Enumerating 2^{k} words of length {n} in {len(ranges)} ranges")
    if jobs is not None and len(ranges) > 1:
        partials = jobs.map(distribution_range, ranges, "distribution")
    else:
        partials = [distribution_range(*args) for args in ranges]
    counts = [sum(column) for column in zip(*partials)]
    return WeightDistribution(n, dict(enumerate(counts)))


def weight_distribution_bruteforce(
    code: Code,
    cap: int = DEFAULT_BRUTEFORCE_CAP,
    jobs: Optional[JobManager] = None,
) -> WeightDistribution:
    return _distribution(code, 0, cap, jobs)


def coset_weight_distribution(
    code: Code,
    offset: BitWord,
    cap: int = DEFAULT_BRUTEFORCE_CAP,
    jobs: Optional[JobManager] = None,
) -> WeightDistribution:
    """Weight distribution of the coset ``offset + code``."""
    if offset.length != code.n:
        raise LengthMismatchError(code.n, offset.length)
    return _distribution(code, offset.bits, cap, jobs)
