"""
Seeded random search for self-dual four-circulant codes.

Candidate ``i`` draws its spec from ``numpy.random.default_rng([seed, i])``,
so the outcome of every candidate is fixed by ``(seed, i)`` alone and the
record list does not depend on the number of workers.
"""
import asyncio
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..codes import FourCirculantSpec, four_circulant, self_duality_defect
from ..errors import BudgetExceededError, CapExceededError
from ..gf2 import BitWord
from ..jobs import JobManager
from ..logging import get_logger
from ..models import CampaignStats, ScreenResult, SearchConfig, SearchRecord
from ..weights import enumerate_weight, min_weight, weight_distribution_bruteforce
from .persistence import append_records, load_progress, reset_output, write_stats
from .store import RecordStore

logger = get_logger()

SCREEN_REJECTED = "screen"
MIN_WEIGHT_REJECTED = "min-weight"
BUDGET_REJECTED = "budget"
ACCEPTED = "accepted"


def random_spec(m: int, rng: np.random.Generator) -> FourCirculantSpec:
    """Uniform ``rA`` with its first bit set and uniform ``rB``."""
    rA = rng.integers(0, 2, size=m)
    rA[0] = 1
    rB = rng.integers(0, 2, size=m)
    return FourCirculantSpec(
        BitWord.from_bits(rA.tolist()), BitWord.from_bits(rB.tolist())
    )


def candidate_spec(config: SearchConfig, index: int) -> FourCirculantSpec:
    return random_spec(config.m, np.random.default_rng([config.seed, index]))


def screen(spec: FourCirculantSpec, doubly_even_only: bool = False) -> ScreenResult:
    defect = self_duality_defect(spec)
    if defect.bits != 1:
        return ScreenResult(False, f"AA^T + BB^T has first row {defect}")
    row_weight = 1 + spec.rA.weight + spec.rB.weight
    if doubly_even_only and row_weight % 4:
        return ScreenResult(False, f"row weight {row_weight} is not divisible by 4")
    return ScreenResult(True)


def dedupe_key(record: SearchRecord) -> str:
    """
    Weight-target count when it was enumerated, else the full distribution,
    else certificate and spec.
    """
    if record.count is not None:
        return f"count:{record.weight}:{record.count}"
    if record.distribution is not None:
        items = ",".join(f"{w}x{c}" for w, c in record.distribution.items())
        return f"distribution:{items}"
    certificate = record.certificate
    return (
        f"certificate:{certificate.kind.value}{certificate.value}:"
        f"{record.spec.rA}/{record.spec.rB}"
    )


def evaluate_candidate(
    config: SearchConfig, index: int
) -> Tuple[str, Optional[SearchRecord]]:
    """Screen, certify and key candidate ``index``."""
    spec = candidate_spec(config, index)
    if not screen(spec, config.doubly_even_only):
        return SCREEN_REJECTED, None
    code = four_circulant(spec)
    target = config.target_d
    certificate = min_weight(code, budget=config.budget, early_stop=target)
    upper = certificate.upper_bound
    if upper is not None and upper < target:
        return MIN_WEIGHT_REJECTED, None
    if certificate.lower_bound < target:
        return BUDGET_REJECTED, None
    record = SearchRecord(index, spec, certificate, key="", weight=target)
    try:
        record.count = len(
            enumerate_weight(code, target, cap=config.count_cap, budget=config.budget)
        )
    except (CapExceededError, BudgetExceededError):
        record.weight = None
        if code.k <= config.distribution_cap:
            record.distribution = weight_distribution_bruteforce(
                code, cap=config.distribution_cap
            )
    record.key = dedupe_key(record)
    return ACCEPTED, record


class CampaignRunner:
    """
    Draws candidates in batches through the job manager and merges the
    outcomes in draw order.
    """

    def __init__(
        self,
        config: SearchConfig,
        jobs: JobManager,
        progress: Optional[Callable[[CampaignStats], None]] = None,
    ):
        self._config = config
        self._jobs = jobs
        self._progress = progress
        self._stats = CampaignStats()
        self._store = RecordStore()
        self._pending: List[SearchRecord] = []

    @property
    def stats(self) -> CampaignStats:
        return self._stats

    @property
    def store(self) -> RecordStore:
        return self._store

    def _prepare_output(self):
        output = self._config.output
        if not output:
            return
        if self._config.resume:
            _, self._stats = load_progress(output)
            self._store = RecordStore(self._stats.keys)
        else:
            reset_output(output)

    def _checkpoint(self, force: bool = False):
        output = self._config.output
        if not output:
            return
        if not force and len(self._pending) < self._config.checkpoint_every:
            return
        append_records(output, self._pending)
        self._pending = []
        self._stats.keys = self._store.keys()
        write_stats(output, self._stats)

    def _merge(self, index: int, status: str, record: Optional[SearchRecord]):
        stats = self._stats
        stats.candidates_drawn += 1
        stats.next_candidate = index + 1
        if status == SCREEN_REJECTED:
            return
        stats.screen_passed += 1
        if status == MIN_WEIGHT_REJECTED:
            stats.min_weight_rejections += 1
        elif status == BUDGET_REJECTED:
            stats.budget_rejections += 1
        elif record is not None:
            stats.accepted += 1
            if self._store.add(record):
                logger.finfo("Candidate {index} shares key {record.key}")
            self._pending.append(record)

    async def run(self) -> Tuple[List[SearchRecord], CampaignStats]:
        config = self._config
        self._prepare_output()
        batch = max(1, self._jobs.num_workers) * 8
        start = self._stats.next_candidate
        logger.finfo("Campaign m={config.m} d>={config.target_d} from {start}")
        for first in range(start, config.max_candidates, batch):
            indices = range(first, min(first + batch, config.max_candidates))
            futures = [
                asyncio.wrap_future(
                    self._jobs.run(
                        self._jobs.execute(evaluate_candidate, config, index),
                        "search",
                    )
                )
                for index in indices
            ]
            outcomes = await asyncio.gather(*futures)
            for index, (status, record) in zip(indices, outcomes):
                self._merge(index, status, record)
            self._checkpoint()
            if self._progress:
                self._progress(self._stats)
        self._checkpoint(force=True)
        logger.finfo("Campaign finished: {self._stats}")
        return self._store.records, self._stats

    def stop(self):
        self._jobs.stop_jobs("search")


def run_campaign(
    config: SearchConfig,
    jobs: Optional[JobManager] = None,
    progress: Optional[Callable[[CampaignStats], None]] = None,
) -> Tuple[List[SearchRecord], CampaignStats]:
    if jobs is None:
        with JobManager(logger) as owned:
            return asyncio.run(CampaignRunner(config, owned, progress).run())
    return asyncio.run(CampaignRunner(config, jobs, progress).run())
