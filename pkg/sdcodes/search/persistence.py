"""
Campaign output: accepted specs appended to the output file, plus a
``<output>.stats`` sidecar rewritten at every checkpoint.
"""
import os
from typing import List, Sequence, Tuple

from ..codes import FourCirculantSpec, parse_spec_file, serialize_spec_file
from ..errors import SpecFormatError
from ..logging import get_logger
from ..models import CampaignStats, SearchRecord

logger = get_logger()


def stats_path(output: str) -> str:
    return f"{output}.stats"


def append_records(output: str, records: Sequence[SearchRecord]):
    if not records:
        return
    with open(output, "a") as handle:
        handle.write(serialize_spec_file([record.spec for record in records]))


def write_stats(output: str, stats: CampaignStats):
    path = stats_path(output)
    temporary = f"{path}.tmp"
    with open(temporary, "w") as handle:
        handle.write(stats.format())
    os.replace(temporary, path)


def reset_output(output: str):
    for path in (output, stats_path(output)):
        if os.path.exists(path):
            os.remove(path)


def load_progress(output: str) -> Tuple[List[FourCirculantSpec], CampaignStats]:
    """Specs and stats of an interrupted campaign; empty when nothing exists."""
    if not os.path.exists(stats_path(output)):
        logger.finfo("No stats beside {output}, starting afresh")
        return [], CampaignStats()
    with open(stats_path(output)) as handle:
        stats = CampaignStats.parse(handle.read())
    specs: List[FourCirculantSpec] = []
    if os.path.exists(output):
        with open(output) as handle:
            specs = parse_spec_file(handle.read())
    if len(specs) > stats.accepted:
        # specs appended after the last stats write are drawn again
        extra = len(specs) - stats.accepted
        logger.warning("Dropping %d specs past the checkpoint", extra)
        specs = specs[: stats.accepted]
        with open(output, "w") as handle:
            handle.write(serialize_spec_file(specs))
    if len(specs) < stats.accepted:
        raise SpecFormatError(
            f"{output} holds {len(specs)} specs but the stats record "
            f"{stats.accepted} accepted"
        )
    logger.finfo("Resuming {output} at candidate {stats.next_candidate}")
    return specs, stats
