import pytest

from sdcodes.codes import FourCirculantSpec, parse_spec_file, serialize_spec_file
from sdcodes.errors import SpecFormatError
from sdcodes.models import CampaignStats, SearchConfig
from sdcodes.search import run_campaign
from sdcodes.search.persistence import load_progress, stats_path, write_stats


def config(output: str, max_candidates: int, resume: bool = False) -> SearchConfig:
    return SearchConfig(
        m=5,
        target_d=4,
        doubly_even_only=False,
        max_candidates=max_candidates,
        output=output,
        resume=resume,
        seed=11,
    )


def read(path) -> str:
    with open(path) as handle:
        return handle.read()


def test_campaign_writes_specs_and_stats(tmp_path):
    output = str(tmp_path / "specs.txt")
    records, stats = run_campaign(config(output, 60))
    specs = parse_spec_file(read(output))
    assert specs == [record.spec for record in records]
    saved = CampaignStats.parse(read(stats_path(output)))
    assert saved.accepted == stats.accepted == len(specs)
    assert saved.next_candidate == 60
    assert saved.keys == [record.key for record in records]


def test_resume_continues_the_draw(tmp_path):
    fresh = str(tmp_path / "fresh.txt")
    run_campaign(config(fresh, 120))
    resumed = str(tmp_path / "resumed.txt")
    run_campaign(config(resumed, 60))
    _, stats = run_campaign(config(resumed, 120, resume=True))
    assert read(resumed) == read(fresh)
    assert stats.next_candidate == 120
    expected = CampaignStats.parse(read(stats_path(fresh)))
    assert CampaignStats.parse(read(stats_path(resumed))).dict() == expected.dict()


def test_rerun_without_resume_starts_afresh(tmp_path):
    output = str(tmp_path / "specs.txt")
    run_campaign(config(output, 60))
    first = read(output)
    run_campaign(config(output, 60))
    assert read(output) == first


def test_load_progress_without_stats(tmp_path):
    specs, stats = load_progress(str(tmp_path / "none.txt"))
    assert specs == [] and stats.next_candidate == 0


def test_load_progress_truncates_unrecorded_specs(tmp_path):
    output = str(tmp_path / "specs.txt")
    spec = FourCirculantSpec.from_strings("10", "00")
    with open(output, "w") as handle:
        handle.write(serialize_spec_file([spec, spec, spec]))
    write_stats(output, CampaignStats(accepted=2, next_candidate=9))
    specs, stats = load_progress(output)
    assert len(specs) == 2
    assert len(parse_spec_file(read(output))) == 2
    assert stats.next_candidate == 9


def test_load_progress_missing_specs(tmp_path):
    output = str(tmp_path / "specs.txt")
    write_stats(output, CampaignStats(accepted=2, next_candidate=9))
    with pytest.raises(SpecFormatError):
        load_progress(output)
