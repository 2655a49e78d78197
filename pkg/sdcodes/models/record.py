import json
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from ..codes import FourCirculantSpec
from ..errors import ConfigError, SpecFormatError
from .certificate import MinWeightCertificate
from .distribution import WeightDistribution


@dataclass
class SearchConfig:

    m: int
    target_d: int
    doubly_even_only: bool = True
    seed: int = 0
    max_candidates: int = 1000
    budget: int = 1_000_000
    output: Optional[str] = None
    checkpoint_every: int = 1
    count_cap: int = 1_000_000
    distribution_cap: int = 20
    resume: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise ConfigError(f"circulant order must be positive, got {self.m}")
        if self.target_d < 2 or self.target_d % 2:
            raise ConfigError(f"target_d must be even and positive: {self.target_d}")
        n = 4 * self.m
        if self.doubly_even_only and n % 8 == 0:
            bound = 4 * (n // 24) + 4
            if self.target_d > bound:
                raise ConfigError(
                    f"target_d {self.target_d} exceeds the bound {bound} for n={n}"
                )
        for name in ("max_candidates", "budget", "checkpoint_every", "count_cap"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if self.resume and not self.output:
            raise ConfigError("resume needs an output path")

    @property
    def n(self) -> int:
        return 4 * self.m

    @property
    def stats_path(self) -> Optional[str]:
        return f"{self.output}.stats" if self.output else None

    def dict(self):
        return asdict(self)

    def __repr__(self):
        return json.dumps(self.dict())


@dataclass(repr=False)
class ScreenResult:

    accepted: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.accepted

    def __repr__(self):
        return json.dumps({"accepted": self.accepted, "reason": self.reason})


@dataclass(repr=False)
class SearchRecord:
    """An accepted candidate; ``count`` words of weight ``weight`` when known."""

    index: int
    spec: FourCirculantSpec
    certificate: MinWeightCertificate
    key: str
    count: Optional[int] = None
    weight: Optional[int] = None
    distribution: Optional[WeightDistribution] = None
    possibly_equivalent: bool = False

    def __str__(self):
        return self.__repr__()

    def __repr__(self):
        return json.dumps(self.dict())

    def dict(self):
        return {
            "index": self.index,
            "spec": self.spec.line(),
            "certificate": str(self.certificate),
            "key": self.key,
            "count": self.count,
            "weight": self.weight,
            "possibly_equivalent": self.possibly_equivalent,
        }


_STAT_FIELDS = (
    "candidates_drawn",
    "screen_passed",
    "min_weight_rejections",
    "budget_rejections",
    "accepted",
    "next_candidate",
)


@dataclass(repr=False)
class CampaignStats:

    candidates_drawn: int = 0
    screen_passed: int = 0
    min_weight_rejections: int = 0
    budget_rejections: int = 0
    accepted: int = 0
    next_candidate: int = 0
    keys: List[str] = field(default_factory=list)

    @property
    def screen_pass_rate(self) -> float:
        if not self.candidates_drawn:
            return 0.0
        return self.screen_passed / self.candidates_drawn

    def format(self) -> str:
        lines = [f"{name} {getattr(self, name)}" for name in _STAT_FIELDS[:2]]
        lines.append(f"screen_pass_rate {self.screen_pass_rate:.6f}")
        lines.extend(f"{name} {getattr(self, name)}" for name in _STAT_FIELDS[2:])
        lines.append(" ".join(["keys", *self.keys]))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "CampaignStats":
        values: Dict[str, int] = {}
        keys: List[str] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            fields = raw.split()
            if not fields or fields[0].startswith("#"):
                continue
            name, rest = fields[0], fields[1:]
            if name == "keys":
                keys = rest
            elif name in _STAT_FIELDS:
                if len(rest) != 1 or not rest[0].isdigit():
                    raise SpecFormatError(f"bad value for {name}: {raw!r}", number)
                values[name] = int(rest[0])
        return cls(keys=keys, **values)

    def __str__(self):
        return self.__repr__()

    def __repr__(self):
        return json.dumps(self.dict())

    def dict(self):
        props = asdict(self)
        props["screen_pass_rate"] = self.screen_pass_rate
        return props
