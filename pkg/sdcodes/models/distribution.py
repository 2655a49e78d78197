import json
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

from ..errors import SpecFormatError


@dataclass(repr=False)
class WeightDistribution:

    n: int
    counts: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for weight, count in self.counts.items():
            weight, count = int(weight), int(count)
            if not 0 <= weight <= self.n:
                raise ValueError(f"weight {weight} outside 0..{self.n}")
            if count < 0:
                raise ValueError(f"negative count {count} at weight {weight}")
            if count:
                cleaned[weight] = count
        self.counts = dict(sorted(cleaned.items()))

    def __getitem__(self, weight: int) -> int:
        return self.counts.get(weight, 0)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self.counts.items())

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def minimum_weight(self) -> Optional[int]:
        return next((weight for weight in self.counts if weight > 0), None)

    def is_symmetric(self) -> bool:
        return all(self[self.n - weight] == count for weight, count in self.items())

    def merge(self, other: "WeightDistribution") -> "WeightDistribution":
        if other.n != self.n:
            raise ValueError(f"cannot merge lengths {self.n} and {other.n}")
        merged = dict(self.counts)
        for weight, count in other.items():
            merged[weight] = merged.get(weight, 0) + count
        return WeightDistribution(self.n, merged)

    def format(self) -> str:
        """Two columns, ``weight count``, one nonzero weight per line."""
        return "".join(f"{weight} {count}\n" for weight, count in self.items())

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "WeightDistribution":
        """Weights must lie in ``0..n`` when ``n`` is given."""
        counts: Dict[int, int] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2 or not all(f.isdigit() for f in fields):
                raise SpecFormatError(f"expected 'weight count', got {line!r}", number)
            weight = int(fields[0])
            if n is not None and weight > n:
                raise SpecFormatError(f"weight {weight} outside 0..{n}", number)
            counts[weight] = counts.get(weight, 0) + int(fields[1])
        if n is None:
            n = max(counts, default=0)
        return cls(n, counts)

    def __str__(self):
        return self.__repr__()

    def __repr__(self):
        return json.dumps(self.dict())

    def dict(self):
        return {"n": self.n, "counts": {str(w): c for w, c in self.items()}}
