from collections import Counter
from typing import Dict, Iterable, List

from ..models import SearchRecord


class RecordStore:
    """
    Accepted records grouped by dedupe key.

    Equal keys only mean the codes might be equivalent, so every record is
    kept and both sides of a collision are flagged.
    """

    def __init__(self, known_keys: Iterable[str] = ()):
        self._records: List[SearchRecord] = []
        self._by_key: Dict[str, List[SearchRecord]] = {}
        self._known_keys = list(known_keys)
        self._known = Counter(self._known_keys)

    def add(self, record: SearchRecord) -> bool:
        """Store ``record``; True when its key was already present."""
        group = self._by_key.setdefault(record.key, [])
        seen = bool(group) or self._known[record.key] > 0
        if seen:
            record.possibly_equivalent = True
            for earlier in group:
                earlier.possibly_equivalent = True
        group.append(record)
        self._records.append(record)
        return seen

    def get(self, key: str) -> List[SearchRecord]:
        return list(self._by_key.get(key, []))

    @property
    def records(self) -> List[SearchRecord]:
        return list(self._records)

    def keys(self) -> List[str]:
        """Every key in acceptance order, earlier sessions first."""
        return self._known_keys + [r.key for r in self._records]

    def distinct_keys(self) -> int:
        return len(set(self.keys()))

    def possibly_equivalent(self) -> List[List[SearchRecord]]:
        return [group for group in self._by_key.values() if len(group) > 1]

    def __len__(self) -> int:
        return len(self._records)
