import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from ..gf2 import BitWord


class CertificateKind(Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower-bound"


@dataclass(repr=False)
class MinWeightCertificate:
    """
    Outcome of a minimum-weight computation.

    ``value`` is the minimum weight when exact and otherwise a proven lower
    bound; ``witness``, when present, is a codeword giving the best known upper
    bound. ``levels`` records the enumeration level completed in each
    information set, ``ranks`` the rank of each set.
    """

    kind: CertificateKind
    value: int
    witness: Optional[BitWord] = None
    levels: Tuple[int, ...] = ()
    ranks: Tuple[int, ...] = ()
    enumerated: int = 0
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind is CertificateKind.EXACT:
            if self.witness is None or self.witness.weight != self.value:
                raise ValueError("an exact certificate needs a witness of its weight")

    @property
    def is_exact(self) -> bool:
        return self.kind is CertificateKind.EXACT

    @property
    def lower_bound(self) -> int:
        return self.value

    @property
    def upper_bound(self) -> Optional[int]:
        return self.witness.weight if self.witness is not None else None

    def with_witness(self, witness: BitWord) -> "MinWeightCertificate":
        """Attach a codeword found elsewhere (for example by a random search)."""
        if self.upper_bound is not None and self.upper_bound <= witness.weight:
            return self
        kind = self.kind
        if witness.weight <= self.value:
            kind = CertificateKind.EXACT
        return MinWeightCertificate(
            kind=kind,
            value=witness.weight if kind is CertificateKind.EXACT else self.value,
            witness=witness,
            levels=self.levels,
            ranks=self.ranks,
            enumerated=self.enumerated,
            notes=self.notes,
        )

    def combine(self, other: "MinWeightCertificate") -> "MinWeightCertificate":
        """Largest lower bound, smallest upper bound."""
        lower = max(self.value, other.value)
        witnesses = [w for w in (self.witness, other.witness) if w is not None]
        witness = min(witnesses, key=lambda w: w.weight) if witnesses else None
        exact = witness is not None and witness.weight <= lower
        return MinWeightCertificate(
            kind=CertificateKind.EXACT if exact else CertificateKind.LOWER_BOUND,
            value=witness.weight if exact else lower,  # type: ignore
            witness=witness,
            levels=tuple(max(a, b) for a, b in zip(self.levels, other.levels))
            or self.levels
            or other.levels,
            ranks=self.ranks or other.ranks,
            enumerated=self.enumerated + other.enumerated,
            notes=self.notes + other.notes,
        )

    def __str__(self):
        if self.is_exact:
            return f"exact {self.value}"
        text = f"lower-bound {self.value}"
        if self.upper_bound is not None:
            text += f" upper-bound {self.upper_bound}"
        return text

    def __repr__(self):
        return json.dumps(self.dict())

    def dict(self):
        return {
            "kind": self.kind.value,
            "value": self.value,
            "witness": self.witness.support() if self.witness else None,
            "levels": list(self.levels),
            "ranks": list(self.ranks),
            "enumerated": self.enumerated,
        }
