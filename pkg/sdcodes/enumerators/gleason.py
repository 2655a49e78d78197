"""
Gleason bases for self-dual weight enumerators and the matching shadow basis.

Type I covers every self-dual code of even length ``n``; type II covers
doubly even self-dual codes, which need ``8 | n``.
"""
import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy import Rational

from ..errors import DimensionError, LengthMismatchError, NotInSpanError
from ..models import WeightDistribution
from .polynomial import IntPolynomial, Number, as_rational, format_rational


class GleasonType(Enum):
    I = "I"  # noqa: E741
    II = "II"

    @classmethod
    def parse(cls, text: str) -> "GleasonType":
        aliases = {"i": cls.I, "1": cls.I, "ii": cls.II, "2": cls.II}
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown Gleason type {text!r}, expected I or II")

    @property
    def step(self) -> int:
        """Spacing of the exponents a code of this type can carry."""
        return 2 if self is GleasonType.I else 4

    def __str__(self) -> str:
        return self.value


def _check_length(n: int, gtype: GleasonType):
    if n < 0 or n % 2:
        raise DimensionError(f"self-dual codes have even length, got {n}")
    if gtype is GleasonType.II and n % 8:
        raise DimensionError(f"doubly even self-dual codes need 8 | n, got {n}")


def basis_size(n: int, gtype: GleasonType) -> int:
    _check_length(n, gtype)
    return n // 8 + 1 if gtype is GleasonType.I else n // 24 + 1


@lru_cache(maxsize=None)
def _basis(n: int, gtype: GleasonType) -> Tuple[IntPolynomial, ...]:
    if gtype is GleasonType.I:
        base = IntPolynomial({0: 1, 2: 1})
        factor = IntPolynomial({2: 1, 4: -2, 6: 1})
        return tuple(
            base ** (n // 2 - 4 * j) * factor**j for j in range(basis_size(n, gtype))
        )
    base = IntPolynomial({0: 1, 4: 14, 8: 1})
    factor = IntPolynomial({4: 1, 8: -4, 12: 6, 16: -4, 20: 1})
    return tuple(
        base ** (n // 8 - 3 * j) * factor**j for j in range(basis_size(n, gtype))
    )


def gleason_basis_I(n: int) -> List[IntPolynomial]:
    """``(1 + y^2)^(n/2 - 4j) (y^2 (1 - y^2)^2)^j`` for ``j = 0..n/8``."""
    return list(_basis(n, GleasonType.I))


def gleason_basis_II(n: int) -> List[IntPolynomial]:
    """``(1 + 14y^4 + y^8)^(n/8 - 3j) (y^4 (1 - y^4)^4)^j`` for ``j = 0..n/24``."""
    return list(_basis(n, GleasonType.II))


def gleason_basis(n: int, gtype: GleasonType) -> List[IntPolynomial]:
    return list(_basis(n, gtype))


@lru_cache(maxsize=None)
def _shadow_basis(n: int) -> Tuple[IntPolynomial, ...]:
    factor = IntPolynomial({0: 1, 4: -1})
    terms = []
    for j in range(basis_size(n, GleasonType.I)):
        scale = (-1) ** j * Rational(2) ** (n // 2 - 6 * j)
        monomial = IntPolynomial.monomial(n // 2 - 4 * j, scale)
        terms.append(monomial * factor ** (2 * j))
    return tuple(terms)


def shadow_basis(n: int) -> List[IntPolynomial]:
    """
    Image of each type I basis polynomial under the shadow transform:
    ``(-1)^j 2^(n/2 - 6j) y^(n/2 - 4j) (1 - y^4)^(2j)``.
    """
    return list(_shadow_basis(n))


@dataclass(frozen=True, repr=False)
class GleasonCoefficients:

    n: int
    gtype: GleasonType
    values: Tuple[Rational, ...]

    def __post_init__(self):
        size = basis_size(self.n, self.gtype)
        values = tuple(as_rational(value) for value in self.values)
        if len(values) != size:
            raise LengthMismatchError(size, len(values))
        object.__setattr__(self, "values", values)

    @classmethod
    def of(
        cls, n: int, gtype: GleasonType, values: Sequence[Number]
    ) -> "GleasonCoefficients":
        return cls(n, gtype, tuple(values))

    def combine(self) -> IntPolynomial:
        total = IntPolynomial()
        for value, poly in zip(self.values, _basis(self.n, self.gtype)):
            total = total + poly.scale(value)
        return total

    def __str__(self):
        return self.__repr__()

    def __repr__(self):
        return json.dumps(self.dict())

    def dict(self):
        return {
            "n": self.n,
            "type": str(self.gtype),
            "values": [format_rational(value) for value in self.values],
        }


def shadow_enumerator(n: int, coeffs: GleasonCoefficients) -> IntPolynomial:
    if coeffs.gtype is not GleasonType.I:
        raise DimensionError("the shadow transform applies to type I coefficients")
    if coeffs.n != n:
        raise LengthMismatchError(n, coeffs.n)
    total = IntPolynomial()
    for value, poly in zip(coeffs.values, _shadow_basis(n)):
        total = total + poly.scale(value)
    return total


def fit_polynomial(
    poly: IntPolynomial, n: int, gtype: GleasonType
) -> GleasonCoefficients:
    """
    Gleason coefficients reproducing ``poly``, a polynomial in ``y`` of
    degree at most ``n``.

    Basis polynomial ``j`` starts at ``y^(step*j)`` with coefficient 1, so the
    coefficients follow by forward substitution; a nonzero remainder means
    ``poly`` is outside the span.
    """
    remainder = poly
    values = []
    for j, basis_poly in enumerate(_basis(n, gtype)):
        value = remainder.coefficient(gtype.step * j)
        values.append(value)
        if value:
            remainder = remainder - basis_poly.scale(value)
    if not remainder.is_zero():
        raise NotInSpanError(
            f"not a type {gtype} Gleason polynomial of length {n}, "
            f"remainder {remainder}"
        )
    return GleasonCoefficients(n, gtype, tuple(values))


def fit_coefficients(
    dist: WeightDistribution, gtype: GleasonType
) -> GleasonCoefficients:
    """Gleason coefficients reproducing the weight enumerator ``dist``."""
    return fit_polynomial(IntPolynomial.from_distribution(dist), dist.n, gtype)


def mallows_sloane(n: int) -> int:
    """Upper bound on the minimum weight of a doubly even self-dual code."""
    if n <= 0 or n % 8:
        raise DimensionError(f"the bound needs 8 | n, got {n}")
    return 4 * (n // 24) + 4


def is_extremal(n: int, d: int) -> bool:
    return d == mallows_sloane(n)

