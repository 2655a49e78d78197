from typing import Dict, Iterator, Mapping, Tuple, Union

from sympy import Integer, Poly, QQ, Rational, Symbol, sympify

from ..models import WeightDistribution

Y = Symbol("y")

Number = Union[int, Rational]


def as_rational(value) -> Rational:
    converted = sympify(value)
    if not converted.is_Rational:
        raise ValueError(f"not an exact rational: {value!r}")
    return converted


def format_rational(value: Rational) -> str:
    if value.q == 1:
        return str(value.p)
    return f"{value.p}/{value.q}"


class IntPolynomial:
    """
    Univariate polynomial in ``y`` with exact rational coefficients.

    Zero coefficients are never stored; ``is_integral`` tells whether every
    coefficient is an integer, as a weight enumerator's must be.
    """

    def __init__(self, coefficients: Mapping[int, Number] = None):
        cleaned: Dict[int, Rational] = {}
        for exponent, value in (coefficients or {}).items():
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            value = as_rational(value)
            if value != 0:
                cleaned[int(exponent)] = value
        self._coefficients = dict(sorted(cleaned.items()))

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        return cls({monom[0]: coeff for monom, coeff in poly.terms()})

    @classmethod
    def from_distribution(cls, dist: WeightDistribution) -> "IntPolynomial":
        return cls(dict(dist.items()))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Number = 1) -> "IntPolynomial":
        return cls({exponent: coefficient})

    def to_poly(self) -> Poly:
        expr = sum(
            (value * Y**exponent for exponent, value in self.items()), Integer(0)
        )
        return Poly(expr, Y, domain=QQ)

    def items(self) -> Iterator[Tuple[int, Rational]]:
        return iter(self._coefficients.items())

    def coefficient(self, exponent: int) -> Rational:
        return self._coefficients.get(exponent, Integer(0))

    __getitem__ = coefficient

    @property
    def degree(self) -> int:
        return max(self._coefficients, default=-1)

    @property
    def low_degree(self) -> int:
        return min(self._coefficients, default=-1)

    def is_zero(self) -> bool:
        return not self._coefficients

    def is_integral(self) -> bool:
        return all(value.q == 1 for value in self._coefficients.values())

    def to_distribution(self, n: int) -> WeightDistribution:
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients in {self}")
        return WeightDistribution(n, {e: int(v) for e, v in self.items()})

    def scale(self, factor: Number) -> "IntPolynomial":
        factor = as_rational(factor)
        return IntPolynomial({e: v * factor for e, v in self.items()})

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        merged = dict(self._coefficients)
        for exponent, value in other.items():
            merged[exponent] = merged.get(exponent, Integer(0)) + value
        return IntPolynomial(merged)

    def __neg__(self) -> "IntPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.to_poly() * other.to_poly())

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return IntPolynomial.from_poly(self.to_poly() ** exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return False
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        text = ""
        for exponent, value in self.items():
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            if exponent == 0:
                term = format_rational(magnitude)
            else:
                power = "y" if exponent == 1 else f"y^{exponent}"
                term = power
                if magnitude != 1:
                    term = f"{format_rational(magnitude)}{power}"
            if not text:
                text = term if sign == "+" else f"-{term}"
            else:
                text += f" {sign} {term}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)!r})"
