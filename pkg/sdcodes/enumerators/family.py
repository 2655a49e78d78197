"""
Families of possible weight enumerators.

Pinning some coefficients of ``W_C`` (and of the shadow ``W_S`` for type I)
leaves an affine space of Gleason coefficient vectors. Each Gleason
coefficient left free becomes one named parameter, in ascending order of its
basis index, named ``a, b, c, ...``.

A parameter is either scaled to a primitive integral direction, oriented so
its lowest nonzero ``A_i`` coefficient is positive, or anchored to one
coefficient ``(side, weight)``: that coefficient then equals the parameter
exactly. Type II families anchor every parameter at its leading ``A_i`` by
default, so ``a`` counts the codewords of the smallest allowed weight.
"""
import json
import string
from dataclasses import dataclass, field
from enum import Enum
from math import gcd, lcm
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import Integer, Matrix, Rational

from ..errors import (
    AlreadyDoublyEvenError,
    InconsistentConstraintsError,
    InfeasibleParametersError,
    OverdeterminedError,
)
from ..logging import get_logger
from ..models import WeightDistribution
from .gleason import (
    GleasonCoefficients,
    GleasonType,
    gleason_basis,
    shadow_basis,
    shadow_enumerator,
)
from .polynomial import IntPolynomial, Number, as_rational, format_rational

logger = get_logger()


class Side(Enum):
    A = "A"
    B = "B"

    def __str__(self) -> str:
        return self.value


Position = Tuple[Side, int]


def parse_position(text: str) -> Position:
    """``"A20"`` or ``"B4"``."""
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in "AB" or not text[1:].isdigit():
        raise ValueError(f"expected a coefficient like A20 or B4, got {text!r}")
    return Side(text[0].upper()), int(text[1:])


def parse_pin(text: str) -> Tuple[Position, Rational]:
    """``"B0=0"`` pins ``B_0`` to zero."""
    position, _, value = text.partition("=")
    if not value:
        raise ValueError(f"expected POSITION=VALUE, got {text!r}")
    return parse_position(position), as_rational(value.strip())


def parse_anchor(text: str) -> Tuple[str, Position]:
    """``"e=B4"`` anchors parameter ``e`` at ``B_4``."""
    name, _, position = text.partition("=")
    if not name.strip() or not position:
        raise ValueError(f"expected NAME=POSITION, got {text!r}")
    return name.strip(), parse_position(position)


@dataclass
class FamilyConstraints:

    pins: Dict[Position, Rational] = field(default_factory=dict)
    anchors: Dict[str, Position] = field(default_factory=dict)
    anchor_leading: Optional[bool] = None

    @classmethod
    def minimum_weight(
        cls,
        n: int,
        gtype: GleasonType,
        d: int,
        shadow_pins: Optional[Mapping[int, Number]] = None,
        anchors: Optional[Mapping[str, Position]] = None,
        anchor_leading: Optional[bool] = None,
    ) -> "FamilyConstraints":
        """``A_0 = 1`` and ``A_i = 0`` for every allowed ``0 < i < d``."""
        pins: Dict[Position, Rational] = {(Side.A, 0): Integer(1)}
        for weight in range(gtype.step, min(d, n + 1), gtype.step):
            pins[(Side.A, weight)] = Integer(0)
        for weight, value in (shadow_pins or {}).items():
            pins[(Side.B, weight)] = as_rational(value)
        return cls(pins, dict(anchors or {}), anchor_leading)

    def pin(self, position: Position, value: Number) -> "FamilyConstraints":
        self.pins[position] = as_rational(value)
        return self


@dataclass(frozen=True)
class AffineExpression:

    constant: Rational
    terms: Tuple[Tuple[str, Rational], ...] = ()

    def coefficient(self, name: str) -> Rational:
        return dict(self.terms).get(name, Integer(0))

    def is_zero(self) -> bool:
        return self.constant == 0 and all(value == 0 for _, value in self.terms)

    def evaluate(self, values: Mapping[str, Rational]) -> Rational:
        total = self.constant
        for name, coefficient in self.terms:
            total += coefficient * values[name]
        return total

    def format(self) -> str:
        """Constant first, then parameters from last declared to first."""
        parts: List[Tuple[Rational, str]] = []
        if self.constant != 0:
            parts.append((self.constant, format_rational(abs(self.constant))))
        for name, coefficient in reversed(self.terms):
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            text = name if magnitude == 1 else f"{format_rational(magnitude)}{name}"
            parts.append((coefficient, text))
        if not parts:
            return "0"
        first_value, first_text = parts[0]
        rendered = first_text if first_value > 0 else f"-{first_text}"
        for value, text in parts[1:]:
            rendered += f" + {text}" if value > 0 else f" - {text}"
        return rendered

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class ParameterSpec:

    name: str
    index: int
    scale: Rational
    anchor: Optional[Position] = None


@dataclass(repr=False)
class EnumeratorFamily:

    n: int
    gtype: GleasonType
    parameters: Tuple[ParameterSpec, ...]
    gleason: Tuple[AffineExpression, ...]
    coefficients: Dict[int, AffineExpression]
    shadow: Dict[int, AffineExpression] = field(default_factory=dict)

    @property
    def parameter_names(self) -> List[str]:
        return [parameter.name for parameter in self.parameters]

    def coefficient(self, weight: int) -> AffineExpression:
        return self.coefficients.get(weight, AffineExpression(Integer(0)))

    def shadow_coefficient(self, weight: int) -> AffineExpression:
        return self.shadow.get(weight, AffineExpression(Integer(0)))

    def coefficients_at(self, values: Mapping[str, Number]) -> GleasonCoefficients:
        names = set(self.parameter_names)
        unknown = sorted(set(values) - names)
        missing = sorted(names - set(values))
        if unknown or missing:
            raise InfeasibleParametersError(
                f"unknown parameters {unknown}, unbound parameters {missing}"
            )
        bound = {name: as_rational(value) for name, value in values.items()}
        return GleasonCoefficients(
            self.n, self.gtype, tuple(expr.evaluate(bound) for expr in self.gleason)
        )

    def format(self) -> str:
        lines = [f"# W_C n={self.n} type {self.gtype}"]
        lines.extend(
            f"({expr.format()}) y^{weight}"
            for weight, expr in self.coefficients.items()
        )
        if self.gtype is GleasonType.I:
            lines.append("# W_S")
            lines.extend(
                f"({expr.format()}) y^{weight}" for weight, expr in self.shadow.items()
            )
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return json.dumps(self.dict())

    def dict(self):
        return {
            "n": self.n,
            "type": str(self.gtype),
            "parameters": self.parameter_names,
            "coefficients": {str(w): e.format() for w, e in self.coefficients.items()},
            "shadow": {str(w): e.format() for w, e in self.shadow.items()},
        }


def _parameter_name(position: int) -> str:
    letters = string.ascii_lowercase
    return letters[position] if position < len(letters) else f"p{position}"


def _primitive_scale(values: Sequence[Rational], orient: Rational) -> Rational:
    """Factor making ``values`` coprime integers, positive where ``orient`` is."""
    nonzero = [value for value in values if value != 0]
    denominator = lcm(*(int(value.q) for value in nonzero))
    numerator = 0
    for value in nonzero:
        numerator = gcd(numerator, int(value * denominator))
    scale = Rational(denominator, numerator)
    return -scale if orient < 0 else scale


def _combination(
    weights: Sequence[Rational], polys: Sequence[IntPolynomial]
) -> IntPolynomial:
    total = IntPolynomial()
    for weight, poly in zip(weights, polys):
        if weight != 0:
            total = total + poly.scale(weight)
    return total


def solve_family(
    n: int, gtype: GleasonType, constraints: FamilyConstraints
) -> EnumeratorFamily:
    """
    Solve the pinned coefficients for every ``A_i`` (and ``B_i``) as an affine
    expression in the free parameters, exactly over the rationals.
    """
    basis = gleason_basis(n, gtype)
    shadows = shadow_basis(n) if gtype is GleasonType.I else []
    size = len(basis)

    def side_basis(side: Side) -> Sequence[IntPolynomial]:
        if side is Side.B and gtype is not GleasonType.I:
            raise InconsistentConstraintsError("a type II family has no shadow side")
        return basis if side is Side.A else shadows

    rows = []
    for (side, weight), value in constraints.pins.items():
        if not 0 <= weight <= n:
            raise InconsistentConstraintsError(f"{side}{weight} is outside 0..{n}")
        polys = side_basis(side)
        rows.append([poly.coefficient(weight) for poly in polys] + [value])
    if rows:
        reduced, pivot_columns = Matrix(rows).rref()
    else:
        reduced, pivot_columns = Matrix.zeros(0, size + 1), ()
    if size in pivot_columns:
        raise InconsistentConstraintsError("the pinned coefficients contradict")
    pivots = list(pivot_columns)
    free = [j for j in range(size) if j not in pivots]
    logger.fdebug("n={n} type {gtype}: {len(pivots)} pinned, free indices {free}")

    particular = [Integer(0)] * size
    for row, column in enumerate(pivots):
        particular[column] = reduced[row, size]
    null_vectors = []
    for f in free:
        vector = [Integer(0)] * size
        vector[f] = Integer(1)
        for row, column in enumerate(pivots):
            vector[column] = -reduced[row, f]
        null_vectors.append(vector)

    names = [_parameter_name(position) for position in range(len(free))]
    for name in constraints.anchors:
        if name not in names:
            raise OverdeterminedError(
                f"anchor for {name!r} but the free parameters are {names}"
            )

    constant_a = _combination(particular, basis)
    constant_b = _combination(particular, shadows)
    directions_a = [_combination(vector, basis) for vector in null_vectors]
    directions_b = [_combination(vector, shadows) for vector in null_vectors]

    anchor_leading = constraints.anchor_leading
    if anchor_leading is None:
        anchor_leading = gtype is GleasonType.II
    anchors: Dict[int, Position] = {}
    for position, name in enumerate(names):
        if name in constraints.anchors:
            anchors[position] = constraints.anchors[name]
        elif anchor_leading:
            anchors[position] = (Side.A, directions_a[position].low_degree)

    def at(position: Position, polys_a, polys_b) -> List[Rational]:
        side, weight = position
        polys = polys_a if side is Side.A else polys_b
        return [poly.coefficient(weight) for poly in polys]

    count = len(free)
    transform = Matrix.eye(count)
    offset = Matrix.zeros(count, 1)
    for position, anchor in anchors.items():
        side_basis(anchor[0])
        transform[position, :] = Matrix([at(anchor, directions_a, directions_b)])
        offset[position, 0] = at(anchor, [constant_a], [constant_b])[0]
    if count and transform.det() == 0:
        raise InconsistentConstraintsError(
            f"anchors {constraints.anchors or 'at leading coefficients'} "
            "do not determine the parameters"
        )
    inverse = transform.inv() if count else transform
    shift = inverse * offset

    # t = inverse * (p' - offset); unanchored p' are rescaled below
    scales: List[Rational] = []
    for position in range(count):
        weights = [inverse[f, position] for f in range(count)]
        direction_a = _combination(weights, directions_a)
        direction_b = _combination(weights, directions_b)
        if position in anchors:
            scales.append(Integer(1))
            continue
        values = [v for _, v in direction_a.items()] + [
            v for _, v in direction_b.items()
        ]
        scales.append(
            _primitive_scale(values, direction_a.coefficient(direction_a.low_degree))
        )

    # Gleason coefficient j as an affine expression in the named parameters
    gleason = []
    for j in range(size):
        constant = particular[j] - sum(
            (null_vectors[f][j] * shift[f, 0] for f in range(count)), Integer(0)
        )
        terms = []
        for position in range(count):
            coefficient = sum(
                (
                    null_vectors[f][j] * inverse[f, position]
                    for f in range(count)
                ),
                Integer(0),
            )
            terms.append((names[position], coefficient * scales[position]))
        gleason.append(AffineExpression(constant, tuple(terms)))

    parameters = tuple(
        ParameterSpec(names[p], free[p], scales[p], anchors.get(p))
        for p in range(count)
    )
    coefficients = _expand(gleason, basis, n)
    shadow = _expand(gleason, shadows, n) if shadows else {}
    return EnumeratorFamily(
        n, gtype, parameters, tuple(gleason), coefficients, shadow
    )


def _expand(
    gleason: Sequence[AffineExpression], polys: Sequence[IntPolynomial], n: int
) -> Dict[int, AffineExpression]:
    constant = _combination([expr.constant for expr in gleason], polys)
    names = [name for name, _ in gleason[0].terms] if gleason else []
    directions = [
        _combination([expr.coefficient(name) for expr in gleason], polys)
        for name in names
    ]
    expanded: Dict[int, AffineExpression] = {}
    for weight in range(n + 1):
        expr = AffineExpression(
            constant.coefficient(weight),
            tuple(
                (name, direction.coefficient(weight))
                for name, direction in zip(names, directions)
            ),
        )
        if not expr.is_zero():
            expanded[weight] = expr
    return expanded


def _to_distribution(poly: IntPolynomial, n: int, label: str) -> WeightDistribution:
    for weight, value in poly.items():
        if value.q != 1:
            raise InfeasibleParametersError(f"{label}_{weight} = {value} not integral")
        if value < 0:
            raise InfeasibleParametersError(f"{label}_{weight} = {value} is negative")
    return poly.to_distribution(n)


def substitute(
    family: EnumeratorFamily, values: Mapping[str, Number]
) -> WeightDistribution:
    coeffs = family.coefficients_at(values)
    return _to_distribution(coeffs.combine(), family.n, "A")


def substitute_shadow(
    family: EnumeratorFamily, values: Mapping[str, Number]
) -> WeightDistribution:
    if family.gtype is not GleasonType.I:
        raise AlreadyDoublyEvenError("a doubly even family has no shadow")
    coeffs = family.coefficients_at(values)
    return _to_distribution(shadow_enumerator(family.n, coeffs), family.n, "B")
