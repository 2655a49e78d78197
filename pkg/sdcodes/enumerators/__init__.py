from .family import (
    AffineExpression,
    EnumeratorFamily,
    FamilyConstraints,
    ParameterSpec,
    Position,
    Side,
    parse_anchor,
    parse_pin,
    parse_position,
    solve_family,
    substitute,
    substitute_shadow,
)
from .gleason import (
    GleasonCoefficients,
    GleasonType,
    basis_size,
    fit_coefficients,
    fit_polynomial,
    gleason_basis,
    gleason_basis_I,
    gleason_basis_II,
    is_extremal,
    mallows_sloane,
    shadow_basis,
    shadow_enumerator,
)
from .polynomial import IntPolynomial, as_rational, format_rational
