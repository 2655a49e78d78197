import pytest
from hypothesis import given
from hypothesis.strategies import integers

from sdcodes.enumerators import (
    FamilyConstraints,
    GleasonType,
    Side,
    parse_anchor,
    parse_pin,
    parse_position,
    solve_family,
    substitute,
    substitute_shadow,
)
from sdcodes.errors import (
    AlreadyDoublyEvenError,
    InconsistentConstraintsError,
    InfeasibleParametersError,
    OverdeterminedError,
)


def family_112():
    constraints = FamilyConstraints.minimum_weight(
        112, GleasonType.I, 18, shadow_pins={0: 0}, anchors={"e": (Side.B, 4)}
    )
    return solve_family(112, GleasonType.I, constraints)


def doubly_even_family(n: int, d: int = 20):
    constraints = FamilyConstraints.minimum_weight(n, GleasonType.II, d)
    return solve_family(n, GleasonType.II, constraints)


FAMILY_112 = family_112()

COUNTS_112 = {
    0: 1,
    18: 8512,
    20: 186060,
    22: 3239936,
    24: 47551798,
    26: 561437184,
    28: 5424089452,
    30: 43459872064,
    32: 291008417322,
    34: 1639219687168,
    36: 7813559379696,
    38: 31676520067584,
    40: 109690203298312,
    42: 325630986391040,
    44: 831288282918576,
    46: 1829637194737408,
    48: 3479230392288469,
    50: 5725819388994432,
    52: 8165553897114152,
    54: 10099951175046656,
    56: 10841051388476292,
}

VALUES_112 = {"a": -90664, "b": 728, "c": 0, "d": 0, "e": 0}


def test_parse_helpers():
    assert parse_position("B4") == (Side.B, 4)
    assert parse_pin("A20=355740") == ((Side.A, 20), 355740)
    assert parse_anchor("e=B4") == ("e", (Side.B, 4))
    with pytest.raises(ValueError):
        parse_position("C4")
    with pytest.raises(ValueError):
        parse_pin("B0")


@pytest.mark.parametrize(
    "weight, expected",
    [
        (0, "1"),
        (18, "99176 + a"),
        (20, "355740 + 16b + 2a"),
        (22, "1745240 + 1024c - 64b - 17a"),
        (24, "44404374 + 65536d - 10240c - 160b - 36a"),
        (26, "572977944 - 4194304e - 1048576d + 33792c + 960b + 135a"),
    ],
)
def test_singly_even_112_family(weight, expected):
    assert FAMILY_112.parameter_names == ["a", "b", "c", "d", "e"]
    assert FAMILY_112.coefficient(weight).format() == expected


@pytest.mark.parametrize(
    "weight, expected",
    [
        (4, "e"),
        (8, "-26e + d"),
        (12, "325e - 24d - c"),
        (16, "-2600e + 276d + 22c + b"),
        (20, "14950e - 2024d - 231c - 20b - 4a"),
    ],
)
def test_singly_even_112_shadow(weight, expected):
    assert FAMILY_112.shadow_coefficient(weight).format() == expected


def test_family_rendering():
    lines = FAMILY_112.format().splitlines()
    assert lines[0] == "# W_C n=112 type I"
    assert "(99176 + a) y^18" in lines
    assert "# W_S" in lines
    assert "(e) y^4" in lines
    assert FAMILY_112.coefficient(2).format() == "0"


def test_substituted_112():
    dist = substitute(FAMILY_112, VALUES_112)
    for weight, count in COUNTS_112.items():
        assert dist[weight] == count
        assert dist[112 - weight] == count
    assert dist.total == 2**56


def test_substituted_112_shadow():
    shadow = substitute_shadow(FAMILY_112, VALUES_112)
    assert shadow.minimum_weight == 16
    assert shadow[16] == 728
    assert shadow.total == 2**56


def test_substitution_rejects_negative_counts():
    values = dict(VALUES_112, a=-100000)
    with pytest.raises(InfeasibleParametersError):
        substitute(FAMILY_112, values)


def test_substitution_needs_every_parameter():
    with pytest.raises(InfeasibleParametersError):
        substitute(FAMILY_112, {"a": 0})
    with pytest.raises(InfeasibleParametersError):
        substitute(FAMILY_112, dict(VALUES_112, f=1))


@given(integers(min_value=-1000, max_value=1000))
def test_parameters_stay_integral(a):
    family = doubly_even_family(120)
    coeffs = family.coefficients_at({"a": a}).combine()
    assert coeffs.is_integral()
    assert coeffs[20] == a


def test_extremal_112():
    family = doubly_even_family(112)
    assert family.parameter_names == []
    assert family.coefficient(20).format() == "355740"
    assert 355740 * 20 // 112 == 63525


@pytest.mark.parametrize(
    "weight, expected",
    [
        (0, "1"),
        (20, "a"),
        (24, "39703755 - 20a"),
        (28, "6101289120 + 190a"),
        (32, "475644139425 - 1140a"),
        (36, "18824510698240 + 4845a"),
        (40, "397450513031544 - 15504a"),
        (44, "4630512364732800 + 38760a"),
        (48, "30531599026535880 - 77520a"),
        (52, "116023977311397120 + 125970a"),
        (56, "257257766776517715 - 167960a"),
        (60, "335200280030755776 + 184756a"),
    ],
)
def test_doubly_even_120_family(weight, expected):
    assert doubly_even_family(120).coefficient(weight).format() == expected


@pytest.mark.parametrize(
    "weight, expected",
    [
        (0, "1"),
        (20, "a"),
        (24, "13228320 - 6a"),
        (28, "2940970496 - 89a"),
        (32, "320411086380 + 1500a"),
        (36, "18072021808640 - 10925a"),
        (40, "552523816524960 + 51186a"),
        (44, "9491115264030720 - 173451a"),
        (48, "94116072808107840 + 449616a"),
        (52, "549827773219608576 - 920550a"),
        (56, "1920594735166941760 + 1518100a"),
        (60, "4051982995220321280 - 2040714a"),
        (64, "5193576851944293670 + 2250664a"),
    ],
)
def test_doubly_even_128_family(weight, expected):
    assert doubly_even_family(128).coefficient(weight).format() == expected


@pytest.mark.parametrize("n", [120, 128])
def test_doubly_even_families_vanish_below_20(n):
    family = doubly_even_family(n)
    for weight in range(1, 20):
        assert family.coefficient(weight).format() == "0"
    for weight in range(2, n, 4):
        assert family.coefficient(weight).format() == "0"


def test_contradicting_pins():
    constraints = FamilyConstraints.minimum_weight(8, GleasonType.II, 4)
    constraints.pin((Side.A, 8), 5)
    with pytest.raises(InconsistentConstraintsError):
        solve_family(8, GleasonType.II, constraints)


def test_anchor_on_unknown_parameter():
    constraints = FamilyConstraints.minimum_weight(
        112, GleasonType.II, 20, anchors={"a": (Side.A, 24)}
    )
    with pytest.raises(OverdeterminedError):
        solve_family(112, GleasonType.II, constraints)


def test_degenerate_anchor():
    constraints = FamilyConstraints.minimum_weight(
        120, GleasonType.II, 20, anchors={"a": (Side.A, 2)}
    )
    with pytest.raises(InconsistentConstraintsError):
        solve_family(120, GleasonType.II, constraints)


def test_doubly_even_family_has_no_shadow():
    family = doubly_even_family(120)
    with pytest.raises(AlreadyDoublyEvenError):
        substitute_shadow(family, {"a": 0})
