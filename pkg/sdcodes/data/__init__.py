"""Vendored generator data and published counts."""
from importlib import resources
from typing import List

from ..codes import (
    Code,
    FourCirculantSpec,
    four_circulant,
    parse_generator_file,
    parse_spec_file,
)
from ..errors import DimensionError, SpecFormatError
from ..gf2 import BitWord

SPEC_FILES = {
    "c112": "c112.txt",
    "e112": "e112.txt",
    "e8": "e8.txt",
    "n120": "n120.txt",
    "n128": "n128.txt",
}


def read_text(filename: str) -> str:
    return resources.files(__name__).joinpath(filename).read_text()


def load_specs(name: str) -> List[FourCirculantSpec]:
    try:
        filename = SPEC_FILES[name]
    except KeyError:
        raise SpecFormatError(f"no vendored code named {name!r}")
    return parse_spec_file(read_text(filename))


def parse_support(text: str, length: int) -> BitWord:
    """Comma-separated 1-indexed coordinates; blank and '#' lines are ignored."""
    coordinates: List[int] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for field in line.split(","):
            if not field.strip():
                continue
            if not field.strip().isdigit():
                raise SpecFormatError(f"bad coordinate {field.strip()!r}", number)
            coordinate = int(field)
            if not 1 <= coordinate <= length:
                raise SpecFormatError(
                    f"coordinate {coordinate} outside 1..{length}", number
                )
            coordinates.append(coordinate)
    return BitWord.from_support(length, coordinates)


def d112_support() -> BitWord:
    return parse_support(read_text("d112_support.txt"), 112)


def weight20_counts(n: int) -> List[int]:
    if n not in (120, 128):
        raise DimensionError(f"no weight-20 count list for length {n}")
    text = read_text(f"weight20_{n}.txt")
    return [
        int(line)
        for line in map(str.strip, text.splitlines())
        if line and not line.startswith("#")
    ]


def golay24() -> Code:
    return Code(parse_generator_file(read_text("golay24.txt")), name="golay24")


def builtin_code(name: str) -> Code:
    """
    Vendored code by name: ``c112``, ``e112``, ``d112``, ``e8``, ``golay24``,
    ``n120:<i>``, ``n128:<i>`` (i counted from 1).
    """
    if name == "golay24":
        return golay24()
    if name == "d112":
        from ..shadow import neighbor_via_vector

        return neighbor_via_vector(builtin_code("c112"), d112_support(), name="d112")
    listing, _, index = name.partition(":")
    specs = load_specs(listing)
    if index and not index.isdigit():
        raise SpecFormatError(f"bad entry number in {name!r}")
    position = int(index) if index else 1
    if not 1 <= position <= len(specs):
        raise SpecFormatError(f"{listing} has {len(specs)} entries, not {position}")
    return four_circulant(specs[position - 1], name=name)
