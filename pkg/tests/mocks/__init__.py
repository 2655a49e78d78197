import os
from typing import List

import numpy as np
import pytest

from sdcodes.codes import Code, FourCirculantSpec, four_circulant
from sdcodes.search import random_spec, screen

slow = pytest.mark.skipif(
    not os.getenv("SDCODES_SLOW"), reason="long run, set SDCODES_SLOW=1"
)

E8_SPEC = FourCirculantSpec.from_strings("01", "11")

# [I4 | I4]: singly even, shadow neighbors are both e8
I4_I4 = [
    "10001000",
    "01000100",
    "00100010",
    "00010001",
]

mock_spec_file = """
# two specs of order 2
01 11
10 00
"""

mock_distribution_file = """
# weight count
0 1
4 14
8 1
"""


def self_dual_specs(
    m: int, count: int, seed: int = 0, doubly_even_only: bool = False
) -> List[FourCirculantSpec]:
    rng = np.random.default_rng(seed)
    specs: List[FourCirculantSpec] = []
    for _ in range(100_000):
        spec = random_spec(m, rng)
        if screen(spec, doubly_even_only):
            specs.append(spec)
        if len(specs) == count:
            break
    return specs


def self_dual_codes(m: int, count: int, seed: int = 0) -> List[Code]:
    return [four_circulant(spec) for spec in self_dual_specs(m, count, seed)]
