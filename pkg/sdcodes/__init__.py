"""Binary self-dual codes: construction, minimum weights, enumerators, shadows."""
from .codes import (
    Code,
    FourCirculantSpec,
    ParityClass,
    four_circulant,
    is_self_dual,
    parity_class,
)
from .enumerators import (
    GleasonType,
    fit_coefficients,
    gleason_basis,
    mallows_sloane,
    solve_family,
    substitute,
    substitute_shadow,
)
from .errors import SdCodesError
from .gf2 import BitMatrix, BitWord
from .models import MinWeightCertificate, WeightDistribution
from .shadow import doubly_even_neighbors, neighbor_via_vector, shadow_decompose
from .weights import (
    enumerate_weight,
    find_low_weight,
    gram_invariant,
    min_weight,
    weight_distribution_bruteforce,
)

__version__ = "0.1.0"
