from .distribution import (
    DEFAULT_BRUTEFORCE_CAP,
    coset_weight_distribution,
    weight_distribution_bruteforce,
)
from .invariant import gram_invariant, gram_matrix
from .minweight import (
    InformationSet,
    enumerate_weight,
    find_low_weight,
    information_sets,
    min_weight,
    weight_divisor,
)
